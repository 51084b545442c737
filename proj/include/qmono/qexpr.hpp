#pragma once

#include <array>
#include <complex>
#include <gmpxx.h>
#include <map>
#include <string>

#include "qmono/rational.hpp"

namespace qmono {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Evaluation point for the numeric backend: q = exp(-i*pi/h), plus values for
// the auxiliary commuting units.
struct EvalPoint {
    long h = 5;
    std::complex<double> w{1.0, 0.0};
    std::complex<double> u{1.0, 0.0};
    std::array<std::complex<double>, 3> wi{{{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}}};
};

// Monomial exponent vector: q carries an exact rational exponent, the
// commuting units w = q^p, u = q^{alpha(p)} and the barycentric units
// w1..w3 = q^{p_i} carry integers. Ordered lexicographically (r_q, r_w, r_u,
// then the barycentric block); this order also defines "greatest monomial".
struct Exponent {
    Frac q;
    std::int32_t w = 0;
    std::int32_t u = 0;
    std::array<std::int32_t, 3> wi{0, 0, 0};

    friend bool operator<(const Exponent& a, const Exponent& b) {
        if (a.q != b.q) return a.q < b.q;
        if (a.w != b.w) return a.w < b.w;
        if (a.u != b.u) return a.u < b.u;
        return a.wi < b.wi;
    }
    friend bool operator==(const Exponent& a, const Exponent& b) {
        return a.q == b.q && a.w == b.w && a.u == b.u && a.wi == b.wi;
    }

    Exponent operator+(const Exponent& o) const {
        Exponent r;
        r.q = q + o.q;
        r.w = w + o.w;
        r.u = u + o.u;
        for (int i = 0; i < 3; ++i) r.wi[i] = wi[i] + o.wi[i];
        return r;
    }
    Exponent operator-(const Exponent& o) const {
        Exponent r;
        r.q = q - o.q;
        r.w = w - o.w;
        r.u = u - o.u;
        for (int i = 0; i < 3; ++i) r.wi[i] = wi[i] - o.wi[i];
        return r;
    }
    bool is_zero() const {
        return q.is_zero() && w == 0 && u == 0 && wi == std::array<std::int32_t, 3>{0, 0, 0};
    }

    std::string str() const;
};

// Exact sum of monomials c * q^{r} w^{a} u^{b} w1^{..} w2^{..} w3^{..} with
// rational c. Canonical form: unique exponent keys, no zero coefficients.
class QExpr {
public:
    using TermMap = std::map<Exponent, Rational>;

    QExpr() = default;
    QExpr(long c) { if (c != 0) terms_[Exponent{}] = make_rational(c); }
    explicit QExpr(const Rational& c) { if (c != 0) terms_[Exponent{}] = c; }

    static QExpr monomial(const Rational& coeff, const Exponent& e);
    static QExpr q_pow(const Frac& r);
    static QExpr w_pow(std::int32_t a);
    static QExpr u_pow(std::int32_t a);
    static QExpr wi_pow(int which, std::int32_t a);  // which in 0..2

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    // Coefficient at a given exponent (0 if absent).
    Rational coeff(const Exponent& e) const;
    // Greatest monomial in the lexicographic order; expression must be nonzero.
    const std::pair<const Exponent, Rational>& leading() const;
    // gcd of all coefficients, as a positive rational; 0 for the zero expression.
    Rational content() const;
    // Componentwise minimum of all exponent vectors; expression must be nonzero.
    Exponent min_exponents() const;

    QExpr& operator+=(const QExpr& o);
    QExpr& operator-=(const QExpr& o);
    friend QExpr operator+(QExpr a, const QExpr& b) { return a += b; }
    friend QExpr operator-(QExpr a, const QExpr& b) { return a -= b; }
    friend QExpr operator*(const QExpr& a, const QExpr& b);
    QExpr operator-() const;
    QExpr scaled(const Rational& c) const;
    QExpr shifted(const Exponent& e) const;  // multiply by the monomial q^e...
    QExpr pow(unsigned k) const;

    friend bool operator==(const QExpr& a, const QExpr& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QExpr& a, const QExpr& b) { return !(a == b); }

    // Substitutions used by the classical-limit and specialization checks.
    QExpr subst_q_one() const;             // q -> 1 (exponent of q dropped)
    QExpr subst_w_qpow(const Frac& t) const;  // w -> q^t

    std::complex<double> eval(const EvalPoint& p) const;

    std::string str() const;

private:
    void insert(const Exponent& e, const Rational& c);
    TermMap terms_;
};

// q-integer [m] = (q^m - q^-m)/(q - q^-1), expanded.
QExpr qnum(long m);
// q-factorial [m]! = [m][m-1]...[1]; [0]! = 1.
QExpr qfact(long m);

inline QExpr lambda_expr() { return QExpr::q_pow(Frac(1)) - QExpr::q_pow(Frac(-1)); }

// Principal-branch evaluation at q = exp(-i*pi/h) with given values for w, u.
std::complex<double> eval_at_root(const QExpr& x, long h, std::complex<double> w_val,
                                  std::complex<double> u_val);

}  // namespace qmono
