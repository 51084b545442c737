#include "qmono/qexpr.hpp"

#include <cmath>
#include <stdexcept>

namespace qmono {

std::string Exponent::str() const {
    static const char* aux_names[3] = {"w1", "w2", "w3"};
    std::string s;
    auto put = [&s](const std::string& name, const std::string& e) {
        if (!s.empty()) s += "*";
        if (e == "1") s += name;
        else s += name + "^(" + e + ")";
    };
    if (!q.is_zero()) put("q", q.str());
    if (w != 0) put("w", std::to_string(w));
    if (u != 0) put("u", std::to_string(u));
    for (int i = 0; i < 3; ++i)
        if (wi[i] != 0) put(aux_names[i], std::to_string(wi[i]));
    return s;
}

void QExpr::insert(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QExpr QExpr::monomial(const Rational& coeff, const Exponent& e) {
    QExpr r;
    r.insert(e, coeff);
    return r;
}

QExpr QExpr::q_pow(const Frac& r) {
    Exponent e;
    e.q = r;
    return monomial(make_rational(1), e);
}

QExpr QExpr::w_pow(std::int32_t a) {
    Exponent e;
    e.w = a;
    return monomial(make_rational(1), e);
}

QExpr QExpr::u_pow(std::int32_t a) {
    Exponent e;
    e.u = a;
    return monomial(make_rational(1), e);
}

QExpr QExpr::wi_pow(int which, std::int32_t a) {
    if (which < 0 || which > 2) throw std::out_of_range("QExpr::wi_pow: unit index");
    Exponent e;
    e.wi[which] = a;
    return monomial(make_rational(1), e);
}

bool QExpr::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_zero() && terms_.begin()->second == 1;
}

Rational QExpr::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? make_rational(0) : it->second;
}

const std::pair<const Exponent, Rational>& QExpr::leading() const {
    if (terms_.empty()) throw std::domain_error("QExpr::leading: zero expression");
    return *terms_.rbegin();
}

Rational QExpr::content() const {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    if (num_gcd == 0) return make_rational(0);
    Rational r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

Exponent QExpr::min_exponents() const {
    if (terms_.empty()) throw std::domain_error("QExpr::min_exponents: zero expression");
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        if (e.q < m.q) m.q = e.q;
        m.w = std::min(m.w, e.w);
        m.u = std::min(m.u, e.u);
        for (int i = 0; i < 3; ++i) m.wi[i] = std::min(m.wi[i], e.wi[i]);
    }
    return m;
}

QExpr& QExpr::operator+=(const QExpr& o) {
    for (const auto& [e, c] : o.terms_) insert(e, c);
    return *this;
}

QExpr& QExpr::operator-=(const QExpr& o) {
    for (const auto& [e, c] : o.terms_) insert(e, -c);
    return *this;
}

QExpr operator*(const QExpr& a, const QExpr& b) {
    QExpr r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.insert(ea + eb, ca * cb);
    return r;
}

QExpr QExpr::operator-() const {
    QExpr r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

QExpr QExpr::scaled(const Rational& c) const {
    QExpr r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

QExpr QExpr::shifted(const Exponent& e) const {
    QExpr r;
    for (const auto& [k, c] : terms_) r.terms_[k + e] = c;
    return r;
}

QExpr QExpr::pow(unsigned k) const {
    QExpr r(1);
    for (unsigned i = 0; i < k; ++i) r = r * (*this);
    return r;
}

QExpr QExpr::subst_q_one() const {
    QExpr r;
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        f.q = Frac(0);
        r.insert(f, c);
    }
    return r;
}

QExpr QExpr::subst_w_qpow(const Frac& t) const {
    QExpr r;
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        f.q = e.q + t * Frac(e.w);
        f.w = 0;
        r.insert(f, c);
    }
    return r;
}

namespace {

std::complex<double> int_pow(std::complex<double> base, long k) {
    if (k < 0) return 1.0 / int_pow(base, -k);
    std::complex<double> r{1.0, 0.0};
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

}  // namespace

std::complex<double> QExpr::eval(const EvalPoint& p) const {
    if (p.h < 2) throw std::domain_error("QExpr::eval: h must be >= 2");
    const double pi = 3.14159265358979323846;
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [e, c] : terms_) {
        // Principal branch: q^r = exp(-i*pi*r/h) for rational r.
        std::complex<double> m = std::polar(1.0, -pi * e.q.to_double() / static_cast<double>(p.h));
        m *= int_pow(p.w, e.w);
        m *= int_pow(p.u, e.u);
        for (int i = 0; i < 3; ++i) m *= int_pow(p.wi[i], e.wi[i]);
        acc += m * c.get_d();
    }
    if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag()))
        throw std::domain_error("QExpr::eval: non-finite result");
    return acc;
}

std::string QExpr::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    // Greatest monomial first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational c = it->second;
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        std::string mono = it->first.str();
        if (mono.empty()) s += a.get_str();
        else if (a == 1) s += mono;
        else s += a.get_str() + "*" + mono;
    }
    return s;
}

QExpr qnum(long m) {
    if (m < 0) return -qnum(-m);
    QExpr r;
    for (long e = m - 1; e >= 1 - m; e -= 2) r += QExpr::q_pow(Frac(e));
    return r;
}

QExpr qfact(long m) {
    if (m < 0) throw std::domain_error("qfact: negative argument");
    QExpr r(1);
    for (long k = 2; k <= m; ++k) r = r * qnum(k);
    return r;
}

std::complex<double> eval_at_root(const QExpr& x, long h, std::complex<double> w_val,
                                  std::complex<double> u_val) {
    EvalPoint p;
    p.h = h;
    p.w = w_val;
    p.u = u_val;
    return x.eval(p);
}

}  // namespace qmono
