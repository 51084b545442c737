#pragma once

#include <stdexcept>
#include <string>

#include "qmono/qexpr.hpp"

namespace qmono {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero in the coefficient field") {}
};

// Reduced fraction of two QExpr values. Canonical form: the common monomial
// factor is divided out (the union of numerator and denominator supports has
// componentwise minimal exponent zero) and the denominator's greatest monomial
// has coefficient +1. Full polynomial gcd is deliberately not attempted;
// equality is decided by cross-multiplication.
class RatFun {
public:
    RatFun() : num_(), den_(1) {}
    RatFun(long c) : num_(c), den_(1) {}
    RatFun(QExpr n) : num_(std::move(n)), den_(1) { normalize(); }
    RatFun(QExpr n, QExpr d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw DivisionByZero();
        normalize();
    }

    const QExpr& num() const { return num_; }
    const QExpr& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool den_is_one() const { return den_.is_one(); }

    RatFun inv() const {
        if (num_.is_zero()) throw DivisionByZero();
        return RatFun(den_, num_);
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inv(); }
    RatFun operator-() const { return RatFun(-num_, den_); }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

    // Exact equality of values (cross-multiplication).
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    std::complex<double> eval(const EvalPoint& p) const;

    RatFun subst_q_one() const { return RatFun(num_.subst_q_one(), den_.subst_q_one()); }

    std::string str() const;

private:
    void normalize();
    QExpr num_, den_;
};

inline RatFun qnum_r(long m) { return RatFun(qnum(m)); }

// The symbolic bracket [p + j] = (q^j w - q^-j w^-1)/(q - q^-1), with w = q^p.
RatFun qbracket_p(long j);

}  // namespace qmono
