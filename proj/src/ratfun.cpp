#include "qmono/ratfun.hpp"

namespace qmono {

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = QExpr(1);
        return;
    }
    // Monomial shift: the denominator becomes a genuine polynomial with
    // componentwise minimal exponent 0, so no positive monomial divides it;
    // a Laurent numerator over a unit denominator stays as it is.
    Exponent shift = den_.min_exponents();
    if (!shift.is_zero()) {
        Exponent neg = Exponent{} - shift;
        num_ = num_.shifted(neg);
        den_ = den_.shifted(neg);
    }
    const Rational lead = den_.leading().second;
    if (lead != 1) {
        Rational s = 1 / lead;
        num_ = num_.scaled(s);
        den_ = den_.scaled(s);
    }
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ - b.num_, a.den_);
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

std::complex<double> RatFun::eval(const EvalPoint& p) const {
    std::complex<double> d = den_.eval(p);
    if (std::abs(d) < 1e-14) throw DivisionByZero();
    return num_.eval(p) / d;
}

std::string RatFun::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RatFun qbracket_p(long j) {
    QExpr num = QExpr::q_pow(Frac(j)) * QExpr::w_pow(1) -
                QExpr::q_pow(Frac(-j)) * QExpr::w_pow(-1);
    return RatFun(num, lambda_expr());
}

}  // namespace qmono
