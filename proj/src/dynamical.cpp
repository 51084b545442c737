#include "qmono/dynamical.hpp"

#include <stdexcept>

#include "qmono/ratfun.hpp"

namespace qmono {

namespace {

// q^{-2 p_i} with w_n eliminated: w_i^{-2} for i < n, (w_1 ... w_{n-1})^2
// for i = n.
QExpr qp_power(int n, int i, int mult) {
    QExpr r(1);
    if (i < n) {
        r = QExpr::wi_pow(i - 1, static_cast<std::int32_t>(mult));
    } else {
        for (int j = 0; j < n - 1; ++j) r = r * QExpr::wi_pow(j, static_cast<std::int32_t>(-mult));
    }
    return r;
}

}  // namespace

TensorOp build_Mp(int n) {
    if (n < 2 || n > 4) throw std::domain_error("build_Mp: barycentric units cover n = 2..4");
    TensorOp t(n, 1);
    const QExpr pref = QExpr::q_pow(Frac(1) - Frac(1, n));
    for (int i = 1; i <= n; ++i)
        t.mat.set(i - 1, i - 1, RatFun(pref * qp_power(n, i, -2)));
    return t;
}

TensorOp build_Mp_inverse(int n) {
    if (n < 2 || n > 4) throw std::domain_error("build_Mp_inverse: barycentric units cover n = 2..4");
    TensorOp t(n, 1);
    const QExpr pref = QExpr::q_pow(Frac(1, n) - Frac(1));
    for (int i = 1; i <= n; ++i)
        t.mat.set(i - 1, i - 1, RatFun(pref * qp_power(n, i, 2)));
    return t;
}

TensorOp build_q2sigma(int n) {
    if (n < 2) throw std::domain_error("build_q2sigma: n must be >= 2");
    TensorOp t(n, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Frac exp = Frac(2 * (i == j ? 1 : 0)) - Frac(2, n);
            t.mat.set(i * n + j, i * n + j, RatFun(QExpr::q_pow(exp)));
        }
    return t;
}

TensorOp build_Rp(int sign) {
    if (sign != 1 && sign != -1) throw std::domain_error("build_Rp: sign must be +-1");
    TensorOp t(2, 2);
    const RatFun pref{QExpr::q_pow(Frac(sign, 2))};
    const RatFun corner{QExpr::q_pow(Frac(-sign))};
    const RatFun bracket_p = qbracket_p(0);
    const RatFun inv_p = bracket_p.inv();
    // q^{-+p}/[p] and -q^{+-p}/[p]
    const RatFun wpow_m{QExpr::w_pow(-sign)};
    const RatFun wpow_p{QExpr::w_pow(sign)};
    const RatFun um{QExpr::u_pow(-1)};
    const RatFun up{QExpr::u_pow(1)};
    t.mat.set(0, 0, pref * corner);
    t.mat.set(3, 3, pref * corner);
    t.mat.set(1, 1, pref * wpow_m * inv_p);
    t.mat.set(1, 2, pref * um * qbracket_p(-1) * inv_p);
    t.mat.set(2, 1, pref * up * qbracket_p(1) * inv_p);
    t.mat.set(2, 2, -(pref * wpow_p * inv_p));
    return t;
}

TensorOp mp_n2_in_w(bool inverse) {
    TensorOp t(2, 1);
    const int s = inverse ? -1 : 1;
    const RatFun pref{QExpr::q_pow(Frac(s, 2))};
    t.mat.set(0, 0, pref * RatFun(QExpr::w_pow(-s)));
    t.mat.set(1, 1, pref * RatFun(QExpr::w_pow(s)));
    return t;
}

WeightVector vacuum_weights(int n) {
    if (n < 2) throw std::domain_error("vacuum_weights: n must be >= 2");
    WeightVector v;
    for (int i = 1; i <= n; ++i) v.p0.push_back(Frac(n + 1, 2) - Frac(i));
    return v;
}

}  // namespace qmono
