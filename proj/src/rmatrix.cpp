#include "qmono/rmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmono {

TensorOp dj_rmatrix(int n) {
    if (n < 2) throw std::domain_error("dj_rmatrix: n must be >= 2");
    TensorOp R(n, 2);
    const QExpr pref = QExpr::q_pow(Frac(1, n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const int row = a * n + b;
            // delta^a_c delta^b_d part
            R.mat.add_to(row, a * n + b, RatFun(pref));
            // (q^-1 - q^{eps_ab}) delta^a_d delta^b_c part
            QExpr coeff = QExpr::q_pow(Frac(-1)) - QExpr::q_pow(Frac(eps_sign(a, b)));
            R.mat.add_to(row, b * n + a, RatFun(pref * coeff));
        }
    }
    return R;
}

TensorOp permutation_op(int n) {
    TensorOp P(n, 2);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) P.mat.set(a * n + b, b * n + a, RatFun(1));
    return P;
}

TensorOp rhat(int n) { return permutation_op(n) * dj_rmatrix(n); }

TensorOp dj_rmatrix_21(int n) {
    TensorOp P = permutation_op(n);
    return P * dj_rmatrix(n) * P;
}

QExpr EpsTensor::at(const std::vector<int>& idx) const {
    auto it = components.find(idx);
    return it == components.end() ? QExpr() : it->second;
}

EpsTensor q_eps(int n) {
    if (n < 2) throw std::domain_error("q_eps: n must be >= 2");
    EpsTensor e;
    e.n = n;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    const QExpr pref = QExpr::q_pow(Frac(-static_cast<long>(n) * (n - 1), 4));
    do {
        // Length relative to the descending word (n, ..., 1): pairs in
        // ascending order.
        long l = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] < perm[j]) ++l;
        QExpr c = pref;
        // (-q)^l
        c = c * QExpr::q_pow(Frac(l));
        if (l % 2 == 1) c = -c;
        e.components[perm] = c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return e;
}

QExpr eps_contraction(int n) {
    EpsTensor e = q_eps(n);
    QExpr sum;
    for (const auto& [idx, c] : e.components) sum += c * c;
    return sum;
}

}  // namespace qmono
