#include "qmono/algmatrix.hpp"

#include <stdexcept>

namespace qmono {

AlgMatrix AlgMatrix::identity(int n) {
    AlgMatrix m(n);
    for (int i = 0; i < n; ++i) m.e_[i][i] = NCElem(1);
    return m;
}

AlgMatrix operator*(const AlgMatrix& a, const AlgMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("AlgMatrix: size mismatch");
    AlgMatrix c(a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j) {
            NCElem s;
            for (int k = 0; k < a.n_; ++k) {
                if (a.e_[i][k].is_zero() || b.e_[k][j].is_zero()) continue;
                s += a.e_[i][k] * b.e_[k][j];
            }
            c.e_[i][j] = std::move(s);
        }
    return c;
}

AlgMatrix operator+(const AlgMatrix& a, const AlgMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("AlgMatrix: size mismatch");
    AlgMatrix c = a;
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j) c.e_[i][j] += b.e_[i][j];
    return c;
}

AlgMatrix operator-(const AlgMatrix& a, const AlgMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("AlgMatrix: size mismatch");
    AlgMatrix c = a;
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j) c.e_[i][j] -= b.e_[i][j];
    return c;
}

AlgMatrix AlgMatrix::scaled(const RatFun& c) const {
    AlgMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.e_[i][j] = e_[i][j].scaled(c);
    return m;
}

bool AlgMatrix::is_zero() const {
    for (const auto& row : e_)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

bool AlgMatrix::strictly_upper() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j <= i; ++j)
            if (!e_[i][j].is_zero()) return false;
    return true;
}

bool AlgMatrix::strictly_lower() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            if (!e_[i][j].is_zero()) return false;
    return true;
}

NCElem cw_lowering(int i, int j) {
    if (j <= i) throw std::invalid_argument("cw_lowering: need i < j");
    if (j == i + 1) return NCElem::generator(gen_F(i));
    return q_commutator(NCElem::generator(gen_F(j - 1)), cw_lowering(i, j - 1),
                        QExpr::q_pow(Frac(1)));
}

NCElem cw_raising(int j, int i) {
    if (j <= i) throw std::invalid_argument("cw_raising: need j > i");
    if (j == i + 1) return NCElem::generator(gen_E(i));
    return q_commutator(cw_raising(j - 1, i), NCElem::generator(gen_E(j - 1)),
                        QExpr::q_pow(Frac(-1)));
}

AlgMatrix build_D(int n) {
    AlgMatrix d(n);
    for (int a = 1; a <= n; ++a) {
        Word w;
        if (a - 1 >= 1) w.push_back(gen_k(a - 1));
        if (a <= n - 1) w.push_back(gen_kinv(a));
        d.at(a - 1, a - 1) = NCElem::word(w);
    }
    return d;
}

AlgMatrix build_Dinv(int n) {
    AlgMatrix d(n);
    for (int a = 1; a <= n; ++a) {
        Word w;
        if (a <= n - 1) w.push_back(gen_k(a));
        if (a - 1 >= 1) w.push_back(gen_kinv(a - 1));
        d.at(a - 1, a - 1) = NCElem::word(w);
    }
    return d;
}

std::pair<AlgMatrix, AlgMatrix> build_Npm(int n) {
    if (n < 2 || n > 4) throw std::domain_error("build_Npm: shipped tables cover n = 2..4");
    AlgMatrix np(n), nm(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            np.at(i - 1, j - 1) = cw_lowering(i, j);
            nm.at(j - 1, i - 1) = cw_raising(j, i);
        }
    return {np, nm};
}

std::pair<AlgMatrix, AlgMatrix> build_Mpm(int n) {
    auto [np, nm] = build_Npm(n);
    const RatFun lambda{lambda_expr()};
    AlgMatrix id = AlgMatrix::identity(n);
    AlgMatrix mplus = (id - np.scaled(lambda)) * build_D(n);
    AlgMatrix mminus = build_Dinv(n) * (id + nm.scaled(lambda));
    return {mplus, mminus};
}

AlgMatrix invert_unipotent(const AlgMatrix& m) {
    const int n = m.size();
    AlgMatrix x = m - AlgMatrix::identity(n);
    if (!x.strictly_upper() && !x.strictly_lower())
        throw std::invalid_argument("invert_unipotent: input is not unipotent triangular");
    AlgMatrix acc = AlgMatrix::identity(n);
    AlgMatrix pw = AlgMatrix::identity(n);
    for (int j = 1; j <= n - 1; ++j) {
        pw = pw * x;
        acc = (j % 2 == 1) ? acc - pw : acc + pw;
    }
    return acc;
}

AlgMatrix build_Mminus_inverse(int n) {
    auto [np, nm] = build_Npm(n);
    (void)np;
    const RatFun lambda{lambda_expr()};
    AlgMatrix u = AlgMatrix::identity(n) + nm.scaled(lambda);
    return invert_unipotent(u) * build_D(n);
}

AlgMatrix build_M(int n) {
    auto [mp, mm] = build_Mpm(n);
    (void)mm;
    AlgMatrix m = mp * build_Mminus_inverse(n);
    const RatFun pref{QExpr::q_pow(Frac(1, n) - Frac(n))};
    return m.scaled(pref);
}

}  // namespace qmono
