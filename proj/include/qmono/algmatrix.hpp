#pragma once

#include <vector>

#include "qmono/ncalg.hpp"

namespace qmono {

// Square matrix with noncommutative entries.
class AlgMatrix {
public:
    AlgMatrix() = default;
    explicit AlgMatrix(int n) : n_(n), e_(n, std::vector<NCElem>(n)) {}

    static AlgMatrix identity(int n);

    int size() const { return n_; }
    NCElem& at(int i, int j) { return e_.at(i).at(j); }
    const NCElem& at(int i, int j) const { return e_.at(i).at(j); }

    friend AlgMatrix operator*(const AlgMatrix& a, const AlgMatrix& b);
    friend AlgMatrix operator+(const AlgMatrix& a, const AlgMatrix& b);
    friend AlgMatrix operator-(const AlgMatrix& a, const AlgMatrix& b);
    AlgMatrix scaled(const RatFun& c) const;

    bool is_zero() const;
    bool strictly_upper() const;
    bool strictly_lower() const;

private:
    int n_ = 0;
    std::vector<std::vector<NCElem>> e_;
};

// Cartan-Weyl generators filling the off-diagonals of N+-: the lowering
// element for the root segment [i, j) and its mirrored raising partner.
// f(i, i+1) = F_i, f(i, j) = [F_{j-1}, f(i, j-1)]_q;
// e(i+1, i) = E_i, e(j, i) = [e(j-1, i), E_{j-1}]_{q^-1}.
NCElem cw_lowering(int i, int j);
NCElem cw_raising(int j, int i);

// D = diag(d_a), d_a = k_{a-1} k_a^-1 with k_0 = k_n = 1.
AlgMatrix build_D(int n);
AlgMatrix build_Dinv(int n);

// The nilpotent Cartan-Weyl matrices (N+, N-); shipped for 2 <= n <= 4.
std::pair<AlgMatrix, AlgMatrix> build_Npm(int n);

// M+ = (1 - lambda N+) D,  M- = D^-1 (1 + lambda N-).
std::pair<AlgMatrix, AlgMatrix> build_Mpm(int n);

// Inverse of a unipotent triangular matrix by the finite Neumann sum; the
// product with the input is the identity already in the free algebra.
AlgMatrix invert_unipotent(const AlgMatrix& m);

// M- inverse = (1 + lambda N-)^-1 D.
AlgMatrix build_Mminus_inverse(int n);

// M = q^{1/n - n} M+ M-^-1.
AlgMatrix build_M(int n);

}  // namespace qmono
