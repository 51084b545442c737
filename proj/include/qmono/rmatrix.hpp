#pragma once

#include <map>

#include "qmono/tensorop.hpp"

namespace qmono {

// Sign function eps_{ab}: +1 for a > b, 0 for a = b, -1 for a < b.
inline int eps_sign(int a, int b) { return a > b ? 1 : a < b ? -1 : 0; }

// Drinfeld-Jimbo R-matrix for sl(n):
// R^{ab}_{cd} = q^{1/n} (d^a_c d^b_d + (q^-1 - q^{eps_ab}) d^a_d d^b_c).
TensorOp dj_rmatrix(int n);

// Permutation operator P^{ab}_{cd} = d^a_d d^b_c.
TensorOp permutation_op(int n);

// Braided R-matrix R-hat = P R.
TensorOp rhat(int n);

// R_21 = P R P.
TensorOp dj_rmatrix_21(int n);

// q-deformed totally antisymmetric tensor: components
// q^{-n(n-1)/4} (-q)^{l(a)} on permutations of (n, ..., 1), zero otherwise;
// l is the inversion count relative to the descending base word.
struct EpsTensor {
    int n = 0;
    std::map<std::vector<int>, QExpr> components;  // 1-based index tuples

    QExpr at(const std::vector<int>& idx) const;
};

EpsTensor q_eps(int n);

// Contraction sum_a eps_a eps^a (equals [n]!).
QExpr eps_contraction(int n);

}  // namespace qmono
