#pragma once

#include "qmono/tensorop.hpp"

namespace qmono {

// Diagonal monodromy M_p = q^{1 - 1/n} diag(q^{-2 p_1}, ..., q^{-2 p_n}) with
// q^{p_i} carried by the barycentric units w1..w_{n-1} and the last one
// eliminated through prod q^{p_i} = 1. Supported for n = 2..4.
TensorOp build_Mp(int n);
TensorOp build_Mp_inverse(int n);

// (q^{2 sigma_12})^{ij}_{lm} = q^{2(delta_ij - 1/n)} delta^i_l delta^j_m.
TensorOp build_q2sigma(int n);

// The n = 2 dynamical braid matrices R-hat^{+-1}(p), entries in q, w = q^p and
// the formal unit u = q^{alpha(p)}.
TensorOp build_Rp(int sign);

// The n = 2 M_p written in w = q^{p_1 - p_2} (barycentric substitution).
TensorOp mp_n2_in_w(bool inverse);

// Vacuum weights p^0_i = (n+1)/2 - i.
struct WeightVector {
    std::vector<Frac> p0;
};
WeightVector vacuum_weights(int n);

}  // namespace qmono
