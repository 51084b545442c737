#pragma once

#include "qmono/algmatrix.hpp"
#include "qmono/rmatrix.hpp"

namespace qmono {

// Quantum determinant of the free-symbol matrix (m^a_b): the epsilon
// contraction of the n-th power of R-hat_{12} ... R-hat_{n-1,n} M_n acting on
// the n-leg tensor space, divided by [n]!. Supported for n = 2, 3.
NCElem qdet_free(int n);

// Epsilon-contracted determinant of a triangular factor, with the reversed
// entry order (M)^{a_n}_{b_n} ... (M)^{a_1}_{b_1}; no R-matrix involved.
NCElem qdet_triangular(int n, const AlgMatrix& m);

// Substitution table sending the free symbol m[a,b] to the (a,b) entry.
std::map<Gen, NCElem> entry_table(const AlgMatrix& m);

// qdet_free(n) with every free symbol replaced by c * delta^a_b.
RatFun qdet_free_scalar(int n, const RatFun& c);

// q -> 1 with commuting entries: coefficients specialized, letters sorted.
NCElem classical_specialization(const NCElem& x);

}  // namespace qmono
