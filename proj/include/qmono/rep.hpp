#pragma once

#include <map>
#include <string>

#include "qmono/exactmatrix.hpp"
#include "qmono/ncalg.hpp"

namespace qmono {

// Exact finite-dimensional representation of the n-fold cover U_q. Generator
// images satisfy every defining relation; this is enforced at construction.
struct Rep {
    int rank = 0;
    int dim = 0;
    std::string label;
    std::map<Gen, ExactMatrix> images;

    const ExactMatrix& image(const Gen& g) const;
    ExactMatrix K_image(int i) const;     // K_i via the k-word
    ExactMatrix Kinv_image(int i) const;

    // Throws std::logic_error naming the first violated relation.
    void validate() const;
};

// Vector representation: E_i -> e_{i,i+1}, F_i -> e_{i+1,i},
// k_i -> diag(q^{(h^i)_a}) with weights from the inverse Cartan matrix.
Rep fundamental_rep(int n);

// One-dimensional counit representation (E, F -> 0, k -> 1).
Rep counit_rep(int n);

// Tensor product along the coproduct; relations re-checked.
Rep tensor_rep(const Rep& r1, const Rep& r2);

// The default verification set: fund, fund^2, ..., fund^degree.
std::vector<Rep> rep_family(int n, int degree);

// Algebra homomorphism: words to matrix products, sums to sums.
ExactMatrix rep_eval(const NCElem& x, const Rep& r);

}  // namespace qmono
