#pragma once

#include <vector>

#include "qmono/qexpr.hpp"

namespace qmono {

// sl(n) Cartan matrix data: c is (n-1)x(n-1) integer, c_inv its exact inverse.
struct CartanData {
    int n = 0;
    std::vector<std::vector<long>> c;
    std::vector<std::vector<Rational>> c_inv;
    Rational det;
};

// Builds c, its determinant and exact inverse; the closed-form inverse
// (c^-1)^{ij} = j(1 - i/n) for j <= i, i(1 - j/n) for j > i is cross-checked
// against direct elimination at construction.
CartanData cartan(int n);

}  // namespace qmono
