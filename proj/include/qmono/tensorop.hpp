#pragma once

#include "qmono/exactmatrix.hpp"

namespace qmono {

// Linear operator on the L-fold tensor power of an n-dimensional space.
// Basis indices are linearized row-major with the leftmost leg most
// significant; the same convention fixes the epsilon index tuples.
struct TensorOp {
    int n = 0;
    int legs = 0;
    ExactMatrix mat;

    TensorOp() = default;
    TensorOp(int n_, int legs_);

    int dim() const { return mat.rows(); }

    friend TensorOp operator*(const TensorOp& a, const TensorOp& b);
    friend TensorOp operator+(const TensorOp& a, const TensorOp& b);
    friend TensorOp operator-(const TensorOp& a, const TensorOp& b);
    friend bool operator==(const TensorOp& a, const TensorOp& b);
    friend bool operator!=(const TensorOp& a, const TensorOp& b) { return !(a == b); }

    static TensorOp identity(int n, int legs);
};

int tensor_pow(int n, int legs);
std::vector<int> digits_of(int index, int n, int legs);
int index_of(const std::vector<int>& digits, int n);

// Places a two-leg operator on legs (i, j) of an L-leg space, identity
// elsewhere; i < j, non-adjacent pairs supported (1-based slots).
TensorOp embed(const TensorOp& op, int slot_i, int slot_j, int total_legs);
inline TensorOp embed(const TensorOp& op, int slot, int total_legs) {
    return embed(op, slot, slot + 1, total_legs);
}

}  // namespace qmono
