#include "qmono/tensorop.hpp"

#include <stdexcept>

namespace qmono {

int tensor_pow(int n, int legs) {
    int d = 1;
    for (int i = 0; i < legs; ++i) d *= n;
    return d;
}

TensorOp::TensorOp(int n_, int legs_) : n(n_), legs(legs_) {
    mat = ExactMatrix(tensor_pow(n_, legs_), tensor_pow(n_, legs_));
}

TensorOp TensorOp::identity(int n, int legs) {
    TensorOp t(n, legs);
    t.mat = ExactMatrix::identity(tensor_pow(n, legs));
    return t;
}

TensorOp operator*(const TensorOp& a, const TensorOp& b) {
    if (a.n != b.n || a.legs != b.legs)
        throw std::invalid_argument("TensorOp: leg structure mismatch");
    TensorOp c(a.n, a.legs);
    c.mat = a.mat * b.mat;
    return c;
}

TensorOp operator+(const TensorOp& a, const TensorOp& b) {
    if (a.n != b.n || a.legs != b.legs)
        throw std::invalid_argument("TensorOp: leg structure mismatch");
    TensorOp c(a.n, a.legs);
    c.mat = a.mat + b.mat;
    return c;
}

TensorOp operator-(const TensorOp& a, const TensorOp& b) {
    if (a.n != b.n || a.legs != b.legs)
        throw std::invalid_argument("TensorOp: leg structure mismatch");
    TensorOp c(a.n, a.legs);
    c.mat = a.mat - b.mat;
    return c;
}

bool operator==(const TensorOp& a, const TensorOp& b) {
    return a.n == b.n && a.legs == b.legs && a.mat == b.mat;
}

std::vector<int> digits_of(int index, int n, int legs) {
    std::vector<int> d(legs);
    for (int i = legs - 1; i >= 0; --i) {
        d[i] = index % n;
        index /= n;
    }
    return d;
}

int index_of(const std::vector<int>& digits, int n) {
    int idx = 0;
    for (int d : digits) idx = idx * n + d;
    return idx;
}

TensorOp embed(const TensorOp& op, int slot_i, int slot_j, int total_legs) {
    if (op.legs != 2) throw std::invalid_argument("embed: operator must have two legs");
    if (slot_i < 1 || slot_j <= slot_i || slot_j > total_legs)
        throw std::invalid_argument("embed: bad slots");
    const int n = op.n;
    TensorOp out(n, total_legs);
    const int dim = tensor_pow(n, total_legs);
    for (int row = 0; row < dim; ++row) {
        std::vector<int> rd = digits_of(row, n, total_legs);
        const int op_row = rd[slot_i - 1] * n + rd[slot_j - 1];
        for (const auto& [op_col, v] : op.mat.row(op_row)) {
            std::vector<int> cd = rd;
            cd[slot_i - 1] = op_col / n;
            cd[slot_j - 1] = op_col % n;
            out.mat.add_to(row, index_of(cd, n), v);
        }
    }
    return out;
}

}  // namespace qmono
