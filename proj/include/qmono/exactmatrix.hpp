#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmono/ratfun.hpp"

namespace qmono {

// Sparse exact matrix over the coefficient field. Rows hold (column, value)
// pairs sorted by column; zero values are never stored.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : ncols_(cols), rows_(rows) {}

    static ExactMatrix identity(int n);

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return ncols_; }

    void set(int i, int j, const RatFun& v);
    void add_to(int i, int j, const RatFun& v);
    RatFun get(int i, int j) const;
    const std::vector<std::pair<int, RatFun>>& row(int i) const { return rows_[i]; }

    bool is_zero() const;
    bool is_identity() const { return *this == identity(rows()); }

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    ExactMatrix operator-() const;
    ExactMatrix scaled(const RatFun& c) const;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    ExactMatrix kron(const ExactMatrix& o) const;

    // Entry of the difference with the highest q-degree numerator, as a
    // witness string "(i,j): value"; nullopt when the matrix is zero.
    std::optional<std::string> witness() const;

    std::size_t nonzeros() const;

private:
    int ncols_ = 0;
    std::vector<std::vector<std::pair<int, RatFun>>> rows_;
};

}  // namespace qmono
