#include "qmono/exactmatrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qmono {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.rows_[i].push_back({i, RatFun(1)});
    return m;
}

void ExactMatrix::set(int i, int j, const RatFun& v) {
    auto& r = rows_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const auto& p, int col) { return p.first < col; });
    if (it != r.end() && it->first == j) {
        if (v.is_zero()) r.erase(it);
        else it->second = v;
    } else if (!v.is_zero()) {
        r.insert(it, {j, v});
    }
}

void ExactMatrix::add_to(int i, int j, const RatFun& v) {
    if (v.is_zero()) return;
    auto& r = rows_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const auto& p, int col) { return p.first < col; });
    if (it != r.end() && it->first == j) {
        it->second += v;
        if (it->second.is_zero()) r.erase(it);
    } else {
        r.insert(it, {j, v});
    }
}

RatFun ExactMatrix::get(int i, int j) const {
    const auto& r = rows_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const auto& p, int col) { return p.first < col; });
    if (it != r.end() && it->first == j) return it->second;
    return RatFun();
}

bool ExactMatrix::is_zero() const {
    for (const auto& r : rows_)
        if (!r.empty()) return false;
    return true;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.ncols_ != b.ncols_)
        throw std::invalid_argument("ExactMatrix: shape mismatch");
    ExactMatrix c = a;
    for (int i = 0; i < b.rows(); ++i)
        for (const auto& [j, v] : b.rows_[i]) c.add_to(i, j, v);
    return c;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.ncols_ != b.ncols_)
        throw std::invalid_argument("ExactMatrix: shape mismatch");
    ExactMatrix c = a;
    for (int i = 0; i < b.rows(); ++i)
        for (const auto& [j, v] : b.rows_[i]) c.add_to(i, j, -v);
    return c;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.ncols_ != b.rows()) throw std::invalid_argument("ExactMatrix: shape mismatch");
    ExactMatrix c(a.rows(), b.ncols_);
    for (int i = 0; i < a.rows(); ++i) {
        std::map<int, RatFun> acc;
        for (const auto& [k, av] : a.rows_[i]) {
            for (const auto& [j, bv] : b.rows_[k]) {
                auto [it, fresh] = acc.emplace(j, av * bv);
                if (!fresh) it->second += av * bv;
            }
        }
        auto& row = c.rows_[i];
        row.reserve(acc.size());
        for (auto& [j, v] : acc)
            if (!v.is_zero()) row.push_back({j, std::move(v)});
    }
    return c;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix c = *this;
    for (auto& r : c.rows_)
        for (auto& [j, v] : r) v = -v;
    return c;
}

ExactMatrix ExactMatrix::scaled(const RatFun& s) const {
    ExactMatrix c(rows(), ncols_);
    if (s.is_zero()) return c;
    for (int i = 0; i < rows(); ++i)
        for (const auto& [j, v] : rows_[i]) c.rows_[i].push_back({j, v * s});
    return c;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& o) const {
    ExactMatrix c(rows() * o.rows(), ncols_ * o.ncols_);
    for (int i = 0; i < rows(); ++i)
        for (const auto& [j, v] : rows_[i])
            for (int p = 0; p < o.rows(); ++p)
                for (const auto& [r, w] : o.rows_[p])
                    c.rows_[i * o.rows() + p].push_back({j * o.ncols_ + r, v * w});
    for (auto& r : c.rows_)
        std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return c;
}

std::optional<std::string> ExactMatrix::witness() const {
    Frac best;
    std::pair<int, int> pos;
    bool found = false;
    for (int i = 0; i < rows(); ++i) {
        for (const auto& [j, v] : rows_[i]) {
            Frac deg = v.num().leading().first.q;
            if (!found || best < deg) {
                best = deg;
                pos = {i, j};
                found = true;
            }
        }
    }
    if (!found) return std::nullopt;
    return "(" + std::to_string(pos.first) + "," + std::to_string(pos.second) +
           "): " + get(pos.first, pos.second).str();
}

std::size_t ExactMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

}  // namespace qmono
