#include "qmono/cartan.hpp"

#include <stdexcept>

namespace qmono {

namespace {

// Exact Gaussian elimination; returns (det, inverse).
std::pair<Rational, std::vector<std::vector<Rational>>> invert(
    std::vector<std::vector<Rational>> a) {
    const int m = static_cast<int>(a.size());
    std::vector<std::vector<Rational>> inv(m, std::vector<Rational>(m, make_rational(0)));
    for (int i = 0; i < m; ++i) inv[i][i] = make_rational(1);
    Rational det = make_rational(1);
    for (int col = 0; col < m; ++col) {
        int pivot = -1;
        for (int r = col; r < m; ++r)
            if (a[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("cartan: singular matrix");
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(inv[pivot], inv[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational p = 1 / a[col][col];
        for (int j = 0; j < m; ++j) {
            a[col][j] *= p;
            inv[col][j] *= p;
        }
        for (int r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (int j = 0; j < m; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return {det, inv};
}

}  // namespace

CartanData cartan(int n) {
    if (n < 2) throw std::domain_error("cartan: n must be >= 2");
    CartanData d;
    d.n = n;
    const int m = n - 1;
    d.c.assign(m, std::vector<long>(m, 0));
    for (int i = 0; i < m; ++i) {
        d.c[i][i] = 2;
        if (i > 0) d.c[i][i - 1] = -1;
        if (i + 1 < m) d.c[i][i + 1] = -1;
    }
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a[i][j] = make_rational(d.c[i][j]);
    auto [det, inv] = invert(std::move(a));
    d.det = det;
    d.c_inv = std::move(inv);

    // Closed form: (c^-1)^{ij} = j(1 - i/n) for j <= i, i(1 - j/n) for j > i
    // (1-based indices).
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            Rational closed = j <= i ? make_rational(j * (n - i), n) : make_rational(i * (n - j), n);
            if (closed != d.c_inv[i - 1][j - 1])
                throw std::logic_error("cartan: closed-form inverse mismatch");
        }
    }
    return d;
}

}  // namespace qmono
