#include "qmono/qdet.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmono {

NCElem qdet_free(int n) {
    if (n < 2 || n > 3) throw std::domain_error("qdet_free: supported for n = 2, 3");
    // Composite operator C = R-hat_{12} ... R-hat_{n-1,n} on L = n legs.
    TensorOp C = TensorOp::identity(n, n);
    TensorOp rh = rhat(n);
    for (int i = 1; i <= n - 1; ++i) C = C * embed(rh, i, n);
    const int dim = tensor_pow(n, n);

    // B = C M_n with the free-symbol matrix on the last leg; sparse rows.
    std::vector<std::vector<std::pair<int, NCElem>>> B(dim);
    for (int i = 0; i < dim; ++i) {
        for (const auto& [k, c] : C.mat.row(i)) {
            const int head = k / n, kn = k % n;
            for (int t = 0; t < n; ++t)
                B[i].push_back({head * n + t,
                                NCElem::term(c, Word{gen_sym(kn + 1, t + 1)})});
        }
    }

    // Row vector from the epsilon tensor, then n right multiplications.
    const EpsTensor eps = q_eps(n);
    std::vector<NCElem> u(dim);
    for (const auto& [idx, c] : eps.components) {
        std::vector<int> digits(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) digits[i] = idx[i] - 1;
        u[index_of(digits, n)] = NCElem(c);
    }
    for (int step = 0; step < n; ++step) {
        std::vector<NCElem> next(dim);
        for (int i = 0; i < dim; ++i) {
            if (u[i].is_zero()) continue;
            for (const auto& [j, b] : B[i]) next[j] += u[i] * b;
        }
        u = std::move(next);
    }

    NCElem det;
    for (const auto& [idx, c] : eps.components) {
        std::vector<int> digits(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) digits[i] = idx[i] - 1;
        det += u[index_of(digits, n)].scaled(RatFun(c));
    }
    return det.scaled(RatFun(qfact(n)).inv());
}

NCElem qdet_triangular(int n, const AlgMatrix& m) {
    const EpsTensor eps = q_eps(n);
    NCElem det;
    for (const auto& [alpha, ca] : eps.components) {
        for (const auto& [beta, cb] : eps.components) {
            NCElem prod(1);
            bool dead = false;
            for (int pos = n - 1; pos >= 0; --pos) {  // reversed entry order
                const NCElem& entry = m.at(alpha[pos] - 1, beta[pos] - 1);
                if (entry.is_zero()) { dead = true; break; }
                prod = prod * entry;
            }
            if (dead) continue;
            det += prod.scaled(RatFun(ca * cb));
        }
    }
    return det.scaled(RatFun(qfact(n)).inv());
}

std::map<Gen, NCElem> entry_table(const AlgMatrix& m) {
    std::map<Gen, NCElem> t;
    for (int a = 1; a <= m.size(); ++a)
        for (int b = 1; b <= m.size(); ++b) t[gen_sym(a, b)] = m.at(a - 1, b - 1);
    return t;
}

NCElem classical_specialization(const NCElem& x) {
    NCElem r;
    for (const auto& [w, c] : x.terms()) r += NCElem::term(c.subst_q_one(), w);
    return r.commutative_image();
}

RatFun qdet_free_scalar(int n, const RatFun& c) {
    AlgMatrix scalar(n);
    for (int i = 0; i < n; ++i) scalar.at(i, i) = NCElem(c);
    NCElem det = qdet_free(n).substitute(entry_table(scalar));
    // The result is a pure coefficient.
    for (const auto& [w, k] : det.terms())
        if (!w.empty()) throw std::logic_error("qdet_free_scalar: non-scalar result");
    return det.is_zero() ? RatFun() : det.terms().begin()->second;
}

}  // namespace qmono
