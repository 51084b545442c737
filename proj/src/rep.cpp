#include "qmono/rep.hpp"

#include <stdexcept>

#include "qmono/cartan.hpp"

namespace qmono {

const ExactMatrix& Rep::image(const Gen& g) const {
    auto it = images.find(g);
    if (it == images.end()) throw std::out_of_range("Rep: no image for generator " + g.str());
    return it->second;
}

ExactMatrix Rep::K_image(int i) const {
    ExactMatrix m = ExactMatrix::identity(dim);
    if (i - 1 >= 1) m = m * image(gen_kinv(i - 1));
    m = m * image(gen_k(i)) * image(gen_k(i));
    if (i + 1 <= rank - 1) m = m * image(gen_kinv(i + 1));
    return m;
}

ExactMatrix Rep::Kinv_image(int i) const {
    ExactMatrix m = ExactMatrix::identity(dim);
    if (i - 1 >= 1) m = m * image(gen_k(i - 1));
    m = m * image(gen_kinv(i)) * image(gen_kinv(i));
    if (i + 1 <= rank - 1) m = m * image(gen_k(i + 1));
    return m;
}

void Rep::validate() const {
    const int n = rank;
    const ExactMatrix id = ExactMatrix::identity(dim);
    const RatFun lambda{lambda_expr()};
    auto require = [&](bool ok, const std::string& what) {
        if (!ok) throw std::logic_error("Rep(" + label + "): relation failed: " + what);
    };
    for (int i = 1; i <= n - 1; ++i) {
        require(image(gen_k(i)) * image(gen_kinv(i)) == id, "k k^-1 = 1");
        for (int j = 1; j <= n - 1; ++j) {
            const ExactMatrix& ki = image(gen_k(i));
            require(ki * image(gen_k(j)) == image(gen_k(j)) * ki, "k_i k_j = k_j k_i");
            // k_i E_j = q^{delta_ij} E_j k_i and the F mirror.
            const RatFun qd{QExpr::q_pow(Frac(i == j ? 1 : 0))};
            const RatFun qdinv{QExpr::q_pow(Frac(i == j ? -1 : 0))};
            require(ki * image(gen_E(j)) == (image(gen_E(j)) * ki).scaled(qd), "k_i E_j");
            require(ki * image(gen_F(j)) == (image(gen_F(j)) * ki).scaled(qdinv), "k_i F_j");
            // [E_i, F_j] = delta_ij (K_i - K_i^-1)/lambda.
            ExactMatrix lhs = image(gen_E(i)) * image(gen_F(j)) - image(gen_F(j)) * image(gen_E(i));
            ExactMatrix rhs(dim, dim);
            if (i == j) rhs = (K_image(i) - Kinv_image(i)).scaled(lambda.inv());
            require(lhs == rhs, "[E_i, F_j]");
        }
    }
    // q-Serre relations, n > 2.
    const RatFun two{qnum(2)};
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = 1; j <= n - 1; ++j) {
            if (std::abs(i - j) == 1) {
                auto serre = [&](const ExactMatrix& a, const ExactMatrix& b) {
                    return a * a * b + b * a * a == (a * b * a).scaled(two);
                };
                require(serre(image(gen_E(i)), image(gen_E(j))), "Serre E");
                require(serre(image(gen_F(i)), image(gen_F(j))), "Serre F");
            } else if (std::abs(i - j) > 1) {
                auto comm = [&](const ExactMatrix& a, const ExactMatrix& b) {
                    return a * b == b * a;
                };
                require(comm(image(gen_E(i)), image(gen_E(j))), "[E_i, E_j] = 0");
                require(comm(image(gen_F(i)), image(gen_F(j))), "[F_i, F_j] = 0");
            }
        }
    }
}

Rep fundamental_rep(int n) {
    if (n < 2) throw std::domain_error("fundamental_rep: n must be >= 2");
    Rep r;
    r.rank = n;
    r.dim = n;
    r.label = "fund";
    const CartanData cd = cartan(n);
    for (int i = 1; i <= n - 1; ++i) {
        ExactMatrix e(n, n), f(n, n), k(n, n), kinv(n, n);
        e.set(i - 1, i, RatFun(1));
        f.set(i, i - 1, RatFun(1));
        for (int a = 1; a <= n; ++a) {
            // (h^i)_a = (c^-1)^{i,a} - (c^-1)^{i,a-1}, boundary entries zero.
            Rational hv = make_rational(0);
            if (a <= n - 1) hv += cd.c_inv[i - 1][a - 1];
            if (a - 1 >= 1) hv -= cd.c_inv[i - 1][a - 2];
            Frac exp(hv.get_num().get_si(), hv.get_den().get_si());
            k.set(a - 1, a - 1, RatFun(QExpr::q_pow(exp)));
            kinv.set(a - 1, a - 1, RatFun(QExpr::q_pow(-exp)));
        }
        r.images[gen_E(i)] = e;
        r.images[gen_F(i)] = f;
        r.images[gen_k(i)] = k;
        r.images[gen_kinv(i)] = kinv;
    }
    r.validate();
    return r;
}

Rep counit_rep(int n) {
    Rep r;
    r.rank = n;
    r.dim = 1;
    r.label = "counit";
    for (int i = 1; i <= n - 1; ++i) {
        ExactMatrix zero(1, 1), one(1, 1);
        one.set(0, 0, RatFun(1));
        r.images[gen_E(i)] = zero;
        r.images[gen_F(i)] = zero;
        r.images[gen_k(i)] = one;
        r.images[gen_kinv(i)] = one;
    }
    r.validate();
    return r;
}

Rep tensor_rep(const Rep& r1, const Rep& r2) {
    if (r1.rank != r2.rank) throw std::invalid_argument("tensor_rep: rank mismatch");
    Rep r;
    r.rank = r1.rank;
    r.dim = r1.dim * r2.dim;
    r.label = r1.label + "(x)" + r2.label;
    const ExactMatrix id1 = ExactMatrix::identity(r1.dim);
    const ExactMatrix id2 = ExactMatrix::identity(r2.dim);
    for (int i = 1; i <= r.rank - 1; ++i) {
        r.images[gen_E(i)] =
            r1.image(gen_E(i)).kron(r2.K_image(i)) + id1.kron(r2.image(gen_E(i)));
        r.images[gen_F(i)] =
            r1.image(gen_F(i)).kron(id2) + r1.Kinv_image(i).kron(r2.image(gen_F(i)));
        r.images[gen_k(i)] = r1.image(gen_k(i)).kron(r2.image(gen_k(i)));
        r.images[gen_kinv(i)] = r1.image(gen_kinv(i)).kron(r2.image(gen_kinv(i)));
    }
    r.validate();
    return r;
}

std::vector<Rep> rep_family(int n, int degree) {
    std::vector<Rep> fam;
    Rep f = fundamental_rep(n);
    fam.push_back(f);
    for (int d = 2; d <= degree; ++d) {
        Rep t = tensor_rep(fam.back(), f);
        t.label = "fund^" + std::to_string(d);
        fam.push_back(std::move(t));
    }
    return fam;
}

ExactMatrix rep_eval(const NCElem& x, const Rep& r) {
    ExactMatrix acc(r.dim, r.dim);
    for (const auto& [w, c] : x.terms()) {
        ExactMatrix m = ExactMatrix::identity(r.dim);
        for (const Gen& g : w) m = m * r.image(g);
        acc = acc + m.scaled(c);
    }
    return acc;
}

}  // namespace qmono
