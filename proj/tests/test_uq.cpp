#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmono/algmatrix.hpp"
#include "qmono/cartan.hpp"
#include "qmono/hopf.hpp"
#include "qmono/rep.hpp"
#include "qmono/rewrite.hpp"

using namespace qmono;

namespace {

// Rank by Gaussian elimination on a dense copy; matrices here are tiny.
int rank_of(const ExactMatrix& m) {
    std::vector<std::vector<RatFun>> a(m.rows(), std::vector<RatFun>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i)) a[i][j] = v;
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (!a[r][col].is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[rank]);
        for (int r = rank + 1; r < m.rows(); ++r) {
            if (a[r][col].is_zero()) continue;
            RatFun f = a[r][col] / a[rank][col];
            for (int j = col; j < m.cols(); ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

ExactMatrix diag_qpow(std::initializer_list<Frac> exps) {
    ExactMatrix m(static_cast<int>(exps.size()), static_cast<int>(exps.size()));
    int i = 0;
    for (const Frac& e : exps) {
        m.set(i, i, RatFun(QExpr::q_pow(e)));
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("Cartan matrix data") {
    CartanData c2 = cartan(2);
    CHECK(c2.det == 2);
    CHECK(c2.c_inv[0][0] == make_rational(1, 2));

    CartanData c3 = cartan(3);
    CHECK(c3.det == 3);
    CHECK(c3.c_inv[0][0] == make_rational(2, 3));
    CHECK(c3.c_inv[0][1] == make_rational(1, 3));
    CHECK(c3.c_inv[1][0] == make_rational(1, 3));
    CHECK(c3.c_inv[1][1] == make_rational(2, 3));

    for (int n = 2; n <= 10; ++n) {
        CartanData cd = cartan(n);  // closed form cross-checked inside
        CHECK(cd.det == n);
        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < n - 1; ++j) {
                Rational s = 0;
                for (int l = 0; l < n - 1; ++l) s += cd.c[i][l] * cd.c_inv[l][j];
                CHECK(s == (i == j ? 1 : 0));
            }
    }
}

TEST_CASE("diagonal matrix D and its telescoping determinant") {
    AlgMatrix d2 = build_D(2);
    CHECK(d2.at(0, 0) == NCElem::word({gen_kinv(1)}));
    CHECK(d2.at(1, 1) == NCElem::word({gen_k(1)}));

    AlgMatrix d3 = build_D(3);
    CHECK(d3.at(0, 0) == NCElem::word({gen_kinv(1)}));
    CHECK(d3.at(1, 1) == NCElem::word({gen_k(1), gen_kinv(2)}));
    CHECK(d3.at(2, 2) == NCElem::word({gen_k(2)}));

    for (int n = 2; n <= 4; ++n) {
        RewriteSystem rs = cartan_system(n);
        AlgMatrix d = build_D(n), dinv = build_Dinv(n);
        NCElem prod(1);
        for (int a = 0; a < n; ++a) prod = prod * d.at(a, a);
        CHECK(rs.normal_form(prod).is_one());
        for (int a = 0; a < n; ++a)
            CHECK(rs.normal_form(d.at(a, a) * dinv.at(a, a)).is_one());
    }
}

TEST_CASE("Cartan-Weyl matrices N+-") {
    auto [np2, nm2] = build_Npm(2);
    CHECK(np2.at(0, 1) == NCElem::generator(gen_F(1)));
    CHECK(nm2.at(1, 0) == NCElem::generator(gen_E(1)));
    CHECK(np2.strictly_upper());
    CHECK(nm2.strictly_lower());

    auto [np3, nm3] = build_Npm(3);
    const QExpr q = QExpr::q_pow(Frac(1)), qi = QExpr::q_pow(Frac(-1));
    NCElem f1 = NCElem::generator(gen_F(1)), f2 = NCElem::generator(gen_F(2));
    NCElem e1 = NCElem::generator(gen_E(1)), e2 = NCElem::generator(gen_E(2));
    CHECK(np3.at(0, 1) == f1);
    CHECK(np3.at(1, 2) == f2);
    CHECK(np3.at(0, 2) == q_commutator(f2, f1, q));
    CHECK(nm3.at(1, 0) == e1);
    CHECK(nm3.at(2, 1) == e2);
    CHECK(nm3.at(2, 0) == q_commutator(e1, e2, qi));

    // n = 4 extends the same nesting pattern.
    auto [np4, nm4] = build_Npm(4);
    NCElem f3 = NCElem::generator(gen_F(3)), e3 = NCElem::generator(gen_E(3));
    CHECK(np4.at(0, 3) == q_commutator(f3, q_commutator(f2, f1, q), q));
    CHECK(nm4.at(3, 0) == q_commutator(q_commutator(e1, e2, qi), e3, qi));

    // x_i y_i = -lambda^2 with the fixed symmetric choice x = -lambda, y = lambda.
    QExpr x = -lambda_expr(), y = lambda_expr();
    CHECK(x * y == -(lambda_expr() * lambda_expr()));
}

TEST_CASE("triangular factors M+-") {
    auto [mp, mm] = build_Mpm(2);
    const RatFun lambda{lambda_expr()};
    CHECK(mp.at(0, 1) == NCElem::word({gen_F(1), gen_k(1)}).scaled(-lambda));
    CHECK(mm.at(1, 0) == NCElem::word({gen_kinv(1), gen_E(1)}).scaled(lambda));
    CHECK(mp.at(1, 0).is_zero());
    CHECK(mm.at(0, 1).is_zero());

    for (int n = 2; n <= 4; ++n) {
        auto [p, m] = build_Mpm(n);
        AlgMatrix d = build_D(n), dinv = build_Dinv(n);
        for (int a = 0; a < n; ++a) {
            CHECK(p.at(a, a) == d.at(a, a));   // diag M+ = D
            CHECK(m.at(a, a) == dinv.at(a, a));  // diag M- = D^-1
            for (int b = 0; b < a; ++b) CHECK(p.at(a, b).is_zero());
            for (int b = a + 1; b < n; ++b) CHECK(m.at(a, b).is_zero());
        }
    }
}

TEST_CASE("unipotent inverse") {
    const RatFun lambda{lambda_expr()};
    for (int n = 2; n <= 4; ++n) {
        auto [np, nm] = build_Npm(n);
        (void)np;
        AlgMatrix u = AlgMatrix::identity(n) + nm.scaled(lambda);
        AlgMatrix inv = invert_unipotent(u);
        CHECK((u * inv - AlgMatrix::identity(n)).is_zero());  // free algebra, no relations
        CHECK((inv * u - AlgMatrix::identity(n)).is_zero());
    }
    // n = 2: inverse is 1 - lambda N-.
    auto [np2, nm2] = build_Npm(2);
    (void)np2;
    AlgMatrix u2 = AlgMatrix::identity(2) + nm2.scaled(lambda);
    CHECK((invert_unipotent(u2) - (AlgMatrix::identity(2) - nm2.scaled(lambda))).is_zero());

    // n = 3 closed form: the (3,1) entry equals -lambda [E1, E2]_q already in
    // the free algebra.
    auto [np3, nm3] = build_Npm(3);
    (void)np3;
    AlgMatrix u3 = AlgMatrix::identity(3) + nm3.scaled(lambda);
    NCElem e31 = invert_unipotent(u3).at(2, 0);
    NCElem closed = q_commutator(NCElem::generator(gen_E(1)), NCElem::generator(gen_E(2)),
                                 QExpr::q_pow(Frac(1)))
                        .scaled(-lambda);
    CHECK(e31 == closed);

    CHECK_THROWS_AS(invert_unipotent(build_D(2)), std::invalid_argument);
}

TEST_CASE("monodromy matrix entries at n = 2") {
    AlgMatrix m = build_M(2);
    const RatFun lambda{lambda_expr()};
    const RatFun qm12{QExpr::q_pow(Frac(-1, 2))};
    const RatFun qm32{QExpr::q_pow(Frac(-3, 2))};
    const Gen E = gen_E(1), F = gen_F(1), k = gen_k(1), kinv = gen_kinv(1);

    // m^2_2 = q^{-3/2} K, m^1_2 = -q^{-3/2} lambda F K,
    // m^2_1 = -q^{-1/2} lambda E, m^1_1 = q^{-3/2} K^-1 + q^{-1/2} lambda^2 F k E k^-1.
    CHECK(m.at(1, 1) == NCElem::word({k, k}).scaled(qm32));
    CHECK(m.at(0, 1) == NCElem::word({F, k, k}).scaled(-(qm32 * lambda)));
    CHECK(sl2_system().normal_form(m.at(1, 0) -
                                   NCElem::word({E}).scaled(-(qm12 * lambda)))
              .is_zero());
    NCElem m11_expect = NCElem::word({kinv, kinv}).scaled(qm32) +
                        NCElem::word({F, E}).scaled(qm12 * lambda * lambda);
    CHECK(sl2_system().normal_form(m.at(0, 0) - m11_expect).is_zero());
}

TEST_CASE("fundamental representation") {
    Rep r2 = fundamental_rep(2);
    CHECK(r2.image(gen_k(1)) == diag_qpow({Frac(1, 2), Frac(-1, 2)}));
    CHECK(r2.K_image(1) == diag_qpow({Frac(1), Frac(-1)}));
    // [E, F] image is diag(1, -1)
    ExactMatrix comm = r2.image(gen_E(1)) * r2.image(gen_F(1)) -
                       r2.image(gen_F(1)) * r2.image(gen_E(1));
    ExactMatrix expect(2, 2);
    expect.set(0, 0, RatFun(1));
    expect.set(1, 1, RatFun(-1));
    CHECK(comm == expect);

    for (int n = 2; n <= 4; ++n) {
        Rep r = fundamental_rep(n);
        // product of d_a images is the identity
        ExactMatrix prod = ExactMatrix::identity(n);
        AlgMatrix d = build_D(n);
        for (int a = 0; a < n; ++a) prod = prod * rep_eval(d.at(a, a), r);
        CHECK(prod.is_identity());
        // K_i via the k-word equals diag(q^{(H_i)_a})
        for (int i = 1; i <= n - 1; ++i) {
            ExactMatrix k_route = r.K_image(i);
            ExactMatrix h_route(n, n);
            for (int a = 1; a <= n; ++a) {
                int h = (a == i) - (a == i + 1);
                h_route.set(a - 1, a - 1, RatFun(QExpr::q_pow(Frac(h))));
            }
            CHECK(k_route == h_route);
        }
    }
}

TEST_CASE("representation family validates the defining relations") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<Rep> fam = rep_family(n, 3);  // validate() runs at construction
        CHECK(fam.size() == 3);
        CHECK(fam[2].dim == n * n * n);
    }
}

TEST_CASE("tensor representation structure") {
    Rep f = fundamental_rep(2);
    Rep ff = tensor_rep(f, f);
    CHECK(rank_of(ff.image(gen_E(1))) == 2);
    // tensor with the counit representation is the original
    Rep c = counit_rep(2);
    Rep cf = tensor_rep(c, f);
    for (int i = 1; i <= 1; ++i) {
        CHECK(cf.image(gen_E(i)) == f.image(gen_E(i)));
        CHECK(cf.image(gen_F(i)) == f.image(gen_F(i)));
        CHECK(cf.image(gen_k(i)) == f.image(gen_k(i)));
    }
}

TEST_CASE("rep_eval is an algebra homomorphism") {
    Rep r = fundamental_rep(3);
    CHECK(rep_eval(NCElem(1), r).is_identity());
    const RatFun inv_lambda = RatFun(lambda_expr()).inv();
    for (int n = 2; n <= 4; ++n) {
        Rep f = fundamental_rep(n);
        for (int i = 1; i <= n - 1; ++i) {
            NCElem rel = commutator(NCElem::generator(gen_E(i)), NCElem::generator(gen_F(i))) -
                         (cartan_K(i, n) - cartan_Kinv(i, n)).scaled(inv_lambda);
            CHECK(rep_eval(rel, f).is_zero());
        }
    }
    // m^1_1 of build_M(2) against independently assembled 2x2 matrices.
    Rep f2 = fundamental_rep(2);
    ExactMatrix fe(2, 2), kinv2(2, 2);
    fe.set(1, 1, RatFun(1));  // F E = e_22
    kinv2.set(0, 0, RatFun(QExpr::q_pow(Frac(-1))));
    kinv2.set(1, 1, RatFun(QExpr::q_pow(Frac(1))));
    const RatFun lambda{lambda_expr()};
    ExactMatrix expect = fe.scaled(RatFun(QExpr::q_pow(Frac(-1, 2))) * lambda * lambda) +
                         kinv2.scaled(RatFun(QExpr::q_pow(Frac(-3, 2))));
    CHECK(rep_eval(build_M(2).at(0, 0), f2) == expect);

    CHECK_THROWS_AS(rep_eval(NCElem::generator(gen_E(3)), f2), std::out_of_range);
}

TEST_CASE("coalgebra maps on generators") {
    NCTensor dk = coproduct(NCElem::generator(gen_k(1)), 2);
    NCTensor expect = NCTensor::from(NCElem::generator(gen_k(1)), NCElem::generator(gen_k(1)));
    CHECK(dk == expect);

    CHECK(counit(NCElem::generator(gen_E(1))).is_zero());
    CHECK(counit(NCElem::generator(gen_k(1))).is_one());
    CHECK(counit(NCElem::generator(gen_F(1))).is_zero());

    NCElem sE = antipode(NCElem::generator(gen_E(1)), 2);
    CHECK(sE == -(NCElem::generator(gen_E(1)) * cartan_Kinv(1, 2)));
    NCElem sF = antipode(NCElem::generator(gen_F(1)), 2);
    CHECK(sF == -(cartan_K(1, 2) * NCElem::generator(gen_F(1))));
}

TEST_CASE("coproduct of M+ entries is the matrix coproduct (n = 2, symbolic)") {
    auto [mp, mm] = build_Mpm(2);
    AlgMatrix d = build_D(2);
    RewriteSystem rs = cartan_system(2);
    // Delta((M+)^1_2) = d_1 (x) (M+)^1_2 + (M+)^1_2 (x) d_2
    NCTensor lhs = coproduct(mp.at(0, 1), 2).reduced(rs);
    NCTensor rhs = NCTensor::from(d.at(0, 0), mp.at(0, 1)) +
                   NCTensor::from(mp.at(0, 1), d.at(1, 1));
    CHECK(lhs == rhs.reduced(rs));
    // Group-like diagonal, both factors.
    for (int a = 0; a < 2; ++a) {
        NCTensor dd = coproduct(d.at(a, a), 2).reduced(rs);
        CHECK(dd == NCTensor::from(d.at(a, a), d.at(a, a)).reduced(rs));
        CHECK(counit(d.at(a, a)).is_one());
    }
    (void)mm;
}

TEST_CASE("Hopf axioms for generators, symbolically where the free algebra suffices") {
    for (int n = 2; n <= 3; ++n) {
        RewriteSystem rs = cartan_system(n);
        for (int i = 1; i <= n - 1; ++i) {
            for (const Gen& g : {gen_E(i), gen_F(i), gen_k(i), gen_kinv(i)}) {
                NCElem x = NCElem::generator(g);
                NCTensor dx = coproduct(x, n);
                // (eps (x) id) Delta = id = (id (x) eps) Delta
                CHECK(rs.normal_form(dx.counit_left() - x).is_zero());
                CHECK(rs.normal_form(dx.counit_right() - x).is_zero());
                // m(S (x) id) Delta = eps(.) 1 = m(id (x) S) Delta
                NCElem eps1 = NCElem(counit(x));
                CHECK(rs.normal_form(dx.mult_antipode_left(n) - eps1).is_zero());
                CHECK(rs.normal_form(dx.mult_antipode_right(n) - eps1).is_zero());
            }
        }
    }
}

TEST_CASE("q-exponent denominators across the built matrices respect 4n") {
    for (int n = 2; n <= 4; ++n) {
        AlgMatrix m = build_M(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (const auto& [w, c] : m.at(i, j).terms()) {
                    for (const auto& [e, k] : c.num().terms()) CHECK(e.q.den <= 4 * n);
                    for (const auto& [e, k] : c.den().terms()) CHECK(e.q.den <= 4 * n);
                }
    }
}

TEST_CASE("constructor domain errors") {
    CHECK_THROWS_AS(build_Npm(5), std::domain_error);
    CHECK_THROWS_AS(build_Npm(1), std::domain_error);
    CHECK_THROWS_AS(cartan(1), std::domain_error);
    CHECK_THROWS_AS(fundamental_rep(1), std::domain_error);
}

TEST_CASE("counit representation sends M+- to the identity") {
    for (int n = 2; n <= 4; ++n) {
        Rep c = counit_rep(n);
        auto [mp, mm] = build_Mpm(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                RatFun exp_val = a == b ? RatFun(1) : RatFun();
                CHECK(rep_eval(mp.at(a, b), c).get(0, 0) == exp_val);
                CHECK(rep_eval(mm.at(a, b), c).get(0, 0) == exp_val);
            }
    }
}
