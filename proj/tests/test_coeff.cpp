#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qmono/qexpr.hpp"
#include "qmono/ratfun.hpp"

using namespace qmono;

namespace {

QExpr random_qexpr(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), coeff(-5, 5), small(-3, 3), den(1, 4);
    QExpr x;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Exponent e;
        e.q = Frac(small(rng), den(rng));
        e.w = small(rng);
        e.u = small(rng);
        x += QExpr::monomial(make_rational(coeff(rng)), e);
    }
    return x;
}

}  // namespace

TEST_CASE("q-integers expand as balanced Laurent sums") {
    CHECK(qnum(1) == QExpr(1));
    CHECK(qnum(0).is_zero());
    CHECK(qnum(2) == QExpr::q_pow(Frac(1)) + QExpr::q_pow(Frac(-1)));
    // Independent route: [m](q - q^-1) = q^m - q^-m.
    for (long m = 0; m <= 12; ++m) {
        QExpr lhs = qnum(m) * lambda_expr();
        QExpr rhs = QExpr::q_pow(Frac(m)) - QExpr::q_pow(Frac(-m));
        CHECK(lhs == rhs);
    }
    QExpr three = QExpr::q_pow(Frac(2)) + QExpr(1) + QExpr::q_pow(Frac(-2));
    CHECK(qnum(3) == three);
    for (long m = 1; m <= 20; ++m) CHECK(qnum(-m) == -qnum(m));
}

TEST_CASE("q-factorial") {
    CHECK(qfact(0).is_one());
    CHECK(qfact(1).is_one());
    CHECK(qfact(2) == qnum(2));
    CHECK(qfact(3) == qnum(3) * qnum(2) * qnum(1));
    CHECK_THROWS(qfact(-1));
}

TEST_CASE("canonical form: no zero terms survive, normalization idempotent") {
    QExpr a = QExpr::q_pow(Frac(1, 2)) - QExpr::q_pow(Frac(1, 2));
    CHECK(a.is_zero());
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        QExpr x = random_qexpr(rng);
        for (const auto& [e, c] : x.terms()) CHECK(c != 0);
        QExpr y = x + QExpr();  // re-normalizing a normalized value is the identity
        CHECK(x == y);
    }
}

TEST_CASE("ring axioms on randomized triples") {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        QExpr a = random_qexpr(rng), b = random_qexpr(rng), c = random_qexpr(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("field arithmetic reduces to canonical fractions") {
    RatFun half_q(QExpr::q_pow(Frac(1)).scaled(make_rational(1, 2)));
    CHECK(half_q + half_q == RatFun(QExpr::q_pow(Frac(1))));

    RatFun pm1 = qbracket_p(-1), p = qbracket_p(0), pp1 = qbracket_p(1);
    CHECK((pm1 / p) * (p / pm1) == RatFun(1));
    // [p-1][p+1] = [p]^2 - 1
    CHECK(pm1 * pp1 == p * p - RatFun(1));
    CHECK(pm1 * pp1 + RatFun(1) == p * p);

    CHECK_THROWS_AS(RatFun(1) / RatFun(), DivisionByZero);
    CHECK_THROWS_AS(RatFun().inv(), DivisionByZero);
}

TEST_CASE("fraction invariants: monomial shift and monic denominator") {
    // (q w^-1) / (w - w^-1): the denominator is shifted to polynomial form,
    // so it shares no monomial factor with the numerator, and is monic.
    RatFun f(QExpr::q_pow(Frac(1)) * QExpr::w_pow(-1),
             QExpr::w_pow(1) - QExpr::w_pow(-1));
    CHECK(f.den().leading().second == 1);
    Exponent md = f.den().min_exponents();
    CHECK(md.w == 0);
    CHECK(md.q == Frac(0));
    CHECK(f.num() == QExpr::q_pow(Frac(1)));
    CHECK(f.den() == QExpr::w_pow(2) - QExpr(1));
    // Denominator scaled by -3: same value, same canonical form.
    RatFun g((QExpr::q_pow(Frac(1)) * QExpr::w_pow(-1)).scaled(make_rational(-3)),
             (QExpr::w_pow(1) - QExpr::w_pow(-1)).scaled(make_rational(-3)));
    CHECK(f.num() == g.num());
    CHECK(f.den() == g.den());
}

TEST_CASE("cross-multiplication equality sees through surviving common factors") {
    // (q^2 - 1)/(q - 1) vs (q + 1)/1
    QExpr q = QExpr::q_pow(Frac(1));
    RatFun a(q * q - QExpr(1), q - QExpr(1));
    RatFun b(q + QExpr(1));
    CHECK(a == b);
    CHECK(a - b == RatFun());
}

TEST_CASE("evaluation at roots of unity") {
    const double pi = 3.14159265358979323846;
    CHECK(std::abs(eval_at_root(QExpr::q_pow(Frac(2)), 2, 1.0, 1.0) -
                   std::complex<double>(-1.0, 0.0)) < 1e-14);
    // [2] at h = 4 is 2 cos(pi/4) = sqrt(2)
    CHECK(std::abs(eval_at_root(qnum(2), 4, 1.0, 1.0) -
                   std::complex<double>(std::sqrt(2.0), 0.0)) < 1e-13);
    // lambda at h = 2 is 2i sin(-pi/2) = -2i
    CHECK(std::abs(eval_at_root(lambda_expr(), 2, 1.0, 1.0) -
                   std::complex<double>(0.0, -2.0)) < 1e-14);
    // q itself
    CHECK(std::abs(eval_at_root(QExpr::q_pow(Frac(1)), 5, 1.0, 1.0) -
                   std::exp(std::complex<double>(0.0, -pi / 5.0))) < 1e-14);
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(23);
    EvalPoint pt;
    pt.h = 7;
    pt.w = {2.0, 0.0};
    pt.u = {0.5, 0.25};
    for (int i = 0; i < 100; ++i) {
        QExpr a = random_qexpr(rng), b = random_qexpr(rng);
        auto va = a.eval(pt), vb = b.eval(pt);
        auto sum = (a + b).eval(pt), prod = (a * b).eval(pt);
        double scale_s = std::max(1.0, std::abs(va) + std::abs(vb));
        double scale_p = std::max(1.0, std::abs(va) * std::abs(vb));
        CHECK(std::abs(sum - (va + vb)) / scale_s < 1e-12);
        CHECK(std::abs(prod - va * vb) / scale_p < 1e-12);
    }
}

TEST_CASE("exponent denominators stay within the rank bound") {
    for (int n = 2; n <= 4; ++n) {
        QExpr pref = QExpr::q_pow(Frac(1, n) - Frac(n)) * QExpr::q_pow(Frac(-n * (n - 1), 4));
        for (const auto& [e, c] : pref.terms()) CHECK(e.q.den <= 4 * n);
    }
}

TEST_CASE("field axioms on randomized fractions") {
    std::mt19937 rng(53);
    auto random_ratfun = [&](bool nonzero) {
        for (;;) {
            QExpr num = random_qexpr(rng);
            QExpr den = random_qexpr(rng);
            if (den.is_zero()) continue;
            RatFun f(num, den);
            if (!nonzero || !f.is_zero()) return f;
        }
    };
    for (int i = 0; i < 60; ++i) {
        RatFun a = random_ratfun(false), b = random_ratfun(false), c = random_ratfun(false);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        RatFun d = random_ratfun(true);
        CHECK((a / d) * d == a);
        CHECK(d * d.inv() == RatFun(1));
    }
}

TEST_CASE("substitutions") {
    QExpr x = QExpr::q_pow(Frac(1)) * QExpr::w_pow(2) + QExpr::w_pow(-1);
    // w -> q^3: q * q^6 + q^-3
    CHECK(x.subst_w_qpow(Frac(3)) == QExpr::q_pow(Frac(7)) + QExpr::q_pow(Frac(-3)));
    // q -> 1: w^2 + w^-1
    CHECK(x.subst_q_one() == QExpr::w_pow(2) + QExpr::w_pow(-1));
}

TEST_CASE("stable text form") {
    CHECK(QExpr().str() == "0");
    CHECK(qnum(3).str() == "q^(2) + 1 + q^(-2)");
    CHECK(lambda_expr().str() == "q - q^(-1)");
    QExpr m = QExpr::monomial(make_rational(-1, 2), Exponent{Frac(1, 2), 2, 0, {0, 0, 0}});
    CHECK(m.str() == "-1/2*q^(1/2)*w^(2)");
    // [p] reduced: the denominator is shifted to polynomial form.
    CHECK(qbracket_p(0).str() == "(q*w - q*w^(-1)) / (q^(2) - 1)");
}
