#include <doctest.h>

#include <random>

#include "tcc/exactfield.hpp"

using namespace tcc;

namespace {

PerturbedScalar eps(int i) { return PerturbedScalar::epsilon(i); }

Poly random_poly(std::mt19937_64& rng, int max_vars = 3, int max_terms = 3, int max_exp = 2) {
    Poly p;
    int terms = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_terms));
    for (int t = 0; t < terms; ++t) {
        Exp e(static_cast<size_t>(max_vars), 0);
        for (auto& x : e) x = static_cast<int>(rng() % static_cast<uint64_t>(max_exp + 1));
        long num = static_cast<long>(rng() % 11) - 5;
        long den = 1 + static_cast<long>(rng() % 3);
        if (num != 0) p.add_term(e, Rat(num, den));
    }
    return p;
}

PerturbedScalar random_scalar(std::mt19937_64& rng) {
    Poly num = random_poly(rng);
    Poly den;
    do {
        den = random_poly(rng);
    } while (den.is_zero());
    return PerturbedScalar(num, den);
}

}  // namespace

TEST_CASE("field arithmetic on the worked examples") {
    CHECK(eps(1) * eps(1) == PerturbedScalar(Poly::variable(1) * Poly::variable(1), Poly(Rat(1))));
    CHECK((PerturbedScalar(1) - eps(1)) + eps(1) == PerturbedScalar(1));

    // p(1 - e1) + q e2 at p = 5, q = 2
    auto b = PerturbedScalar(5) * (PerturbedScalar(1) - eps(1)) + PerturbedScalar(2) * eps(2);
    Poly expect(Rat(5));
    expect.add_term({1}, Rat(-5));
    expect.add_term({0, 1}, Rat(2));
    CHECK(b.num() == expect);
    CHECK(b.den() == Poly(Rat(1)));
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(PerturbedScalar(1) / PerturbedScalar(0), Error);
}

TEST_CASE("sign in the eps -> 0+ order") {
    CHECK((eps(1) - eps(2)).sign() == 1);
    auto e1_5 = eps(1) * eps(1) * eps(1) * eps(1) * eps(1);
    CHECK((eps(2) - e1_5).sign() == -1);
    CHECK((PerturbedScalar(Rat(-3, 2)) + eps(1)).sign() == -1);
    CHECK(PerturbedScalar(0).sign() == 0);
    // mixed monomials: e1 * e2^5 is infinitesimal next to e1^2
    auto lhs = eps(1) * eps(2) * eps(2) * eps(2) * eps(2) * eps(2);
    CHECK((lhs - eps(1) * eps(1)).sign() == -1);
}

TEST_CASE("floor in the limit") {
    CHECK((PerturbedScalar(2) - eps(1)).floor_lim().value == 1);
    CHECK((PerturbedScalar(Rat(7, 3)) + eps(2)).floor_lim().value == 2);

    auto big = (PerturbedScalar(1) + eps(1)) / eps(2);
    auto f = big.floor_lim();
    CHECK(f.kind == FloorResult::PlusInfinity);
    auto nbig = -big;
    CHECK(nbig.floor_lim().kind == FloorResult::MinusInfinity);

    // an infinitesimal ratio is finite even though the denominator vanishes at 0
    auto tiny = eps(2) / eps(1);
    CHECK(tiny.floor_lim().value == 0);
    CHECK(*tiny.standard_part() == 0);

    CHECK(PerturbedScalar(3).floor_lim(false).value == 3);
    CHECK_THROWS_AS(PerturbedScalar(3).floor_lim(true), Error);
    CHECK((PerturbedScalar(3) + eps(1)).floor_lim(true).value == 3);
    CHECK((PerturbedScalar(3) - eps(2)).floor_lim(true).value == 2);
}

TEST_CASE("canonical form reduces common factors") {
    auto red = (PerturbedScalar(1) - eps(1) * eps(1)) / (PerturbedScalar(1) - eps(1));
    CHECK(red == PerturbedScalar(1) + eps(1));
    CHECK(red.den() == Poly(Rat(1)));
}

TEST_CASE("field axioms hold exactly on random instances") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == PerturbedScalar(0));
        if (!a.is_zero()) {
            CHECK(a / a == PerturbedScalar(1));
            CHECK(a * (PerturbedScalar(1) / a) == PerturbedScalar(1));
        }
        // equality by cross-multiplication agrees with canonical-form equality
        auto doubled = PerturbedScalar(a.num().scaled(Rat(2)), a.den().scaled(Rat(2)));
        CHECK(doubled.num() == a.num());
        CHECK(doubled.den() == a.den());
    }
}

TEST_CASE("sign is total and consistent with arithmetic") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 80; ++trial) {
        auto a = random_scalar(rng), b = random_scalar(rng);
        CHECK((a * b).sign() == a.sign() * b.sign());
        int cmp = (a - b).sign();
        CHECK(((a > b) == (cmp > 0)));
        CHECK(((a < b) == (cmp < 0)));
    }
}

TEST_CASE("floor bounds and integer shifts") {
    std::mt19937_64 rng(31);
    int finite_seen = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_scalar(rng);
        auto f = a.floor_lim();
        if (!f.finite()) continue;
        ++finite_seen;
        CHECK(PerturbedScalar(Rat(f.value)) <= a);
        CHECK(a < PerturbedScalar(Rat(f.value + 1)));
        for (long k : {-3L, 1L, 7L}) {
            auto g = (a + PerturbedScalar(Rat(k))).floor_lim();
            REQUIRE(g.finite());
            CHECK(g.value == f.value + k);
        }
    }
    CHECK(finite_seen > 20);
}
