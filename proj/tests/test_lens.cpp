#include <doctest.h>

#include <algorithm>
#include <random>

#include "tcc/czindex.hpp"
#include "tcc/lens.hpp"

using namespace tcc;

namespace {

LensNormalForm random_form(std::mt19937_64& rng, int n_max = 5, long p_max = 11) {
    for (;;) {
        int n = 2 + static_cast<int>(rng() % static_cast<uint64_t>(n_max - 1));
        long p = 2 + static_cast<long>(rng() % static_cast<uint64_t>(p_max - 1));
        if (n % 2 == 0 && p % 2 == 0) continue;
        VecZ alpha;
        bool ok = true;
        for (int j = 0; j < n - 1 && ok; ++j) {
            long a = static_cast<long>(rng() % static_cast<uint64_t>(4 * p + 1)) - 2 * p;
            int guard = 0;
            while (gcd(Int(a), Int(p)) != 1 && guard++ < 64) ++a;
            if (gcd(Int(a), Int(p)) != 1) ok = false;
            alpha.push_back(a);
        }
        if (!ok) continue;
        Int alpha0 = -1;
        for (const auto& a : alpha) alpha0 += a;
        if (gcd(alpha0, Int(p)) != 1) continue;
        return lens_form_from_alpha(n, p, alpha);
    }
}

}  // namespace

TEST_CASE("normal forms of the published presentations") {
    auto f = lens_normal_form(5, {1, 1, 1, 1, 2, -2, 1});
    CHECK(f.n == 6);
    CHECK(f.alpha_bar == VecZ{4, 4, 4, 3, 2});  // = (-1,-1,-1,-2,2) mod 5
    CHECK(mod_nonneg(f.alpha0, 5) == 1);
    CHECK(f.a_n == 1);

    auto g = lens_normal_form(5, {1, -1, -1, -1, -2, -2, 1});
    CHECK(g.alpha_bar == VecZ{1, 1, 1, 2, 2});
    CHECK(g.alpha0 == 6);
    CHECK(g.a_n == 1);

    // the rebuilt weights are the unit-rescaled originals mod p
    for (size_t i = 0; i < g.weights.size(); ++i)
        CHECK(mod_nonneg(g.rebuilt_weights()[i] - g.unit * g.weights[i], 5) == 0);

    CHECK_THROWS_AS(lens_normal_form(4, {1, 1, 1, 2}), Error);  // non-unit weight
    CHECK_THROWS_AS(lens_normal_form(5, {1, 1, 1}), Error);     // sum != 0 mod p
    CHECK_NOTHROW(lens_normal_form(1, {3, 7}));                 // p = 1 is trivial
    CHECK_NOTHROW(lens_normal_form(2, {1, 1}));
}

TEST_CASE("degree functions of the five published examples") {
    struct Case {
        VecZ weights;
        std::vector<long> g;
    };
    std::vector<Case> cases = {
        {{-3, 1, 1, 1}, {2, 0, 4, 2, 6}},
        {{1, -1, -1, 1}, {2, 2, 2, 2, 6}},
        {{1, 1, 1, 1, 2, -2, 1}, {2, 4, 6, 8, 12}},
        {{1, -1, -1, -1, -2, -2, 1}, {6, 4, 6, 4, 12}},
        {{1, 1, 1, 2, -2, -2, -2, 1}, {4, 4, 8, 8, 14}},
    };
    for (const auto& c : cases) {
        auto f = lens_normal_form(5, c.weights);
        for (size_t i = 0; i < c.g.size(); ++i) CHECK(degree_function(f, static_cast<long>(i + 1)) == c.g[i]);
    }
    // g~ is the p-periodic truncation
    auto f = lens_normal_form(5, {-3, 1, 1, 1});
    CHECK(degree_function(f, 7, DegreeVariant::g_tilde) == degree_function(f, 2));
    CHECK(degree_function(f, 7) == degree_function(f, 2) + 2);
}

TEST_CASE("cbs of the published examples") {
    CHECK(cbs(lens_normal_form(5, {-3, 1, 1, 1})) == std::vector<Int>{1, 3, 4});
    CHECK(cbs(lens_normal_form(5, {1, -1, -1, 1})) == std::vector<Int>{0, 4, 4});
    CHECK(cbs(lens_normal_form(5, {1, 1, 1, 1, 2, -2, 1})) == std::vector<Int>{0, 1, 2, 3, 4, 4});
    CHECK(cbs(lens_normal_form(5, {1, -1, -1, -1, -2, -2, 1})) == std::vector<Int>{0, 0, 2, 4, 4, 4});
    for (int n = 2; n <= 6; ++n) {
        std::vector<Int> want;
        for (int j = 1; j <= n; ++j) want.push_back(j);
        CHECK(cbs(lens_form_from_alpha(n, n + 1, VecZ(static_cast<size_t>(n - 1), Int(-1)))) == want);
    }
}

TEST_CASE("per-class counts") {
    auto f = lens_normal_form(5, {-3, 1, 1, 1});  // g = (2,0,4,2,6)
    CHECK(betti_by_class(f, 2, 0) == 1);          // g(2) = 0
    CHECK(betti_by_class(f, 1, 0) == 0);
    CHECK(betti_by_class(f, 1, 1) == 1);
    CHECK(betti_by_class(f, 3, -1) == 0);
    // trivial class: 1 iff 2j >= 2n
    CHECK(betti_by_class(f, 0, f.n - 1) == 0);
    CHECK(betti_by_class(f, 0, f.n) == 1);
}

TEST_CASE("contact symmetry sets") {
    CHECK(contact_symmetry_set(lens_normal_form(5, {1, 1, 1, 2, -2, -2, -2, 1})) == std::set<Int>{1});
    CHECK(contact_symmetry_set(lens_normal_form(2, {1, 1})) == std::set<Int>{1});
    // g constant on 1..p-1: every unit is a symmetry
    auto f = lens_normal_form(5, {1, -1, -1, 1});
    CHECK(contact_symmetry_set(f) == std::set<Int>{1, 2, 3, 4});
}

TEST_CASE("the contact symmetry set is a subgroup of the units") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_form(rng);
        auto s = contact_symmetry_set(f);
        CHECK(s.count(1) == 1);
        for (const Int& a : s)
            for (const Int& b : s) CHECK(s.count(f.p == 1 ? Int(1) : mod_nonneg(a * b, f.p)) == 1);
    }
}

TEST_CASE("reidemeister delta") {
    // all weights 1: (t - 1)^(n+1)
    auto d = reidemeister_delta(5, {1, 1, 1});
    auto tm1 = GroupRingElement::monomial_minus_one(5, 1);
    auto want = tm1 * tm1 * tm1;
    CHECK(d == want);
    // p = 1: the ring collapses and the product is 0
    auto triv = reidemeister_delta(1, {1, 1});
    for (const auto& c : triv.coefficients) CHECK(c == 0);
    CHECK_THROWS_AS(reidemeister_delta(4, {2, 1}), Error);

    // the L^15_5 identity Delta(t) = (-1)^3 t^{-4} (t-1)^4 (t^3-1)^4
    auto delta = reidemeister_delta(5, {1, 1, 1, 2, -2, -2, -2, 1});
    GroupRingElement rhs{5, VecQ(5, Rat(0))};
    rhs.coefficients[0] = -1;
    auto t3m1 = GroupRingElement::monomial_minus_one(5, 3);
    for (int i = 0; i < 4; ++i) rhs = rhs * GroupRingElement::monomial_minus_one(5, 1);
    for (int i = 0; i < 4; ++i) rhs = rhs * t3m1;
    rhs = rhs.times_power(mod_nonneg(Int(-4), 5));
    CHECK(delta == rhs);
}

TEST_CASE("diffeo realizability") {
    VecZ w15 = {1, 1, 1, 2, -2, -2, -2, 1};
    auto dr = diffeo_realizable(5, w15, 2);
    CHECK(dr.realizable);
    REQUIRE(dr.u.has_value());
    CHECK(*dr.u == 4);

    auto id = diffeo_realizable(5, w15, 1);
    CHECK(id.realizable);
    CHECK(*id.u == 0);

    auto no = diffeo_realizable(5, {1, 1, 1, 1, 2, -2, 1}, 2);
    CHECK(!no.realizable);  // 2^7 = 3 mod 5 fails the homotopy condition
    CHECK(no.reason.find("k^(n+1)") != std::string::npos);
}

TEST_CASE("weight-move equivalence") {
    auto we = weights_diffeo_equivalent(5, {1, 1, 1, 1, 2, -2, 1}, {1, -1, -1, -1, -2, -2, 1});
    CHECK(we.equivalent);
    CHECK(we.even_sign_witness);

    auto same = weights_diffeo_equivalent(5, {1, 2, 3}, {1, 2, 3});
    CHECK(same.equivalent);
    CHECK(same.even_sign_witness);  // zero flips

    auto diff = weights_diffeo_equivalent(5, {1, 1, 1, 1, 1}, {1, 1, 1, 1, 2});
    CHECK(!diff.equivalent);

    CHECK_THROWS_AS(weights_diffeo_equivalent(5, {1, 2}, {1, 2, 3}), Error);
}

TEST_CASE("pair classification") {
    auto cp = classify_pair(5, {1, 1, 1, 1, 2, -2, 1}, {1, -1, -1, -1, -2, -2, 1});
    CHECK(cp.verdict == PairVerdict::DistinguishedByCbs);
    CHECK(cp.diffeo.equivalent);
    CHECK(cp.diffeo.even_sign_witness);

    auto same = classify_pair(5, {1, 1, 1, 1, 2, -2, 1}, {1, 1, 1, 1, 2, -2, 1});
    CHECK(same.verdict == PairVerdict::CandidatesAgree);
    REQUIRE(same.matching_unit.has_value());

    auto seven = classify_pair(5, {-3, 1, 1, 1}, {1, -1, -1, 1});
    CHECK(seven.verdict == PairVerdict::DistinguishedByCbs);
    CHECK(seven.cbs1 == std::vector<Int>{1, 3, 4});
    CHECK(seven.cbs2 == std::vector<Int>{0, 4, 4});
}

TEST_CASE("structural identities of the degree function") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        auto f = random_form(rng);
        const Int& p = f.p;
        int n = f.n;
        CHECK(degree_function(f, p) == 2 * n);
        for (Int N = 1; N < p; ++N) {
            Int g = degree_function(f, N);
            CHECK(g >= 0);
            CHECK(g <= 2 * (n - 1));
            CHECK(g + degree_function(f, p - N) == 2 * (n - 1));
            CHECK(degree_function(f, N + p) == g + 2);
        }
        auto seq = cbs(f);
        CHECK(seq[static_cast<size_t>(n - 1)] == p - 1);
        for (int j = 0; j <= n - 2; ++j)
            CHECK(seq[static_cast<size_t>(j)] + seq[static_cast<size_t>(n - 2 - j)] == p - 1);
        // cb_{2j} = p for j >= n
        Int count = 0;
        for (Int N = 1; N <= p; ++N)
            if (degree_function(f, N) <= 2 * n) ++count;
        CHECK(count == p);
    }
}

TEST_CASE("cbs is independent of the presentation") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 15; ++trial) {
        auto f = random_form(rng, 4, 9);
        auto reference = cbs(f);
        VecZ w = f.weights;
        for (int shuffle = 0; shuffle < 4; ++shuffle) {
            VecZ v = w;
            std::shuffle(v.begin(), v.end(), rng);
            // also rescale by a random unit
            Int u;
            do {
                u = 1 + static_cast<long>(rng() % std::max(1L, f.p.get_si()));
            } while (gcd(u, f.p) != 1);
            for (auto& x : v) x = mod_nonneg(x * u, f.p);
            CHECK(cbs(lens_normal_form(f.p, v)) == reference);
        }
    }
}

TEST_CASE("the (6, 5, (1,1,1,2,2)) cone computes the second L^13_5 presentation") {
    auto form = lens_normal_form(5, {1, -1, -1, -1, -2, -2, 1});
    CHECK(form.alpha_bar == VecZ{1, 1, 1, 2, 2});
    auto cone0 = build_lens_cone(6, 5, {1, 1, 1, 2, 2});
    auto val = validate_toric_diagram(diagram_vertices_of(cone0));
    REQUIRE(val.valid());
    auto cone = moment_cone(*val.diagram);
    auto reeb = make_reeb_vector(*val.diagram, VecQ(6, Rat(0)));
    auto t = betti_table(cone, reeb, 10);
    auto seq = cbs(form);  // (0,0,2,4,4,4)
    for (int j = 0; j < 6; ++j) {
        long got = t.total.count(Int(2 * j)) ? t.total.at(Int(2 * j)) : 0;
        CHECK(Int(got) == seq[static_cast<size_t>(j)]);
    }
}

TEST_CASE("closed-form cbs agrees with the moment-map engine, classes included") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 6; ++trial) {
        auto f = random_form(rng, 4, 7);
        auto cone0 = build_lens_cone(f.n, f.p, f.alpha_bar);
        auto val = validate_toric_diagram(diagram_vertices_of(cone0));
        REQUIRE(val.valid());
        auto cone = moment_cone(*val.diagram);
        auto reeb = make_reeb_vector(*val.diagram, VecQ(static_cast<size_t>(f.n), Rat(0)));
        int cap = 2 * (f.n - 1);
        auto table = betti_table(cone, reeb, cap);
        auto seq = cbs(f);
        for (int j = 0; j < f.n; ++j) {
            long got = table.total.count(Int(2 * j)) ? table.total.at(Int(2 * j)) : 0;
            CHECK(Int(got) == seq[static_cast<size_t>(j)]);
        }
        // per-class data, relabeled through the class of the distinguished orbit
        int dist = lens_distinguished_edge(cone);
        Int u = edge_class(cone, dist, reeb.components).class_in_zn;
        for (Int m = 0; m < f.p; ++m) {
            for (int j = 0; 2 * j <= cap; ++j) {
                long got = 0;
                auto it = table.per_class.find(mod_nonneg(u * m, f.p));
                if (it != table.per_class.end() && it->second.count(Int(2 * j))) got = it->second.at(Int(2 * j));
                CHECK(got == betti_by_class(f, m, j));
            }
        }
    }
}
