#include <doctest.h>

#include <random>
#include <set>

#include "tcc/toric.hpp"

using namespace tcc;

namespace {

std::set<VecZ> normal_set(const MomentCone& c) { return {c.normals.begin(), c.normals.end()}; }

IntMat random_unimodular(std::mt19937_64& rng, int n, int ops = 10) {
    IntMat u = IntMat::identity(n);
    for (int t = 0; t < ops; ++t) {
        int i = static_cast<int>(rng() % static_cast<uint64_t>(n));
        int j = static_cast<int>(rng() % static_cast<uint64_t>(n));
        if (i == j) continue;
        long k = static_cast<long>(rng() % 3) - 1;
        for (int c = 0; c < n; ++c) u.at(i, c) += k * u.at(j, c);
    }
    return u;
}

}  // namespace

TEST_CASE("parallelogram diagrams validate with the expected facets") {
    for (auto [p, q] : std::vector<std::pair<long, long>>{{5, 2}, {1, 1}, {2, 1}}) {
        auto val = validate_toric_diagram({{0, 0}, {1, 0}, {q, p}, {q + 1, p}});
        REQUIRE(val.valid());
        const auto& d = *val.diagram;
        CHECK(d.vertices.size() == 4);
        REQUIRE(d.facets.size() == 4);
        // vertices sorted lexicographically: (0,0),(1,0),(q,p),(q+1,p)
        CHECK(d.vertices[0] == VecZ{0, 0});
        CHECK(d.vertices[1] == VecZ{1, 0});
        std::set<std::vector<int>> facet_sets;
        for (const auto& f : d.facets) facet_sets.insert(f.verts);
        CHECK(facet_sets == std::set<std::vector<int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    }
}

TEST_CASE("non-unimodular edge is rejected") {
    auto val = validate_toric_diagram({{0, 0}, {2, 0}, {0, 1}});
    CHECK(!val.valid());
    bool found = false;
    for (const auto& i : val.issues)
        if (i.find("integral-basis") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("the unit cube is not simplicial") {
    std::vector<VecZ> cube;
    for (int i = 0; i < 8; ++i) cube.push_back({i & 1, (i >> 1) & 1, (i >> 2) & 1});
    auto val = validate_toric_diagram(cube);
    CHECK(!val.valid());
    bool found = false;
    for (const auto& i : val.issues)
        if (i.find("not simplicial") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("interior points are discarded with a warning") {
    // (0, 1) is the barycenter of this unimodular-edge triangle
    auto val = validate_toric_diagram({{0, 0}, {1, 0}, {-1, 3}, {0, 1}});
    REQUIRE(val.valid());
    CHECK(val.diagram->vertices.size() == 3);
    CHECK(!val.warnings.empty());
}

TEST_CASE("moment cone of the standard simplex") {
    for (int n = 1; n <= 3; ++n) {
        std::vector<VecZ> pts{VecZ(static_cast<size_t>(n), Int(0))};
        for (int i = 0; i < n; ++i) {
            VecZ e(static_cast<size_t>(n), Int(0));
            e[static_cast<size_t>(i)] = 1;
            pts.push_back(e);
        }
        auto val = validate_toric_diagram(pts);
        REQUIRE(val.valid());
        auto cone = moment_cone(*val.diagram);
        CHECK(cone.normals.size() == static_cast<size_t>(n) + 1);
        CHECK(cone.edges.size() == val.diagram->facets.size());
        CHECK(check_good_cone(cone.normals).good);
    }
}

TEST_CASE("moment cone of the parallelogram carries the published normals") {
    auto val = validate_toric_diagram({{0, 0}, {1, 0}, {2, 5}, {3, 5}});
    auto cone = moment_cone(*val.diagram);
    CHECK(normal_set(cone) == std::set<VecZ>{{0, 0, 1}, {1, 0, 1}, {2, 5, 1}, {3, 5, 1}});
    CHECK(*cone.gorenstein == VecZ{0, 0, 1});
}

TEST_CASE("diagram-built cones are good and Gorenstein") {
    for (auto [p, q] : std::vector<std::pair<long, long>>{{3, 1}, {5, 2}, {7, 3}}) {
        auto d = build_cosphere_diagram(p, q);
        auto cone = moment_cone(d);
        auto rep = check_good_cone(cone.normals);
        CHECK(rep.good);
        CHECK(rep.edge_active.size() == d.facets.size());
        std::set<std::vector<int>> a(cone.edges.begin(), cone.edges.end());
        std::set<std::vector<int>> b(rep.edge_active.begin(), rep.edge_active.end());
        CHECK(a == b);
        auto cert = gorenstein_certificate(cone.normals);
        REQUIRE(cert.has_value());
        CHECK(*cert == VecZ{0, 0, 1});
    }
}

TEST_CASE("good cone verdicts on the lens family") {
    // gcd(alpha_j, p) = 1 for all j: good
    CHECK(check_good_cone({{0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {-1, -1, 5, 1}}).good);
    // gcd(alpha_1, p) = 2: the face condition fails and is reported
    auto rep = check_good_cone({{0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {2, 1, 4, 1}});
    CHECK(!rep.good);
    bool mentions_face = false;
    for (const auto& f : rep.failures)
        if (f.find("integral-basis") != std::string::npos) mentions_face = true;
    CHECK(mentions_face);
    // the standard orthant
    CHECK(check_good_cone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).good);
}

TEST_CASE("degenerate cones are diagnosed") {
    // contains a line
    CHECK(!check_good_cone({{1, 0}, {-1, 0}}).good);
    // not full dimensional
    auto rep = check_good_cone({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(!rep.good);
    // redundant normal never defines a facet
    auto rep2 = check_good_cone({{1, 0}, {0, 1}, {1, 1}});
    CHECK(!rep2.good);
    bool minimality = false;
    for (const auto& f : rep2.failures)
        if (f.find("facet") != std::string::npos) minimality = true;
    CHECK(minimality);
}

TEST_CASE("gorenstein certificates") {
    auto c1 = gorenstein_certificate({{1, 0, 0}, {-1, 0, 1}, {0, -1, 1}, {0, 1, 0}});
    REQUIRE(c1.has_value());
    for (const VecZ& nu : std::vector<VecZ>{{1, 0, 0}, {-1, 0, 1}, {0, -1, 1}, {0, 1, 0}}) {
        Int s = 0;
        for (size_t i = 0; i < 3; ++i) s += (*c1)[i] * nu[i];
        CHECK(s == 1);
    }
    CHECK(!gorenstein_certificate({{1, 0}, {0, 1}, {-1, -2}}).has_value());
}

TEST_CASE("lattice transforms act on normals and certificate") {
    auto val = validate_toric_diagram({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto cone = moment_cone(*val.diagram);

    auto same = apply_lattice_transform(cone, IntMat::identity(3));
    CHECK(normal_set(same) == normal_set(cone));

    IntMat u(3, 3);
    long entries[3][3] = {{1, 1, -1}, {-1, 1, 0}, {0, -1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) u.at(i, j) = entries[i][j];
    auto t = apply_lattice_transform(cone, u);
    CHECK(normal_set(t) == std::set<VecZ>{{1, 0, 0}, {-1, 0, 1}, {0, -1, 1}, {0, 1, 0}});
    // certificate still evaluates to 1 on every transformed normal
    for (const auto& nu : t.normals) {
        Int s = 0;
        for (size_t i = 0; i < 3; ++i) s += (*t.gorenstein)[i] * nu[i];
        CHECK(s == 1);
    }
    auto back = apply_lattice_transform(t, unimodular_inverse(u));
    CHECK(normal_set(back) == normal_set(cone));

    IntMat bad(3, 3);
    bad.at(0, 0) = 2;
    bad.at(1, 1) = 1;
    bad.at(2, 2) = 1;
    CHECK_THROWS_AS(apply_lattice_transform(cone, bad), Error);
}

TEST_CASE("transforms preserve goodness and the minor gcd") {
    std::mt19937_64 rng(3);
    auto d = build_cosphere_diagram(5, 2);
    auto cone = moment_cone(d);
    Int g0 = gcd_maximal_minors(IntMat::from_columns(cone.normals));
    for (int trial = 0; trial < 8; ++trial) {
        IntMat u = random_unimodular(rng, 3);
        auto t = apply_lattice_transform(cone, u);
        CHECK(check_good_cone(t.normals).good);
        CHECK(gcd_maximal_minors(IntMat::from_columns(t.normals)) == g0);
    }
}

TEST_CASE("lens cones") {
    auto c = build_lens_cone(3, 5, {-1, -1});
    CHECK(normal_set(c) == std::set<VecZ>{{0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {-1, -1, 5, 1}});
    CHECK(c.edges.size() == 4);

    auto sphere = build_lens_cone(2, 1, {1});
    CHECK(gcd_maximal_minors(IntMat::from_columns(sphere.normals)) == 1);

    auto big = build_lens_cone(6, 5, {1, 1, 1, 2, 2});
    CHECK(big.normals.size() == 7);
    CHECK(check_good_cone(big.normals).good);

    CHECK_THROWS_AS(build_lens_cone(3, 4, {2, 1}), Error);   // gcd(alpha_1, p) = 2
    CHECK_THROWS_AS(build_lens_cone(3, 3, {-1, -1}), Error); // gcd(alpha_0, p) = 3
}

TEST_CASE("cosphere diagrams require coprime parameters") {
    CHECK_THROWS_AS(build_cosphere_diagram(4, 2), Error);
    auto d = build_cosphere_diagram(2, 1);
    auto cone = moment_cone(d);
    CHECK(gcd_maximal_minors(IntMat::from_columns(cone.normals)) == 2);
}

TEST_CASE("minor gcd of a parallelogram cone equals the gcd of its triangle areas") {
    for (auto [p, q] : std::vector<std::pair<long, long>>{{2, 1}, {5, 2}, {7, 3}, {9, 4}}) {
        auto d = build_cosphere_diagram(p, q);
        auto cone = moment_cone(d);
        Int tri_gcd = 0;
        size_t m = d.vertices.size();
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j)
                for (size_t k = j + 1; k < m; ++k) {
                    IntMat t(2, 2);
                    for (int c = 0; c < 2; ++c) {
                        t.at(0, c) = d.vertices[j][static_cast<size_t>(c)] - d.vertices[i][static_cast<size_t>(c)];
                        t.at(1, c) = d.vertices[k][static_cast<size_t>(c)] - d.vertices[i][static_cast<size_t>(c)];
                    }
                    tri_gcd = gcd(tri_gcd, determinant(t));
                }
        CHECK(gcd_maximal_minors(IntMat::from_columns(cone.normals)) == tri_gcd);
        CHECK(tri_gcd == p);
    }
}

TEST_CASE("prequantization cones") {
    auto pq = build_prequantization_cone({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {0, 0, 1, 1});
    CHECK(normal_set(pq.cone) == std::set<VecZ>{{1, 0, 0}, {0, 1, 0}, {-1, 0, 1}, {0, -1, 1}});
    CHECK(pq.cone.gorenstein.has_value());
    CHECK(!pq.diagram.has_value());  // offsets are not all 1

    // all offsets 1: Gorenstein with certificate reading the last coordinate,
    // and the diagram conv(v_j) is attached
    auto pq1 = build_prequantization_cone({{1, 0}, {0, 1}, {-1, -1}}, {1, 1, 1});
    REQUIRE(pq1.cone.gorenstein.has_value());
    REQUIRE(pq1.diagram.has_value());
    CHECK(*pq1.cone.gorenstein == VecZ{0, 0, 1});

    CHECK_THROWS_AS(build_prequantization_cone({{1, 0}, {-1, 0}}, {0, 1}), Error);
}

TEST_CASE("the CP^n prequantization cone is a lens cone up to a unimodular transform") {
    // conv(e_1, .., e_n, -1vec) with offsets 1 versus the lens cone of
    // L^{2n+1}_{n+1}(1, ..., 1)
    for (int n = 2; n <= 3; ++n) {
        std::vector<VecZ> vs;
        for (int i = 0; i < n; ++i) {
            VecZ e(static_cast<size_t>(n), Int(0));
            e[static_cast<size_t>(i)] = 1;
            vs.push_back(e);
        }
        vs.push_back(VecZ(static_cast<size_t>(n), Int(-1)));
        auto pq = build_prequantization_cone(vs, VecZ(static_cast<size_t>(n) + 1, Int(1)));
        auto lens = build_lens_cone(n, n + 1, VecZ(static_cast<size_t>(n - 1), Int(-1)));

        // same Smith data
        auto s1 = smith_normal_form(IntMat::from_columns(pq.cone.normals));
        auto s2 = smith_normal_form(IntMat::from_columns(lens.normals));
        CHECK(s1.invariant_factors == s2.invariant_factors);

        // explicit unimodular map matching the normal sets: solve U A = B
        // over Q for every bijection of the normals and keep integral
        // unimodular solutions
        bool found = false;
        std::vector<int> perm(pq.cone.normals.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        IntMat b = IntMat::from_columns(lens.normals);
        do {
            std::vector<VecZ> cols;
            for (size_t i = 0; i < perm.size(); ++i)
                cols.push_back(pq.cone.normals[static_cast<size_t>(perm[i])]);
            IntMat a = IntMat::from_columns(cols);
            Int da = determinant(a);
            if (da == 0) continue;
            // u = b a^{-1} = b adj(a) / det(a); accept integral unimodular results
            IntMat u(n + 1, n + 1);
            IntMat adj(n + 1, n + 1);
            for (int i = 0; i < n + 1; ++i)
                for (int j = 0; j < n + 1; ++j) {
                    IntMat minor(n, n);
                    int rr = 0;
                    for (int r = 0; r < n + 1; ++r) {
                        if (r == j) continue;
                        int cc = 0;
                        for (int c = 0; c < n + 1; ++c) {
                            if (c == i) continue;
                            minor.at(rr, cc++) = a.at(r, c);
                        }
                        ++rr;
                    }
                    Int d = determinant(minor);
                    adj.at(i, j) = ((i + j) % 2 == 0) ? d : -d;
                }
            IntMat num = b * adj;
            bool integral = true;
            for (int i = 0; i < n + 1 && integral; ++i)
                for (int j = 0; j < n + 1 && integral; ++j)
                    if (num.at(i, j) % da != 0) integral = false;
            if (!integral) continue;
            for (int i = 0; i < n + 1; ++i)
                for (int j = 0; j < n + 1; ++j) u.at(i, j) = num.at(i, j) / da;
            Int du = determinant(u);
            if (du != 1 && du != -1) continue;
            auto image = apply_lattice_transform(pq.cone, u);
            if (normal_set(image) == normal_set(lens)) {
                found = true;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(found);
    }
}
