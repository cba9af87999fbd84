#include "tcc/czindex.hpp"

#include <algorithm>

#include "tcc/parallel.hpp"

namespace tcc {

ReebVector make_reeb_vector(const ToricDiagram& d, const VecQ& base,
                            const std::vector<int>& perturbation_order) {
    size_t n = static_cast<size_t>(d.dim);
    if (base.size() != n) throw bad_input("make_reeb_vector: base has wrong dimension");
    std::vector<int> order = perturbation_order;
    if (order.empty())
        for (size_t i = 0; i < n; ++i) order.push_back(static_cast<int>(i));
    if (order.size() != n) throw bad_input("make_reeb_vector: perturbation must list all n coordinates");
    {
        std::vector<bool> seen(n, false);
        for (int c : order) {
            if (c < 0 || static_cast<size_t>(c) >= n || seen[static_cast<size_t>(c)])
                throw bad_input("make_reeb_vector: perturbation is not a permutation of the coordinates");
            seen[static_cast<size_t>(c)] = true;
        }
    }
    if (!d.contains(base)) throw validation_error("make_reeb_vector: base point is not in the diagram");

    ReebVector r;
    r.base = base;
    r.perturbation_order = order;
    r.components.assign(n + 1, PerturbedScalar());
    for (size_t k = 0; k < n; ++k) {
        size_t coord = static_cast<size_t>(order[k]);
        r.components[coord] = PerturbedScalar(base[coord]) + PerturbedScalar::epsilon(static_cast<int>(k) + 1);
    }
    r.components[n] = PerturbedScalar(1);

    // Strict interiority in the perturbed order, facet by facet.
    for (size_t f = 0; f < d.facets.size(); ++f) {
        const auto& facet = d.facets[f];
        PerturbedScalar s(Rat(-facet.offset));
        for (size_t i = 0; i < n; ++i) {
            if (facet.normal[i] == 0) continue;
            s = s + r.components[i].scaled(Rat(facet.normal[i]));
        }
        if (s.sign() <= 0)
            throw validation_error("make_reeb_vector: perturbed point is not interior at facet " +
                                   std::to_string(f));
    }
    return r;
}

EdgeCoefficients edge_coefficients(const MomentCone& cone, int edge, const ReebVector& reeb) {
    if (edge < 0 || edge >= static_cast<int>(cone.edges.size()))
        throw bad_input("edge_coefficients: edge index out of range");
    if (reeb.components.size() != static_cast<size_t>(cone.ambient_dim))
        throw bad_input("edge_coefficients: Reeb vector dimension mismatch");
    if (!cone.gorenstein)
        throw validation_error("edge_coefficients: cone carries no Gorenstein certificate");

    for (const auto& nu : cone.normals) {
        Int pairing = 0;
        for (size_t i = 0; i < nu.size(); ++i) pairing += (*cone.gorenstein)[i] * nu[i];
        if (pairing != 1)
            throw validation_error("edge_coefficients: certificate does not evaluate to 1 on every normal");
    }

    EdgeCoefficients out;
    out.eta = edge_eta(cone, edge);
    std::vector<VecZ> basis;
    for (int j : cone.edges[static_cast<size_t>(edge)]) basis.push_back(cone.normals[static_cast<size_t>(j)]);
    basis.push_back(out.eta);
    auto coeffs = solve_in_basis(reeb.components, basis);
    out.b = coeffs.back();
    coeffs.pop_back();
    out.bs = std::move(coeffs);

    if (out.b.is_zero()) throw degenerate_error("edge_coefficients: eta-coefficient is exactly zero");

    // Normalization: pairing the certificate with R gives 1, and it gives 1
    // on every normal, so sum(b_j) + b <nu*, eta> = 1 exactly. In the
    // diagram shape this is the familiar sum(b_j) + b = 1.
    Int cert_eta = 0;
    for (size_t i = 0; i < out.eta.size(); ++i) cert_eta += (*cone.gorenstein)[i] * out.eta[i];
    PerturbedScalar sum = out.b.scaled(Rat(cert_eta));
    for (const auto& bj : out.bs) sum = sum + bj;
    if (!(sum == PerturbedScalar(1)))
        throw internal_error("edge_coefficients: normalization sum(b_j) + b <nu*, eta> != 1");
    return out;
}

namespace {

// Everything orbit_index needs per edge, reusable across iterates N.
struct EdgePlan {
    bool divergent = false;
    int sign_b = 0;
    Rat st_abs_b;
    Int cert_eta;  // <nu*, eta>: the coordinate-sum of any integral lift of eta
    std::vector<PerturbedScalar> ratios;  // b_j / |b|
};

EdgePlan plan_edge(const MomentCone& cone, int edge, const ReebVector& reeb) {
    EdgePlan plan;
    auto co = edge_coefficients(cone, edge, reeb);
    plan.sign_b = co.b.sign();
    plan.cert_eta = 0;
    for (size_t i = 0; i < co.eta.size(); ++i) plan.cert_eta += (*cone.gorenstein)[i] * co.eta[i];
    auto st = co.b.standard_part();
    if (!st) throw internal_error("plan_edge: eta-coefficient is infinite");
    if (*st == 0) {
        plan.divergent = true;
        return plan;
    }
    PerturbedScalar abs_b = plan.sign_b > 0 ? co.b : -co.b;
    plan.st_abs_b = abs(*st);
    for (const auto& bj : co.bs) plan.ratios.push_back(bj / abs_b);
    return plan;
}

OrbitIndex index_from_plan(const EdgePlan& plan, int n, const Int& n_iterate, int edge) {
    OrbitIndex oi;
    if (plan.divergent) {
        oi.divergent = true;
        return oi;
    }
    Int term = n_iterate * plan.sign_b * plan.cert_eta;
    for (const auto& r : plan.ratios) {
        PerturbedScalar arg = r.scaled(Rat(n_iterate));
        FloorResult f;
        try {
            f = arg.floor_lim(/*strict=*/true);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Degenerate)
                throw degenerate_error("degenerate Reeb data at edge " + std::to_string(edge) + ", N = " +
                                       n_iterate.get_str() + ": " + e.what());
            throw;
        }
        if (!f.finite()) throw internal_error("orbit_index: finite edge produced an infinite floor");
        term += f.value;
    }
    oi.mu_cz = 2 * term + n;
    oi.sft_degree = oi.mu_cz + n - 2;
    if (mod_nonneg(oi.sft_degree, 2) != 0) throw internal_error("orbit_index: odd SFT degree");
    // Soundness bound used by the enumeration: mu >= 2(N/st|b| - n) + n.
    Rat lb = Rat(2) * (Rat(n_iterate) / plan.st_abs_b - n) + n;
    if (Rat(oi.mu_cz) < lb) throw internal_error("orbit_index: index below the growth bound");
    return oi;
}

}  // namespace

OrbitIndex orbit_index(const MomentCone& cone, int edge, const ReebVector& reeb, const Int& n_iterate) {
    if (n_iterate < 1) throw bad_input("orbit_index: multiplicity must be positive");
    EdgePlan plan = plan_edge(cone, edge, reeb);
    return index_from_plan(plan, cone.dim_n(), n_iterate, edge);
}

OrbitEnumeration enumerate_orbits(const MomentCone& cone, const ReebVector& reeb, int degree_cap) {
    if (degree_cap < 0) throw bad_input("enumerate_orbits: degree cap must be >= 0");
    int n = cone.dim_n();
    Int n_order = pi1_order(cone);

    int nedges = static_cast<int>(cone.edges.size());
    auto per_edge = parallel_map_index<std::pair<std::vector<OrbitRecord>, bool>>(nedges, [&](int e) {
        std::pair<std::vector<OrbitRecord>, bool> out;
        EdgePlan plan = plan_edge(cone, e, reeb);
        if (plan.divergent) {
            out.second = true;
            return out;
        }
        Int simple_class = edge_class(cone, e, reeb.components).class_in_zn;
        // Stop once the lower bound exceeds the cap: N <= st|b| (cap+2)/2.
        Int n_max = floor_rat(plan.st_abs_b * Rat(degree_cap + 2) / 2);
        for (Int N = 1; N <= n_max; ++N) {
            OrbitIndex oi = index_from_plan(plan, n, N, e);
            if (oi.sft_degree > degree_cap) continue;
            OrbitRecord rec;
            rec.edge = e;
            rec.multiplicity = N;
            rec.mu_cz = oi.mu_cz;
            rec.sft_degree = oi.sft_degree;
            rec.pi1_class = mod_nonneg(N * simple_class, n_order);
            out.first.push_back(std::move(rec));
        }
        return out;
    });

    OrbitEnumeration result;
    for (int e = 0; e < nedges; ++e) {
        if (per_edge[static_cast<size_t>(e)].second) {
            result.divergent_edges.push_back(e);
            continue;
        }
        for (auto& rec : per_edge[static_cast<size_t>(e)].first) result.orbits.push_back(std::move(rec));
    }
    std::sort(result.orbits.begin(), result.orbits.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
        return std::tie(a.edge, a.multiplicity) < std::tie(b.edge, b.multiplicity);
    });
    return result;
}

BettiTable betti_table(const MomentCone& cone, const ReebVector& reeb, int degree_cap) {
    if (degree_cap < 0 || degree_cap % 2 != 0) throw bad_input("betti_table: cap must be even and >= 0");
    auto en = enumerate_orbits(cone, reeb, degree_cap);
    BettiTable t;
    t.degree_cap = degree_cap;
    t.pi1_order = pi1_order(cone);
    t.divergent_edges = en.divergent_edges;
    for (Int d = 0; d <= degree_cap; d += 2) t.total[d] = 0;
    for (const auto& rec : en.orbits) {
        ++t.total[rec.sft_degree];
        ++t.per_class[rec.pi1_class][rec.sft_degree];
    }
    // Per-degree counts split by class must recombine to the totals.
    std::map<Int, long> recount;
    for (const auto& [cls, m] : t.per_class)
        for (const auto& [deg, c] : m) recount[deg] += c;
    for (const auto& [deg, c] : t.total)
        if (c != 0 && recount[deg] != c) throw internal_error("betti_table: class decomposition mismatch");
    return t;
}

ConditionII condition_ii_verdict(const std::vector<OrbitRecord>& low_degree_orbits) {
    ConditionII v;
    v.holds = true;
    for (const auto& rec : low_degree_orbits) {
        if (rec.pi1_class == 0 && rec.sft_degree <= 1) {
            v.holds = false;
            v.witness = rec;
            return v;
        }
    }
    return v;
}

ConditionII check_condition_ii(const MomentCone& cone, const ReebVector& reeb) {
    auto en = enumerate_orbits(cone, reeb, 1);
    return condition_ii_verdict(en.orbits);
}

}  // namespace tcc
