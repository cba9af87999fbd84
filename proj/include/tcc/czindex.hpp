#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tcc/homotopy.hpp"
#include "tcc/toric.hpp"

namespace tcc {

// Normalized toric Reeb vector (v + eps, 1): a rational base point in the
// diagram with a symbolic perturbation making the Reeb flow non-degenerate.
// Coordinate perturbation_order[k] carries eps_{k+1}; the default order
// assigns eps_{i+1} to coordinate i.
struct ReebVector {
    std::vector<PerturbedScalar> components;  // n+1 entries, last is exactly 1
    VecQ base;
    std::vector<int> perturbation_order;
};

// Build and validate a Reeb vector: the base must lie in the closed diagram
// and the perturbed point must be strictly interior in the eps -> 0+ order.
ReebVector make_reeb_vector(const ToricDiagram& d, const VecQ& base,
                            const std::vector<int>& perturbation_order = {});

// The Reeb vector written in the edge basis (nu_{l_1}, ..., nu_{l_n}, eta).
struct EdgeCoefficients {
    std::vector<PerturbedScalar> bs;  // n coefficients on the edge normals
    PerturbedScalar b;                // eta coefficient, nonzero
    VecZ eta;                         // canonical completion
};
EdgeCoefficients edge_coefficients(const MomentCone& cone, int edge, const ReebVector& reeb);

// A closed toric Reeb orbit: the N-th iterate of the simple orbit over an
// edge, its Conley-Zehnder index, SFT degree (= mu_CZ + n - 2, always even
// here) and free homotopy class relative to the reference edge.
struct OrbitRecord {
    int edge = 0;
    Int multiplicity;  // N >= 1
    Int mu_cz;
    Int sft_degree;
    Int pi1_class;  // in {0..order-1}
};

// Index of the N-th iterate over an edge, or a divergence flag when the
// standard part of the eta-coefficient vanishes (the edge contributes
// arbitrarily large indices, hence no orbit below any finite degree).
struct OrbitIndex {
    bool divergent = false;
    Int mu_cz;
    Int sft_degree;
};
OrbitIndex orbit_index(const MomentCone& cone, int edge, const ReebVector& reeb, const Int& n_iterate);

struct OrbitEnumeration {
    std::vector<OrbitRecord> orbits;   // every orbit with sft degree <= cap
    std::vector<int> divergent_edges;  // edges excluded, with justification
};
// Complete enumeration up to the degree cap. Soundness comes from the lower
// bound mu_CZ(gamma^N) >= 2(N/st(|b|) - n) + n: iteration stops once the
// bound exceeds the cap, so no orbit of degree <= cap is missed.
OrbitEnumeration enumerate_orbits(const MomentCone& cone, const ReebVector& reeb, int degree_cap);

// Orbit counts per even SFT degree, total and split by homotopy class.
struct BettiTable {
    int degree_cap = 0;
    Int pi1_order;
    std::map<Int, long> total;                       // degree -> count
    std::map<Int, std::map<Int, long>> per_class;    // class -> degree -> count
    std::vector<int> divergent_edges;
};
BettiTable betti_table(const MomentCone& cone, const ReebVector& reeb, int degree_cap);

// Context check: no contractible closed orbit may have SFT degree <= 1.
struct ConditionII {
    bool holds = false;
    std::optional<OrbitRecord> witness;
};
ConditionII check_condition_ii(const MomentCone& cone, const ReebVector& reeb);
// The same verdict on an already-enumerated orbit list (exposed for tests).
ConditionII condition_ii_verdict(const std::vector<OrbitRecord>& low_degree_orbits);

}  // namespace tcc
