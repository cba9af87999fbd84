#pragma once

#include <optional>
#include <set>
#include <vector>

#include "tcc/numeric.hpp"

namespace tcc {

// Canonical presentation of a Gorenstein contact lens space
// L^{2n+1}_p(alpha_0, -alpha_1, ..., -alpha_{n-1}, 1): the weights are
// rescaled by the inverse of the last one, alpha residues are kept in
// {1..p-1}, alpha_0 = sum(alpha_j) - 1 exactly, and a_n is the inverse of
// alpha_0 mod p.
struct LensNormalForm {
    int n = 0;
    Int p;
    VecZ alpha_bar;  // n-1 residues in {1..p-1} (empty when p = 1: all zero)
    Int alpha0;      // exact integer sum(alpha_bar) - 1
    Int a_n;         // alpha0^{-1} mod p, in {1..p-1} (0 when p = 1)
    VecZ weights;    // the original weights
    Int unit;        // the rescaling unit l_n^{-1} mod p

    VecZ rebuilt_weights() const;  // (alpha0, -alpha_1, ..., -alpha_{n-1}, 1)
};

// Normal form from weights (l_0, ..., l_n): requires every weight to be a
// unit mod p and the weight sum to vanish mod p (the Gorenstein condition).
LensNormalForm lens_normal_form(const Int& p, const VecZ& weights);

// Normal form directly from (n, p, alpha_bar) data.
LensNormalForm lens_form_from_alpha(int n, const Int& p, const VecZ& alpha_bar);

enum class DegreeVariant { g, g_tilde };

// Closed-form SFT degree of the N-th iterate of the distinguished orbit:
// g(N) = (2/p) (N + (n-1) p - sum_j ((N alpha_j a_n) mod p) - ((-N a_n) mod p)),
// an even integer. g_tilde is the p-periodic truncation of g to {1..p}.
Int degree_function(const LensNormalForm& form, const Int& n_iterate,
                    DegreeVariant variant = DegreeVariant::g);

// Contact Betti numbers sequence (cb_0, cb_2, ..., cb_{2(n-1)}) with
// cb_{2j} = #{N in 1..p : g(N) <= 2j}.
std::vector<Int> cbs(const LensNormalForm& form);

// Per-class count: 1 iff 2j >= g_tilde(N) for N in {1..p} representing the
// class k = [gamma_0^N]; degrees j < 0 give 0.
int betti_by_class(const LensNormalForm& form, const Int& k, const Int& j);

// Units k mod p with g_tilde(kN) = g_tilde(N) for all N; always contains 1,
// and is a subgroup of (Z_p)*. An upper bound on the pi_1-action of
// co-orientation-preserving contactomorphisms.
std::set<Int> contact_symmetry_set(const LensNormalForm& form);

// Element of the rational group ring Q[Z_p], exponents mod p.
struct GroupRingElement {
    Int p;
    VecQ coefficients;  // coefficient of t^i, i = 0..p-1

    bool operator==(const GroupRingElement& o) const { return p == o.p && coefficients == o.coefficients; }
    GroupRingElement operator*(const GroupRingElement& o) const;
    GroupRingElement substitute_power(const Int& k) const;  // t -> t^k
    GroupRingElement times_power(const Int& u) const;       // multiply by t^u
    static GroupRingElement monomial_minus_one(const Int& p, const Int& r);  // t^r - 1
};

// Torsion polynomial Delta(t) = prod_j (t^{r_j} - 1) with r_j l_j = 1 mod p.
GroupRingElement reidemeister_delta(const Int& p, const VecZ& weights);

// Whether multiplication by k on pi_1 is realized by an orientation
// preserving diffeomorphism: k^{n+1} = 1 mod p and Delta(t^k) = t^u Delta(t).
struct DiffeoRealizable {
    bool realizable = false;
    std::optional<Int> u;
    std::string reason;  // set when not realizable
};
DiffeoRealizable diffeo_realizable(const Int& p, const VecZ& weights, const Int& k);

// Weight-move equivalence: multiset equality mod p after multiplying by a
// unit and flipping some signs (with permutation). The even-sign-change
// witness is the orientation-compatible refinement.
struct WeightEquivalence {
    bool equivalent = false;
    bool even_sign_witness = false;  // some witness flips an even number of signs
    Int unit;
    std::vector<int> sign_flips;     // indices of w1 flipped in the stored witness
    std::vector<int> permutation;    // w2[i] matches the witness image of w1[permutation[i]]
};
WeightEquivalence weights_diffeo_equivalent(const Int& p, const VecZ& w1, const VecZ& w2);

enum class PairVerdict {
    CandidatesAgree,       // invariants agree; NOT a proof of equivalence
    DistinguishedByCbs,    // different cbs: not contactomorphic
    DistinguishedByClass,  // same cbs but per-class data differs for every unit relabeling
    DiffeoInequivalent,    // invariants agree but not even diffeomorphic
};

struct PairClassification {
    LensNormalForm form1, form2;
    WeightEquivalence diffeo;
    std::vector<Int> cbs1, cbs2;
    PairVerdict verdict = PairVerdict::CandidatesAgree;
    std::optional<Int> matching_unit;  // unit aligning per-class data, when one exists
};

// Assemble everything the invariants can say about a pair of Gorenstein
// weight presentations. "Distinguished" verdicts are proofs of
// non-contactomorphism; agreement is not a proof of equivalence.
PairClassification classify_pair(const Int& p, const VecZ& w1, const VecZ& w2);

const char* verdict_name(PairVerdict v);

}  // namespace tcc
