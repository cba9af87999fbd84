#include "tcc/lens.hpp"

#include <algorithm>
#include <map>

namespace tcc {

VecZ LensNormalForm::rebuilt_weights() const {
    VecZ w;
    w.push_back(alpha0);
    for (const Int& a : alpha_bar) w.push_back(-a);
    w.push_back(1);
    return w;
}

LensNormalForm lens_normal_form(const Int& p, const VecZ& weights) {
    if (p < 1) throw bad_input("lens_normal_form: p must be positive");
    if (weights.size() < 2) throw bad_input("lens_normal_form: need at least two weights");
    LensNormalForm f;
    f.p = p;
    f.n = static_cast<int>(weights.size()) - 1;
    f.weights = weights;

    for (size_t j = 0; j < weights.size(); ++j)
        if (!is_unit_mod(weights[j], p))
            throw validation_error("lens_normal_form: weight l_" + std::to_string(j) + " = " +
                                   weights[j].get_str() + " is not a unit mod " + p.get_str());
    Int sum = 0;
    for (const Int& w : weights) sum += w;
    if (mod_nonneg(sum, p) != 0)
        throw validation_error("lens_normal_form: weight sum " + sum.get_str() +
                               " is not 0 mod " + p.get_str() + " (not Gorenstein)");

    f.unit = inv_mod(weights.back(), p);
    if (p == 1) {
        f.alpha_bar.assign(static_cast<size_t>(f.n - 1), Int(0));
        f.alpha0 = -1;
        for (const Int& a : f.alpha_bar) f.alpha0 += a;
        f.a_n = 0;
        return f;
    }
    for (int j = 1; j <= f.n - 1; ++j) {
        Int a = mod_nonneg(-f.unit * weights[static_cast<size_t>(j)], p);
        f.alpha_bar.push_back(a);  // in {1..p-1} since the weight is a unit
    }
    f.alpha0 = -1;
    for (const Int& a : f.alpha_bar) f.alpha0 += a;
    // Forced by the Gorenstein condition: alpha_0 = unit * l_0 mod p.
    if (mod_nonneg(f.alpha0 - f.unit * weights[0], p) != 0)
        throw internal_error("lens_normal_form: alpha_0 inconsistent with l_0");
    f.a_n = inv_mod(f.alpha0, p);
    // Spot checks of the degree-function identities at construction time.
    if (p <= 512) {
        if (degree_function(f, p) != 2 * f.n) throw internal_error("lens_normal_form: g(p) != 2n");
        if (p > 1 && degree_function(f, 1) + degree_function(f, p - 1) != 2 * (f.n - 1))
            throw internal_error("lens_normal_form: g(1) + g(p-1) != 2(n-1)");
    }
    return f;
}

LensNormalForm lens_form_from_alpha(int n, const Int& p, const VecZ& alpha_bar) {
    if (n < 1) throw bad_input("lens_form_from_alpha: n must be at least 1");
    if (static_cast<int>(alpha_bar.size()) != n - 1)
        throw bad_input("lens_form_from_alpha: need n-1 alpha entries");
    Int alpha0 = -1;
    for (const Int& a : alpha_bar) alpha0 += a;
    VecZ weights;
    weights.push_back(alpha0);
    for (const Int& a : alpha_bar) weights.push_back(-a);
    weights.push_back(1);
    return lens_normal_form(p, weights);
}

Int degree_function(const LensNormalForm& form, const Int& n_iterate, DegreeVariant variant) {
    if (n_iterate < 1) throw bad_input("degree_function: N must be positive");
    Int n_eff = n_iterate;
    if (variant == DegreeVariant::g_tilde) n_eff = mod_nonneg(n_iterate - 1, form.p) + 1;
    const Int& p = form.p;
    Int acc = n_eff + Int(form.n - 1) * p;
    for (const Int& a : form.alpha_bar) acc -= mod_nonneg(n_eff * a * form.a_n, p);
    acc -= mod_nonneg(-n_eff * form.a_n, p);
    if (acc % p != 0)
        throw internal_error("degree_function: 2(N + (n-1)p - ...) not divisible by p");
    return 2 * (acc / p);
}

std::vector<Int> cbs(const LensNormalForm& form) {
    std::vector<Int> g_values;
    for (Int N = 1; N <= form.p; ++N) g_values.push_back(degree_function(form, N));
    std::vector<Int> out;
    for (int j = 0; j < form.n; ++j) {
        Int count = 0;
        for (const Int& g : g_values)
            if (g <= 2 * j) ++count;
        out.push_back(count);
    }
    return out;
}

int betti_by_class(const LensNormalForm& form, const Int& k, const Int& j) {
    if (j < 0) return 0;
    Int n_rep = mod_nonneg(k - 1, form.p) + 1;  // N in {1..p} with N = k mod p
    return degree_function(form, n_rep, DegreeVariant::g_tilde) <= 2 * j ? 1 : 0;
}

std::set<Int> contact_symmetry_set(const LensNormalForm& form) {
    std::set<Int> out;
    std::vector<Int> g_values;
    for (Int N = 1; N <= form.p; ++N) g_values.push_back(degree_function(form, N));
    for (Int k = 1; k <= form.p; ++k) {
        if (form.p > 1 && (k == form.p || !is_unit_mod(k, form.p))) continue;
        bool ok = true;
        for (Int N = 1; N <= form.p && ok; ++N) {
            Int kn = mod_nonneg(k * N - 1, form.p) + 1;
            if (g_values[kn.get_ui() - 1] != g_values[N.get_ui() - 1]) ok = false;
        }
        if (ok) out.insert(form.p == 1 ? Int(1) : mod_nonneg(k, form.p));
    }
    if (form.p == 1) out.insert(1);
    return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    if (p != o.p) throw bad_input("GroupRingElement: mixed moduli");
    GroupRingElement r{p, VecQ(coefficients.size(), Rat(0))};
    size_t pp = coefficients.size();
    for (size_t i = 0; i < pp; ++i) {
        if (coefficients[i] == 0) continue;
        for (size_t j = 0; j < pp; ++j) {
            if (o.coefficients[j] == 0) continue;
            r.coefficients[(i + j) % pp] += coefficients[i] * o.coefficients[j];
        }
    }
    return r;
}

GroupRingElement GroupRingElement::substitute_power(const Int& k) const {
    GroupRingElement r{p, VecQ(coefficients.size(), Rat(0))};
    for (size_t i = 0; i < coefficients.size(); ++i) {
        if (coefficients[i] == 0) continue;
        Int e = mod_nonneg(k * static_cast<long>(i), p);
        r.coefficients[e.get_ui()] += coefficients[i];
    }
    return r;
}

GroupRingElement GroupRingElement::times_power(const Int& u) const {
    GroupRingElement r{p, VecQ(coefficients.size(), Rat(0))};
    for (size_t i = 0; i < coefficients.size(); ++i) {
        Int e = mod_nonneg(u + static_cast<long>(i), p);
        r.coefficients[e.get_ui()] = coefficients[i];
    }
    return r;
}

GroupRingElement GroupRingElement::monomial_minus_one(const Int& p, const Int& r) {
    GroupRingElement g{p, VecQ(static_cast<size_t>(p.get_ui()), Rat(0))};
    Int e = mod_nonneg(r, p);
    g.coefficients[e.get_ui()] += 1;
    g.coefficients[0] -= 1;
    return g;
}

GroupRingElement reidemeister_delta(const Int& p, const VecZ& weights) {
    if (p < 1) throw bad_input("reidemeister_delta: p must be positive");
    for (size_t j = 0; j < weights.size(); ++j)
        if (!is_unit_mod(weights[j], p))
            throw validation_error("reidemeister_delta: weight l_" + std::to_string(j) +
                                   " is not a unit mod " + p.get_str());
    GroupRingElement acc{p, VecQ(static_cast<size_t>(p.get_ui()), Rat(0))};
    acc.coefficients[0] = 1;
    for (const Int& l : weights) {
        Int r = p == 1 ? Int(0) : inv_mod(l, p);
        acc = acc * GroupRingElement::monomial_minus_one(p, r);
    }
    return acc;
}

DiffeoRealizable diffeo_realizable(const Int& p, const VecZ& weights, const Int& k) {
    DiffeoRealizable out;
    if (p > 1 && !is_unit_mod(k, p)) throw bad_input("diffeo_realizable: k is not a unit mod p");
    Int n_plus_1 = static_cast<long>(weights.size());
    if (p > 1 && pow_mod(k, n_plus_1, p) != 1) {
        out.reason = "k^(n+1) != 1 mod p: no orientation-preserving homotopy equivalence acts by k";
        return out;
    }
    GroupRingElement delta = reidemeister_delta(p, weights);
    GroupRingElement twisted = delta.substitute_power(p == 1 ? Int(0) : mod_nonneg(k, p));
    for (Int u = 0; u < p; ++u) {
        if (twisted == delta.times_power(u)) {
            out.realizable = true;
            out.u = u;
            return out;
        }
    }
    out.reason = "Delta(t^k) is not t^u Delta(t) for any u: the homotopy class contains no diffeomorphism";
    return out;
}

WeightEquivalence weights_diffeo_equivalent(const Int& p, const VecZ& w1, const VecZ& w2) {
    if (w1.size() != w2.size()) throw bad_input("weights_diffeo_equivalent: weight lists differ in length");
    if (w1.empty()) throw bad_input("weights_diffeo_equivalent: empty weights");
    if (w1.size() > 20) throw bad_input("weights_diffeo_equivalent: too many weights for exhaustive search");
    for (size_t j = 0; j < w1.size(); ++j)
        if (!is_unit_mod(w1[j], p) || !is_unit_mod(w2[j], p))
            throw validation_error("weights_diffeo_equivalent: weights must be units mod p");

    WeightEquivalence out;
    size_t m = w1.size();
    std::vector<Int> target;
    for (const Int& w : w2) target.push_back(mod_nonneg(w, p));
    std::vector<Int> target_sorted = target;
    std::sort(target_sorted.begin(), target_sorted.end());

    Int k_max = p > 1 ? Int(p - 1) : Int(1);
    for (Int k = 1; k <= k_max; ++k) {
        if (p > 1 && !is_unit_mod(k, p)) continue;
        for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
            std::vector<Int> image(m);
            for (size_t i = 0; i < m; ++i) {
                Int v = k * w1[i];
                if (mask & (1ul << i)) v = -v;
                image[i] = mod_nonneg(v, p);
            }
            std::vector<Int> image_sorted = image;
            std::sort(image_sorted.begin(), image_sorted.end());
            if (image_sorted != target_sorted) continue;
            int flips = __builtin_popcountl(mask);
            bool even = flips % 2 == 0;
            if (!out.equivalent || (even && !out.even_sign_witness)) {
                out.equivalent = true;
                out.even_sign_witness = out.even_sign_witness || even;
                out.unit = k;
                out.sign_flips.clear();
                for (size_t i = 0; i < m; ++i)
                    if (mask & (1ul << i)) out.sign_flips.push_back(static_cast<int>(i));
                // Match w2 entries to witness images by multiset matching.
                out.permutation.assign(m, -1);
                std::vector<bool> used(m, false);
                for (size_t i = 0; i < m; ++i)
                    for (size_t j = 0; j < m; ++j) {
                        if (used[j] || image[j] != target[i]) continue;
                        out.permutation[i] = static_cast<int>(j);
                        used[j] = true;
                        break;
                    }
            }
            if (out.even_sign_witness) return out;
        }
        if (p == 1) break;
    }
    return out;
}

namespace {

// Per-class degree profile: class m -> g_tilde of its representative.
std::map<Int, Int> class_profile(const LensNormalForm& form) {
    std::map<Int, Int> prof;
    for (Int N = 1; N <= form.p; ++N) prof[mod_nonneg(N, form.p)] = degree_function(form, N);
    return prof;
}

}  // namespace

PairClassification classify_pair(const Int& p, const VecZ& w1, const VecZ& w2) {
    PairClassification out;
    out.form1 = lens_normal_form(p, w1);
    out.form2 = lens_normal_form(p, w2);
    out.diffeo = weights_diffeo_equivalent(p, w1, w2);
    out.cbs1 = cbs(out.form1);
    out.cbs2 = cbs(out.form2);

    if (out.cbs1 != out.cbs2) {
        out.verdict = PairVerdict::DistinguishedByCbs;
        return out;
    }
    // Per-class data compared up to the unit relabeling induced by a
    // contactomorphism (conjugation is the unit -1).
    auto prof1 = class_profile(out.form1);
    auto prof2 = class_profile(out.form2);
    Int k_max = p > 1 ? Int(p - 1) : Int(1);
    for (Int k = 1; k <= k_max; ++k) {
        if (p > 1 && !is_unit_mod(k, p)) continue;
        bool match = true;
        for (const auto& [cls, g] : prof2) {
            if (prof1.at(mod_nonneg(k * cls, p)) != g) {
                match = false;
                break;
            }
        }
        if (match) {
            out.matching_unit = p == 1 ? Int(1) : mod_nonneg(k, p);
            break;
        }
        if (p == 1) break;
    }
    if (!out.matching_unit) {
        out.verdict = PairVerdict::DistinguishedByClass;
        return out;
    }
    out.verdict = out.diffeo.equivalent ? PairVerdict::CandidatesAgree : PairVerdict::DiffeoInequivalent;
    return out;
}

const char* verdict_name(PairVerdict v) {
    switch (v) {
        case PairVerdict::CandidatesAgree: return "not distinguished (candidates agree)";
        case PairVerdict::DistinguishedByCbs: return "distinguished-by-cbs";
        case PairVerdict::DistinguishedByClass: return "distinguished-by-class-data";
        case PairVerdict::DiffeoInequivalent: return "diffeo-inequivalent";
    }
    return "?";
}

}  // namespace tcc
