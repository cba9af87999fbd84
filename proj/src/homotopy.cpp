#include "tcc/homotopy.hpp"

#include <algorithm>

namespace tcc {

namespace {

std::vector<VecZ> edge_normals(const MomentCone& cone, int edge) {
    if (edge < 0 || edge >= static_cast<int>(cone.edges.size()))
        throw bad_input("edge index out of range");
    std::vector<VecZ> vs;
    for (int j : cone.edges[static_cast<size_t>(edge)]) vs.push_back(cone.normals[static_cast<size_t>(j)]);
    return vs;
}

}  // namespace

Int pi1_order(const MomentCone& cone) {
    IntMat a = IntMat::from_columns(cone.normals);
    Int n_order = gcd_maximal_minors(a);
    // d_n = 1: the gcd of all n x n minors. Equivalent to the first n
    // invariant factors being 1; cheap to read off the Smith form.
    auto snf = smith_normal_form(a);
    for (size_t i = 0; i + 1 < snf.invariant_factors.size(); ++i)
        if (snf.invariant_factors[i] != 1)
            throw validation_error("pi1_order: d_n != 1, cone is not good (invariant factor " +
                                   snf.invariant_factors[i].get_str() + ")");
    if (!snf.invariant_factors.empty() && snf.invariant_factors.back() != n_order)
        throw internal_error("pi1_order: minor gcd and Smith form disagree");
    return n_order;
}

VecZ edge_eta(const MomentCone& cone, int edge) {
    auto vs = edge_normals(cone, edge);
    VecZ eta = complete_to_lattice_basis(vs);
    if (has_diagram_shape(cone) && eta.back() != 1) {
        // Shift by edge normals (all with last coordinate 1) to reach the
        // (h, 1) normalization; the class and the determinant are unchanged.
        Int k = 1 - eta.back();
        for (size_t i = 0; i < eta.size(); ++i) eta[i] += k * vs[0][i];
    }
    return eta;
}

Int relate_edges(const MomentCone& cone, int edge_ell, int edge_k) {
    Int n_order = pi1_order(cone);
    VecZ eta_ell = edge_eta(cone, edge_ell);
    VecZ eta_k = edge_eta(cone, edge_k);
    // Expand eta_k in the Z-basis (nu_{ell_1}, ..., nu_{ell_n}, eta_ell);
    // the eta_ell coefficient is the class relation mod the normal lattice.
    std::vector<VecZ> basis = edge_normals(cone, edge_ell);
    basis.push_back(eta_ell);
    IntMat b = IntMat::from_columns(basis);
    IntMat binv = unimodular_inverse(b);
    size_t amb = eta_k.size();
    Int c = 0;
    for (size_t j = 0; j < amb; ++j) c += binv.at(static_cast<int>(amb) - 1, static_cast<int>(j)) * eta_k[j];
    Int res = mod_nonneg(c, n_order);
    if (n_order > 1 && !is_unit_mod(res, n_order))
        throw internal_error("relate_edges: class coefficient " + res.get_str() + " is not a unit mod " +
                             n_order.get_str());
    return res;
}

Pi1Info pi1_info(const MomentCone& cone) {
    Pi1Info info;
    info.order = pi1_order(cone);
    info.reference_edge = 0;
    for (size_t e = 0; e < cone.edges.size(); ++e) {
        info.etas.push_back(edge_eta(cone, static_cast<int>(e)));
        info.coefficients.push_back(relate_edges(cone, info.reference_edge, static_cast<int>(e)));
    }
    return info;
}

EdgeClass edge_class(const MomentCone& cone, int edge, const std::vector<PerturbedScalar>& reeb) {
    Int n_order = pi1_order(cone);
    EdgeClass out;
    out.eta = edge_eta(cone, edge);
    std::vector<VecZ> basis = edge_normals(cone, edge);
    basis.push_back(out.eta);
    auto coeffs = solve_in_basis(reeb, basis);
    out.sign = coeffs.back().sign();
    if (out.sign == 0) throw degenerate_error("edge_class: the eta-coefficient of the Reeb vector is exactly zero");
    Int c = relate_edges(cone, 0, edge);
    out.class_in_zn = mod_nonneg(Int(out.sign) * c, n_order);
    Int g = gcd(out.class_in_zn, n_order);
    out.class_order = n_order / g;
    return out;
}

}  // namespace tcc
