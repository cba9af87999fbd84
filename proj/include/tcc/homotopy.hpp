#pragma once

#include <vector>

#include "tcc/exactfield.hpp"
#include "tcc/toric.hpp"

namespace tcc {

// Fundamental-group data of the toric symplectic cone. The group is cyclic
// of order N = gcd of the maximal minors of the normal matrix, generated by
// the class of any edge completion eta_ell; classes are reported relative to
// a canonical reference edge (the lowest edge id).
struct Pi1Info {
    Int order;                      // N
    int reference_edge = 0;         // lowest edge id
    std::vector<VecZ> etas;         // canonical completion per edge
    std::vector<Int> coefficients;  // c_ell in {0..N-1} with [eta_ell] = c_ell [eta_ref]
};

// Order of pi_1: gcd of all (n+1)x(n+1) minors of the normal matrix. Also
// asserts d_n = 1 (the cyclicity witness); failure means a non-good cone
// slipped through validation.
Int pi1_order(const MomentCone& cone);

// Canonical completion of an edge's normals to a Z-basis. For cones in the
// Gorenstein (v, 1) shape the completion is normalized to have last
// coordinate 1, matching the normalization the index formula expects.
VecZ edge_eta(const MomentCone& cone, int edge);

// Coefficient c with [eta_k] = c [eta_ell] in Z_N, computed from the full
// integral change of basis (no mod-N shortcut, no sign ambiguity).
Int relate_edges(const MomentCone& cone, int edge_ell, int edge_k);

Pi1Info pi1_info(const MomentCone& cone);

struct EdgeClass {
    VecZ eta;
    int sign = 0;        // sign of the eta-coefficient of the Reeb vector
    Int class_in_zn;     // class of the simple orbit, in {0..N-1}
    Int class_order;     // order of that class in Z_N
};

// Class of the simple closed orbit sitting over an edge: [sgn(b) eta] where
// b is the eta-coefficient of the Reeb vector in the edge basis. reeb is the
// component vector of a normalized toric Reeb vector (last entry 1).
EdgeClass edge_class(const MomentCone& cone, int edge, const std::vector<PerturbedScalar>& reeb);

}  // namespace tcc
