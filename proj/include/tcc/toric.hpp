#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tcc/lattice.hpp"
#include "tcc/numeric.hpp"

namespace tcc {

// Integral simplicial polytope with unimodular simplex facets. Vertices are
// stored sorted lexicographically and facet index sets sorted, so facet ids
// are deterministic across runs.
struct ToricDiagram {
    int dim = 0;
    std::vector<VecZ> vertices;
    struct Facet {
        std::vector<int> verts;  // sorted vertex indices, exactly dim many
        VecZ normal;             // primitive inner normal u
        Int offset;              // <u, x> >= offset on the diagram
    };
    std::vector<Facet> facets;

    bool contains(const VecQ& point) const;          // closed polytope
    bool strictly_contains(const VecQ& point) const; // interior
    VecQ centroid() const;
};

struct DiagramValidation {
    std::optional<ToricDiagram> diagram;
    std::vector<std::string> issues;    // violated conditions (empty iff valid)
    std::vector<std::string> warnings;  // e.g. non-vertex points discarded
    bool valid() const { return diagram.has_value(); }
};

// Validate a point set as a toric diagram: computes the vertex set
// (discarding non-vertex points with a warning), enumerates facets by brute
// force over dim-subsets with exact supporting-hyperplane tests, and checks
// that every facet is a unimodular simplex.
DiagramValidation validate_toric_diagram(const std::vector<VecZ>& points);

// Good moment cone; normals indexed like the diagram vertices when built
// from a diagram, edges (1-dimensional faces) given by the sets of facet
// indices active on them.
struct MomentCone {
    int ambient_dim = 0;                  // n+1
    std::vector<VecZ> normals;            // primitive, one per facet
    std::vector<std::vector<int>> edges;  // sorted index sets of size n
    std::optional<VecZ> gorenstein;       // covector with <nu*, nu_j> = 1

    int dim_n() const { return ambient_dim - 1; }
};

// Cone over a validated diagram: normals (v_j, 1), edges = diagram facets,
// Gorenstein certificate reading the last coordinate.
MomentCone moment_cone(const ToricDiagram& d);

// Whether the cone is in the normalized Gorenstein shape nu_j = (v_j, 1);
// if so the diagram is recoverable from the normals.
bool has_diagram_shape(const MomentCone& c);
std::vector<VecZ> diagram_vertices_of(const MomentCone& c);

struct GoodConeReport {
    bool good = false;
    std::vector<std::string> failures;          // first entries explain the verdict
    std::vector<VecZ> extreme_rays;             // primitive generators
    std::vector<std::vector<int>> edge_active;  // active facet sets per ray
};

// Full goodness check: primitivity, minimality (every normal supports a
// facet, witnessed by a relative-interior point assembled from basic
// solutions), strict convexity, and the integral-basis condition on every
// face of codimension 1..n enumerated combinatorially.
GoodConeReport check_good_cone(const std::vector<VecZ>& normals);

// Integral covector nu* with nu*(nu_j) = 1 for all j, when one exists.
std::optional<VecZ> gorenstein_certificate(const std::vector<VecZ>& normals);

// Image of the cone under a unimodular transform: normals map by U, edges
// are preserved, the certificate transforms contravariantly.
MomentCone apply_lattice_transform(const MomentCone& cone, const IntMat& u);

// Moment cone of the Gorenstein lens space L^{2n+1}_p(alpha_0, -alpha_1,
// ..., -alpha_{n-1}, 1): normals e_{n+1}, e_j + e_{n+1} (j = 1..n-1) and
// (alpha_1, ..., alpha_{n-1}, p, 1). Requires gcd(alpha_j, p) = 1 for
// j = 1..n-1 and for alpha_0 = sum(alpha_j) - 1.
MomentCone build_lens_cone(int n, const Int& p, const VecZ& alpha_bar);

// Index of the distinguished edge of a lens cone (the one omitting the
// facet of nu_0), whose orbit survives the origin-based Reeb vector.
int lens_distinguished_edge(const MomentCone& cone);

// Parallelogram diagram conv((0,0), (1,0), (q,p), (q+1,p)) of the unit
// cosphere bundle of a 3-dimensional lens space; gcd(p, q) = 1.
ToricDiagram build_cosphere_diagram(const Int& p, const Int& q);

struct PrequantizationCone {
    MomentCone cone;
    std::optional<ToricDiagram> diagram;  // present iff all offsets are 1
};

// Cone over a Delzant polytope {<x, v_j> + lambda_j >= 0}: normals
// (v_j, lambda_j). Goodness is verified; Gorenstein iff a certificate
// exists, and the toric diagram conv(v_j) is attached when all lambda_j = 1.
PrequantizationCone build_prequantization_cone(const std::vector<VecZ>& polytope_normals,
                                               const VecZ& offsets);

}  // namespace tcc
