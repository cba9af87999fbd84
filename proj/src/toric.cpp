#include "tcc/toric.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tcc {

namespace {

std::string idx_str(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

Rat dot(const VecZ& a, const VecQ& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

Int dot(const VecZ& a, const VecZ& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Is x in the convex hull of pts? Caratheodory: x is in the hull iff it is a
// convex combination of some affinely independent subset of at most n+1
// points, found by solving the exact barycentric system per subset.
bool in_convex_hull(const VecZ& x, const std::vector<VecZ>& pts) {
    size_t n = x.size();
    size_t kmax = std::min(pts.size(), n + 1);
    std::vector<int> idx;
    std::function<bool(size_t, size_t)> rec = [&](size_t start, size_t need) -> bool {
        if (need == 0) {
            size_t k = idx.size();
            // Solve sum lambda_i p_i = x, sum lambda_i = 1.
            std::vector<VecQ> aug(n + 1, VecQ(k + 1, Rat(0)));
            for (size_t r = 0; r < n; ++r) {
                for (size_t j = 0; j < k; ++j) aug[r][j] = Rat(pts[static_cast<size_t>(idx[j])][r]);
                aug[r][k] = Rat(x[r]);
            }
            for (size_t j = 0; j <= k; ++j) aug[n][j] = 1;
            // Rational elimination with consistency + uniqueness check.
            size_t rank = 0;
            std::vector<int> pivot_of_col(k, -1);
            for (size_t c = 0; c < k && rank < n + 1; ++c) {
                size_t p = rank;
                while (p < n + 1 && aug[p][c] == 0) ++p;
                if (p == n + 1) continue;
                std::swap(aug[rank], aug[p]);
                Rat inv = Rat(1) / aug[rank][c];
                for (size_t j = c; j <= k; ++j) aug[rank][j] *= inv;
                for (size_t i = 0; i < n + 1; ++i) {
                    if (i == rank || aug[i][c] == 0) continue;
                    Rat f = aug[i][c];
                    for (size_t j = c; j <= k; ++j) aug[i][j] -= f * aug[rank][j];
                }
                pivot_of_col[c] = static_cast<int>(rank);
                ++rank;
            }
            if (rank < k) return false;  // affinely dependent; smaller subsets cover it
            for (size_t i = rank; i < n + 1; ++i)
                if (aug[i][k] != 0) return false;  // inconsistent
            for (size_t c = 0; c < k; ++c)
                if (aug[static_cast<size_t>(pivot_of_col[c])][k] < 0) return false;
            return true;
        }
        for (size_t i = start; i + need <= pts.size(); ++i) {
            idx.push_back(static_cast<int>(i));
            if (rec(i + 1, need - 1)) return true;
            idx.pop_back();
        }
        return false;
    };
    for (size_t k = 1; k <= kmax; ++k) {
        idx.clear();
        if (rec(0, k)) return true;
    }
    return false;
}

int affine_rank(const std::vector<VecZ>& pts) {
    if (pts.size() <= 1) return 0;
    std::vector<VecZ> diffs;
    for (size_t i = 1; i < pts.size(); ++i) {
        VecZ d(pts[0].size());
        for (size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(d));
    }
    return rank(IntMat::from_rows(diffs));
}

// Stack (v, 1) for each vertex of a candidate facet and test the Z-basis
// extension condition.
bool facet_unimodular(const std::vector<VecZ>& verts) {
    std::vector<VecZ> rows;
    for (const VecZ& v : verts) {
        VecZ r = v;
        r.push_back(1);
        rows.push_back(std::move(r));
    }
    return extends_to_basis(rows);
}

}  // namespace

bool ToricDiagram::contains(const VecQ& point) const {
    for (const auto& f : facets)
        if (dot(f.normal, point) < Rat(f.offset)) return false;
    return true;
}

bool ToricDiagram::strictly_contains(const VecQ& point) const {
    for (const auto& f : facets)
        if (dot(f.normal, point) <= Rat(f.offset)) return false;
    return true;
}

VecQ ToricDiagram::centroid() const {
    VecQ c(static_cast<size_t>(dim), Rat(0));
    for (const auto& v : vertices)
        for (size_t j = 0; j < c.size(); ++j) c[j] += Rat(v[j]);
    for (auto& x : c) x /= Rat(static_cast<long>(vertices.size()));
    return c;
}

DiagramValidation validate_toric_diagram(const std::vector<VecZ>& points) {
    DiagramValidation res;
    if (points.empty()) {
        res.issues.push_back("no points given");
        return res;
    }
    size_t n = points[0].size();
    if (n < 1) {
        res.issues.push_back("dimension must be at least 1");
        return res;
    }
    for (const auto& p : points)
        if (p.size() != n) {
            res.issues.push_back("points have inconsistent dimensions");
            return res;
        }

    // Deduplicate.
    std::vector<VecZ> pts;
    {
        std::set<VecZ> seen;
        for (const auto& p : points) {
            if (seen.insert(p).second)
                pts.push_back(p);
            else
                res.warnings.push_back("duplicate point " + to_string(p) + " ignored");
        }
    }
    if (pts.size() < n + 1) {
        res.issues.push_back("need at least n+1 distinct points in dimension n");
        return res;
    }
    if (affine_rank(pts) < static_cast<int>(n)) {
        res.issues.push_back("point set is not full-dimensional");
        return res;
    }

    // Vertex filter: drop points inside the hull of the others.
    std::vector<VecZ> vertices;
    for (size_t i = 0; i < pts.size(); ++i) {
        std::vector<VecZ> others;
        for (size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (in_convex_hull(pts[i], others))
            res.warnings.push_back("point " + to_string(pts[i]) + " is not a vertex; discarded");
        else
            vertices.push_back(pts[i]);
    }
    std::sort(vertices.begin(), vertices.end());
    if (vertices.size() < n + 1 || affine_rank(vertices) < static_cast<int>(n)) {
        res.issues.push_back("vertex set is not full-dimensional");
        return res;
    }

    // Facet enumeration: brute force over n-subsets of vertices with exact
    // supporting-hyperplane tests.
    ToricDiagram d;
    d.dim = static_cast<int>(n);
    d.vertices = vertices;
    std::set<std::pair<VecZ, Int>> seen_hyperplanes;
    std::set<std::pair<VecZ, Int>> reported_nonsimplicial;

    std::vector<int> subset(n);
    std::function<void(size_t, size_t)> enumerate = [&](size_t start, size_t picked) {
        if (picked == n) {
            // Hyperplane through the chosen vertices.
            VecZ u;
            if (n == 1) {
                u = VecZ{Int(1)};
            } else {
                std::vector<VecZ> diffs;
                for (size_t i = 1; i < n; ++i) {
                    VecZ diff(n);
                    for (size_t j = 0; j < n; ++j)
                        diff[j] = vertices[static_cast<size_t>(subset[i])][j] -
                                  vertices[static_cast<size_t>(subset[0])][j];
                    diffs.push_back(std::move(diff));
                }
                auto ker = kernel_basis(IntMat::from_rows(diffs));
                if (ker.size() != 1) return;  // affinely dependent subset
                u = primitive_direction(ker[0]);
            }
            Int c = dot(u, vertices[static_cast<size_t>(subset[0])]);
            int above = 0, below = 0;
            std::vector<int> on;
            for (size_t i = 0; i < vertices.size(); ++i) {
                Int s = dot(u, vertices[i]) - c;
                if (s > 0)
                    ++above;
                else if (s < 0)
                    ++below;
                else
                    on.push_back(static_cast<int>(i));
            }
            if (above > 0 && below > 0) return;  // not supporting
            if (below > 0) {                     // orient inward
                for (auto& x : u) x = -x;
                c = -c;
            }
            auto key = std::make_pair(u, c);
            if (!seen_hyperplanes.insert(key).second) return;
            if (on.size() > n) {
                if (reported_nonsimplicial.insert(key).second)
                    res.issues.push_back("facet " + idx_str(on) + " has " + std::to_string(on.size()) +
                                         " > n vertices on its hyperplane (not simplicial)");
                return;
            }
            ToricDiagram::Facet f;
            f.verts = on;
            f.normal = u;
            f.offset = c;
            std::vector<VecZ> fverts;
            for (int i : on) fverts.push_back(vertices[static_cast<size_t>(i)]);
            if (!facet_unimodular(fverts))
                res.issues.push_back("facet " + idx_str(on) +
                                     " fails the integral-basis extension test (not unimodular)");
            d.facets.push_back(std::move(f));
            return;
        }
        for (size_t i = start; vertices.size() - i >= n - picked; ++i) {
            subset[picked] = static_cast<int>(i);
            enumerate(i + 1, picked + 1);
        }
    };
    enumerate(0, 0);

    std::sort(d.facets.begin(), d.facets.end(),
              [](const ToricDiagram::Facet& a, const ToricDiagram::Facet& b) { return a.verts < b.verts; });

    if (!res.issues.empty()) return res;
    if (d.facets.size() < n + 1) {
        res.issues.push_back("facet enumeration found fewer than n+1 facets");
        return res;
    }
    res.diagram = std::move(d);
    return res;
}

MomentCone moment_cone(const ToricDiagram& d) {
    MomentCone c;
    c.ambient_dim = d.dim + 1;
    for (const auto& v : d.vertices) {
        VecZ nu = v;
        nu.push_back(1);
        c.normals.push_back(std::move(nu));
    }
    for (const auto& f : d.facets) c.edges.push_back(f.verts);
    VecZ cert(static_cast<size_t>(c.ambient_dim), Int(0));
    cert.back() = 1;
    c.gorenstein = cert;
    return c;
}

bool has_diagram_shape(const MomentCone& c) {
    for (const auto& nu : c.normals)
        if (nu.back() != 1) return false;
    return true;
}

std::vector<VecZ> diagram_vertices_of(const MomentCone& c) {
    if (!has_diagram_shape(c)) throw validation_error("cone normals are not in the (v, 1) shape");
    std::vector<VecZ> vs;
    for (const auto& nu : c.normals) vs.emplace_back(nu.begin(), nu.end() - 1);
    return vs;
}

GoodConeReport check_good_cone(const std::vector<VecZ>& normals) {
    GoodConeReport rep;
    if (normals.empty()) {
        rep.failures.push_back("no normals given");
        return rep;
    }
    size_t amb = normals[0].size();
    int n = static_cast<int>(amb) - 1;
    if (n < 1) {
        rep.failures.push_back("ambient dimension must be at least 2");
        return rep;
    }
    for (const auto& nu : normals)
        if (nu.size() != amb) {
            rep.failures.push_back("normals have inconsistent dimensions");
            return rep;
        }
    if (normals.size() < amb) {
        rep.failures.push_back("need at least n+1 normals in dimension n+1");
        return rep;
    }
    for (size_t j = 0; j < normals.size(); ++j) {
        Int g = gcd_of(normals[j]);
        if (g == 0) {
            rep.failures.push_back("normal " + std::to_string(j) + " is zero");
            return rep;
        }
        if (g != 1) rep.failures.push_back("normal " + std::to_string(j) + " is not primitive");
    }
    {
        std::set<VecZ> seen;
        for (size_t j = 0; j < normals.size(); ++j)
            if (!seen.insert(normals[j]).second)
                rep.failures.push_back("normal " + std::to_string(j) + " duplicates an earlier one");
    }
    if (!rep.failures.empty()) return rep;

    if (rank(IntMat::from_columns(normals)) < static_cast<int>(amb)) {
        rep.failures.push_back("normals do not span: the cone contains a line (not strictly convex)");
        return rep;
    }

    // Extreme rays: basic solutions of n-subsets of tight constraints.
    std::set<VecZ> rayset;
    std::vector<int> subset(static_cast<size_t>(n));
    std::function<void(size_t, size_t)> enumerate = [&](size_t start, size_t picked) {
        if (picked == static_cast<size_t>(n)) {
            std::vector<VecZ> rows;
            for (size_t i = 0; i < static_cast<size_t>(n); ++i) rows.push_back(normals[static_cast<size_t>(subset[i])]);
            auto ker = kernel_basis(IntMat::from_rows(rows));
            if (ker.size() != 1) return;
            VecZ r = primitive_direction(ker[0]);
            bool ge = true, le = true;
            for (const auto& nu : normals) {
                int s = sign_of(dot(nu, r));
                if (s > 0) le = false;
                if (s < 0) ge = false;
            }
            if (ge)
                rayset.insert(r);
            else if (le) {
                for (auto& x : r) x = -x;
                rayset.insert(r);
            }
            return;
        }
        for (size_t i = start; normals.size() - i >= static_cast<size_t>(n) - picked; ++i) {
            subset[picked] = static_cast<int>(i);
            enumerate(i + 1, picked + 1);
        }
    };
    enumerate(0, 0);

    std::vector<VecZ> rays(rayset.begin(), rayset.end());
    if (rays.empty()) {
        rep.failures.push_back("cone has no extreme rays (degenerate input)");
        return rep;
    }

    // Relative interior point of C: the sum of all extreme rays. Full
    // dimensionality means every normal is strict there.
    {
        VecZ x(amb, Int(0));
        for (const auto& r : rays)
            for (size_t i = 0; i < amb; ++i) x[i] += r[i];
        for (size_t j = 0; j < normals.size(); ++j)
            if (dot(normals[j], x) <= 0) {
                rep.failures.push_back("normal " + std::to_string(j) +
                                       " is tight on the whole cone (cone not full-dimensional)");
                return rep;
            }
    }

    // Minimality: every normal must support a facet, witnessed by a point
    // that is tight for it alone.
    std::vector<std::vector<int>> active_of_ray(rays.size());
    for (size_t r = 0; r < rays.size(); ++r)
        for (size_t j = 0; j < normals.size(); ++j)
            if (dot(normals[j], rays[r]) == 0) active_of_ray[r].push_back(static_cast<int>(j));

    for (size_t j = 0; j < normals.size(); ++j) {
        VecZ s(amb, Int(0));
        bool any = false;
        for (size_t r = 0; r < rays.size(); ++r) {
            if (dot(normals[j], rays[r]) != 0) continue;
            any = true;
            for (size_t i = 0; i < amb; ++i) s[i] += rays[r][i];
        }
        if (!any) {
            rep.failures.push_back("normal " + std::to_string(j) + " does not define a facet (not minimal)");
            continue;
        }
        for (size_t i = 0; i < normals.size(); ++i) {
            if (i == j) continue;
            if (dot(normals[i], s) == 0) {
                rep.failures.push_back("normal " + std::to_string(j) + " does not define a facet (face tight for " +
                                       std::to_string(i) + " too)");
                break;
            }
        }
    }
    if (!rep.failures.empty()) return rep;

    // Faces of codimension 1..n as intersections of facets, identified by
    // their extreme-ray sets. Edges must be singleton ray sets.
    std::map<std::vector<int>, std::vector<int>> faces;  // ray set -> active normals
    auto close = [&](const std::vector<int>& rayidx) {
        if (rayidx.empty()) return;
        std::vector<int> act;
        for (size_t j = 0; j < normals.size(); ++j) {
            bool tight = true;
            for (int r : rayidx)
                if (dot(normals[j], rays[static_cast<size_t>(r)]) != 0) {
                    tight = false;
                    break;
                }
            if (tight) act.push_back(static_cast<int>(j));
        }
        faces.emplace(rayidx, act);
    };

    std::vector<std::vector<int>> facet_rays(normals.size());
    for (size_t j = 0; j < normals.size(); ++j)
        for (size_t r = 0; r < rays.size(); ++r)
            if (dot(normals[j], rays[r]) == 0) facet_rays[j].push_back(static_cast<int>(r));
    for (const auto& fr : facet_rays) close(fr);
    for (;;) {
        std::vector<std::vector<int>> fresh;
        for (auto it1 = faces.begin(); it1 != faces.end(); ++it1)
            for (auto it2 = std::next(it1); it2 != faces.end(); ++it2) {
                std::vector<int> inter;
                std::set_intersection(it1->first.begin(), it1->first.end(), it2->first.begin(),
                                      it2->first.end(), std::back_inserter(inter));
                if (!inter.empty() && !faces.count(inter)) fresh.push_back(std::move(inter));
            }
        if (fresh.empty()) break;
        for (const auto& f : fresh) close(f);
    }
    for (size_t r = 0; r < rays.size(); ++r) close(std::vector<int>{static_cast<int>(r)});

    for (const auto& [rayidx, act] : faces) {
        std::vector<VecZ> rvs;
        for (int r : rayidx) rvs.push_back(rays[static_cast<size_t>(r)]);
        int dim = rank(IntMat::from_rows(rvs));
        int codim = static_cast<int>(amb) - dim;
        if (codim < 1 || codim > n) continue;
        if (static_cast<int>(act.size()) != codim) {
            rep.failures.push_back("codimension-" + std::to_string(codim) + " face with rays " + idx_str(rayidx) +
                                   " is the intersection of " + std::to_string(act.size()) +
                                   " facets, expected exactly " + std::to_string(codim));
            continue;
        }
        std::vector<VecZ> face_normals;
        for (int j : act) face_normals.push_back(normals[static_cast<size_t>(j)]);
        if (!extends_to_basis(face_normals))
            rep.failures.push_back("face with normals " + idx_str(act) +
                                   " fails the integral-basis extension test");
    }
    // Edges: the singleton faces; verify each ray spans an actual edge.
    for (size_t r = 0; r < rays.size(); ++r) {
        std::vector<int> self{static_cast<int>(r)};
        auto it = faces.find(self);
        bool isolated = true;
        // The smallest face containing ray r is cut out by its active set;
        // it must contain no other extreme ray.
        for (size_t r2 = 0; r2 < rays.size() && isolated; ++r2) {
            if (r2 == r) continue;
            bool contains = std::includes(active_of_ray[r2].begin(), active_of_ray[r2].end(),
                                          active_of_ray[r].begin(), active_of_ray[r].end());
            if (contains) isolated = false;
        }
        if (!isolated)
            rep.failures.push_back("extreme ray " + std::to_string(r) + " does not span a face cut out by facets");
        (void)it;
    }

    rep.extreme_rays = rays;
    for (size_t r = 0; r < rays.size(); ++r) rep.edge_active.push_back(active_of_ray[r]);
    // Deterministic edge order: sort by active sets.
    {
        std::vector<size_t> perm(rays.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end(),
                  [&](size_t a, size_t b) { return rep.edge_active[a] < rep.edge_active[b]; });
        std::vector<VecZ> r2;
        std::vector<std::vector<int>> e2;
        for (size_t i : perm) {
            r2.push_back(rep.extreme_rays[i]);
            e2.push_back(rep.edge_active[i]);
        }
        rep.extreme_rays = std::move(r2);
        rep.edge_active = std::move(e2);
    }
    rep.good = rep.failures.empty();
    return rep;
}

std::optional<VecZ> gorenstein_certificate(const std::vector<VecZ>& normals) {
    if (normals.empty()) return std::nullopt;
    // <nu*, nu_j> = 1 for all j: an integer solution of (normals as rows) x = 1.
    IntMat a = IntMat::from_rows(normals);
    VecZ ones(normals.size(), Int(1));
    return solve_integer_linear(a, ones);
}

MomentCone apply_lattice_transform(const MomentCone& cone, const IntMat& u) {
    if (u.rows() != cone.ambient_dim || u.cols() != cone.ambient_dim)
        throw bad_input("apply_lattice_transform: transform has wrong shape");
    Int d = determinant(u);
    if (d != 1 && d != -1) throw validation_error("apply_lattice_transform: matrix is not unimodular");
    MomentCone out;
    out.ambient_dim = cone.ambient_dim;
    for (const auto& nu : cone.normals) {
        VecZ w(static_cast<size_t>(cone.ambient_dim), Int(0));
        for (int i = 0; i < u.rows(); ++i)
            for (int j = 0; j < u.cols(); ++j) w[static_cast<size_t>(i)] += u.at(i, j) * nu[static_cast<size_t>(j)];
        out.normals.push_back(std::move(w));
    }
    out.edges = cone.edges;
    if (cone.gorenstein) {
        IntMat uinv = unimodular_inverse(u);
        VecZ c(static_cast<size_t>(cone.ambient_dim), Int(0));
        for (int j = 0; j < uinv.cols(); ++j)
            for (int i = 0; i < uinv.rows(); ++i)
                c[static_cast<size_t>(j)] += (*cone.gorenstein)[static_cast<size_t>(i)] * uinv.at(i, j);
        out.gorenstein = std::move(c);
    }
    return out;
}

MomentCone build_lens_cone(int n, const Int& p, const VecZ& alpha_bar) {
    if (n < 1) throw bad_input("build_lens_cone: n must be at least 1");
    if (p < 1) throw bad_input("build_lens_cone: p must be positive");
    if (static_cast<int>(alpha_bar.size()) != n - 1)
        throw bad_input("build_lens_cone: need n-1 alpha entries");
    for (size_t j = 0; j < alpha_bar.size(); ++j)
        if (gcd(alpha_bar[j], p) != 1)
            throw validation_error("build_lens_cone: gcd(alpha_" + std::to_string(j + 1) + ", p) = " +
                                   gcd(alpha_bar[j], p).get_str() + " != 1");
    Int alpha0 = -1;
    for (const Int& a : alpha_bar) alpha0 += a;
    if (gcd(alpha0, p) != 1)
        throw validation_error("build_lens_cone: gcd(alpha_0, p) = " + gcd(alpha0, p).get_str() +
                               " != 1 (alpha_0 = " + alpha0.get_str() + ")");

    size_t amb = static_cast<size_t>(n) + 1;
    MomentCone c;
    c.ambient_dim = n + 1;
    VecZ nu0(amb, Int(0));
    nu0.back() = 1;
    c.normals.push_back(nu0);
    for (int j = 1; j <= n - 1; ++j) {
        VecZ nu(amb, Int(0));
        nu[static_cast<size_t>(j - 1)] = 1;
        nu.back() = 1;
        c.normals.push_back(std::move(nu));
    }
    VecZ nun(amb, Int(0));
    for (int j = 0; j < n - 1; ++j) nun[static_cast<size_t>(j)] = alpha_bar[static_cast<size_t>(j)];
    nun[static_cast<size_t>(n - 1)] = p;
    nun.back() = 1;
    c.normals.push_back(std::move(nun));

    // Edges omit one facet each.
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<int> e;
        for (int j = 0; j <= n; ++j)
            if (j != skip) e.push_back(j);
        c.edges.push_back(std::move(e));
    }
    std::sort(c.edges.begin(), c.edges.end());

    VecZ cert(amb, Int(0));
    cert.back() = 1;
    c.gorenstein = cert;

    auto rep = check_good_cone(c.normals);
    if (!rep.good)
        throw internal_error("build_lens_cone: constructed cone is not good: " + rep.failures.front());
    return c;
}

int lens_distinguished_edge(const MomentCone& cone) {
    // The distinguished edge omits exactly the facet of nu_0 = (0, ..., 0, 1),
    // whatever position that normal ended up in.
    VecZ nu0(static_cast<size_t>(cone.ambient_dim), Int(0));
    nu0.back() = 1;
    int j0 = -1;
    for (size_t j = 0; j < cone.normals.size(); ++j)
        if (cone.normals[j] == nu0) j0 = static_cast<int>(j);
    if (j0 < 0) throw validation_error("lens_distinguished_edge: no normal equals (0, ..., 0, 1)");
    std::vector<int> want;
    for (size_t j = 0; j < cone.normals.size(); ++j)
        if (static_cast<int>(j) != j0) want.push_back(static_cast<int>(j));
    for (size_t e = 0; e < cone.edges.size(); ++e)
        if (cone.edges[e] == want) return static_cast<int>(e);
    throw internal_error("lens_distinguished_edge: complement edge not found");
}

ToricDiagram build_cosphere_diagram(const Int& p, const Int& q) {
    if (p < 1 || q < 1) throw bad_input("build_cosphere_diagram: p and q must be positive");
    if (gcd(p, q) != 1)
        throw validation_error("build_cosphere_diagram: gcd(p, q) = " + gcd(p, q).get_str() + " != 1");
    std::vector<VecZ> pts = {{Int(0), Int(0)}, {Int(1), Int(0)}, {q, p}, {q + 1, p}};
    auto val = validate_toric_diagram(pts);
    if (!val.valid())
        throw internal_error("build_cosphere_diagram: parallelogram failed validation: " + val.issues.front());
    return *val.diagram;
}

PrequantizationCone build_prequantization_cone(const std::vector<VecZ>& polytope_normals,
                                               const VecZ& offsets) {
    if (polytope_normals.size() != offsets.size() || polytope_normals.empty())
        throw bad_input("build_prequantization_cone: need matching normals and offsets");
    PrequantizationCone out;
    out.cone.ambient_dim = static_cast<int>(polytope_normals[0].size()) + 1;
    for (size_t j = 0; j < polytope_normals.size(); ++j) {
        VecZ nu = polytope_normals[j];
        nu.push_back(offsets[j]);
        out.cone.normals.push_back(std::move(nu));
    }
    auto rep = check_good_cone(out.cone.normals);
    if (!rep.good)
        throw validation_error("build_prequantization_cone: data is not Delzant (cone not good): " +
                               rep.failures.front());
    out.cone.edges = rep.edge_active;
    if (auto cert = gorenstein_certificate(out.cone.normals)) out.cone.gorenstein = *cert;
    bool all_one = true;
    for (const Int& l : offsets)
        if (l != 1) all_one = false;
    if (all_one) {
        auto val = validate_toric_diagram(polytope_normals);
        if (!val.valid())
            throw validation_error("build_prequantization_cone: offsets are all 1 but conv(v_j) is not a diagram: " +
                                   val.issues.front());
        out.diagram = *val.diagram;
    }
    return out;
}

}  // namespace tcc
