#include "tcc/lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <cmath>

namespace tcc {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_columns(const std::vector<VecZ>& cols) {
    if (cols.empty()) throw bad_input("from_columns: empty");
    int r = static_cast<int>(cols[0].size());
    IntMat m(r, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<int>(cols[j].size()) != r) throw bad_input("from_columns: ragged input");
        for (int i = 0; i < r; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
    }
    return m;
}

IntMat IntMat::from_rows(const std::vector<VecZ>& rows) {
    if (rows.empty()) throw bad_input("from_rows: empty");
    int c = static_cast<int>(rows[0].size());
    IntMat m(static_cast<int>(rows.size()), c);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw bad_input("from_rows: ragged input");
        for (int j = 0; j < c; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
    }
    return m;
}

VecZ IntMat::row(int r) const {
    VecZ v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
}

VecZ IntMat::col(int c) const {
    VecZ v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw internal_error("IntMat multiply: shape mismatch");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

IntMat IntMat::transposed() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::string IntMat::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    return os.str();
}

Int determinant(const IntMat& m) {
    if (m.rows() != m.cols()) throw internal_error("determinant of non-square matrix");
    int n = m.rows();
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = t / prev;  // exact by Bareiss
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

// Rational row echelon; returns pivot columns. The matrix is modified.
std::vector<int> echelonize(std::vector<VecQ>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

std::vector<VecQ> to_rational_rows(const IntMat& m) {
    std::vector<VecQ> r(static_cast<size_t>(m.rows()), VecQ(static_cast<size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(m.at(i, j));
    return r;
}

}  // namespace

int rank(const IntMat& m) {
    auto rows = to_rational_rows(m);
    return static_cast<int>(echelonize(rows).size());
}

IntMat unimodular_inverse(const IntMat& m) {
    Int d = determinant(m);
    if (d != 1 && d != -1) throw validation_error("unimodular_inverse: determinant is " + d.get_str());
    int n = m.rows();
    // Gauss-Jordan over Q; the result is integral because |det| = 1.
    std::vector<VecQ> aug(static_cast<size_t>(n), VecQ(static_cast<size_t>(2 * n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = Rat(m.at(i, j));
        aug[i][static_cast<size_t>(n + i)] = 1;
    }
    echelonize(aug);
    IntMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v = aug[static_cast<size_t>(i)][static_cast<size_t>(n + j)];
            if (!is_integer(v)) throw internal_error("unimodular_inverse: non-integral entry");
            inv.at(i, j) = v.get_num();
        }
    return inv;
}

std::vector<VecQ> kernel_basis(const IntMat& m) {
    auto rows = to_rational_rows(m);
    auto pivots = echelonize(rows);
    size_t cols = static_cast<size_t>(m.cols());
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<VecQ> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        VecQ v(cols, Rat(0));
        v[f] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[static_cast<size_t>(pivots[r])] = -rows[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

struct SnfWork {
    IntMat m, u, v;  // invariant: original = u * m * v

    void row_swap(int i, int j) {
        for (int c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
        for (int r = 0; r < u.rows(); ++r) std::swap(u.at(r, i), u.at(r, j));
    }
    void col_swap(int i, int j) {
        for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
        for (int c = 0; c < v.cols(); ++c) std::swap(v.at(i, c), v.at(j, c));
    }
    // row_j += k * row_i   (compensated by u: col_i -= k * col_j)
    void row_add(int j, int i, const Int& k) {
        for (int c = 0; c < m.cols(); ++c) m.at(j, c) += k * m.at(i, c);
        for (int r = 0; r < u.rows(); ++r) u.at(r, i) -= k * u.at(r, j);
    }
    // col_j += k * col_i   (compensated by v: row_i -= k * row_j)
    void col_add(int j, int i, const Int& k) {
        for (int r = 0; r < m.rows(); ++r) m.at(r, j) += k * m.at(r, i);
        for (int c = 0; c < v.cols(); ++c) v.at(i, c) -= k * v.at(j, c);
    }
    void row_negate(int i) {
        for (int c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
        for (int r = 0; r < u.rows(); ++r) u.at(r, i) = -u.at(r, i);
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& a) {
    SnfWork w{a, IntMat::identity(a.rows()), IntMat::identity(a.cols())};
    int n = std::min(a.rows(), a.cols());

    for (int t = 0; t < n; ++t) {
        // Pivot: least absolute nonzero entry in the trailing block.
        auto pick_pivot = [&]() -> std::pair<int, int> {
            int pr = -1, pc = -1;
            Int best = 0;
            for (int i = t; i < w.m.rows(); ++i)
                for (int j = t; j < w.m.cols(); ++j) {
                    if (w.m.at(i, j) == 0) continue;
                    Int v = abs(w.m.at(i, j));
                    if (pr < 0 || v < best) {
                        best = v;
                        pr = i;
                        pc = j;
                    }
                }
            return {pr, pc};
        };

        auto [pr, pc] = pick_pivot();
        if (pr < 0) break;  // trailing block is zero
        w.row_swap(t, pr);
        w.col_swap(t, pc);

        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < w.m.rows(); ++i) {
                if (w.m.at(i, t) == 0) continue;
                Int q = floor_div(w.m.at(i, t), w.m.at(t, t));
                w.row_add(i, t, -q);
                if (w.m.at(i, t) != 0) {
                    w.row_swap(t, i);  // remainder is smaller; continue Euclid
                    clean = false;
                }
            }
            for (int j = t + 1; j < w.m.cols(); ++j) {
                if (w.m.at(t, j) == 0) continue;
                Int q = floor_div(w.m.at(t, j), w.m.at(t, t));
                w.col_add(j, t, -q);
                if (w.m.at(t, j) != 0) {
                    w.col_swap(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Divisibility: the pivot must divide every remaining entry.
            bool fixed = false;
            for (int i = t + 1; i < w.m.rows() && !fixed; ++i)
                for (int j = t + 1; j < w.m.cols() && !fixed; ++j)
                    if (w.m.at(i, j) % w.m.at(t, t) != 0) {
                        w.row_add(t, i, Int(1));
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (w.m.at(t, t) < 0) w.row_negate(t);
    }

    SmithResult res{w.u, w.m, w.v, {}};
    for (int i = 0; i < n; ++i) res.invariant_factors.push_back(w.m.at(i, i));
    // Exact verification of the decomposition.
    if (!(w.u * w.m * w.v == a)) throw internal_error("smith_normal_form: reconstruction failed");
    Int du = determinant(w.u), dv = determinant(w.v);
    if ((du != 1 && du != -1) || (dv != 1 && dv != -1))
        throw internal_error("smith_normal_form: transform not unimodular");
    for (int i = 0; i + 1 < n; ++i)
        if (res.invariant_factors[i + 1] != 0 && res.invariant_factors[i] != 0 &&
            res.invariant_factors[i + 1] % res.invariant_factors[i] != 0)
            throw internal_error("smith_normal_form: invariant factors not nested");
    return res;
}

HermiteResult hermite_row_form(const IntMat& a) {
    IntMat h = a;
    int rows = h.rows(), cols = h.cols();
    int r = 0;
    std::vector<int> pivots;
    for (int c = 0; c < cols && r < rows; ++c) {
        // Euclid on column c below row r.
        for (;;) {
            int nz = -1;
            Int best = 0;
            for (int i = r; i < rows; ++i) {
                if (h.at(i, c) == 0) continue;
                Int v = abs(h.at(i, c));
                if (nz < 0 || v < best) {
                    best = v;
                    nz = i;
                }
            }
            if (nz < 0) break;
            if (nz != r)
                for (int j = 0; j < cols; ++j) std::swap(h.at(r, j), h.at(nz, j));
            bool done = true;
            for (int i = r + 1; i < rows; ++i) {
                if (h.at(i, c) == 0) continue;
                Int q = floor_div(h.at(i, c), h.at(r, c));
                for (int j = 0; j < cols; ++j) h.at(i, j) -= q * h.at(r, j);
                if (h.at(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0)
            for (int j = 0; j < cols; ++j) h.at(r, j) = -h.at(r, j);
        // Reduce entries above the pivot into least nonnegative residues.
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(h.at(i, c), h.at(r, c));
            if (q != 0)
                for (int j = 0; j < cols; ++j) h.at(i, j) -= q * h.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<VecZ> kept;
    for (int i = 0; i < r; ++i) kept.push_back(h.row(i));
    HermiteResult res{kept.empty() ? IntMat() : IntMat::from_rows(kept), pivots};
    return res;
}

namespace {

void for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    if (k == 0) {
        f(idx);
        return;
    }
    for (;;) {
        if (f(idx)) return;  // callback may stop early
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

double log_binomial(int n, int k) {
    double s = 0;
    for (int i = 0; i < k; ++i) s += std::log(double(n - i)) - std::log(double(i + 1));
    return s;
}

}  // namespace

Int gcd_maximal_minors(const IntMat& a) {
    if (a.rows() > a.cols()) throw bad_input("gcd_maximal_minors: expects rows <= cols");
    int r = a.rows(), c = a.cols();
    if (c <= 20 || log_binomial(c, r) < std::log(1e6)) {
        Int g = 0;
        for_each_subset(c, r, [&](const std::vector<int>& idx) {
            IntMat sq(r, r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) sq.at(i, j) = a.at(i, idx[static_cast<size_t>(j)]);
            g = gcd(g, determinant(sq));
            return g == 1;
        });
        return g;
    }
    // Scalable fallback: d_r(A) = product of the invariant factors.
    auto snf = smith_normal_form(a);
    Int p = 1;
    for (const Int& s : snf.invariant_factors) p *= s;
    return abs(p);
}

bool extends_to_basis(const std::vector<VecZ>& vectors) {
    if (vectors.empty()) return true;
    IntMat stack = IntMat::from_rows(vectors);
    if (stack.rows() > stack.cols()) return false;
    return gcd_maximal_minors(stack) == 1;
}

VecZ complete_to_lattice_basis(const std::vector<VecZ>& vectors) {
    if (vectors.empty()) throw bad_input("complete_to_lattice_basis: empty input");
    int amb = static_cast<int>(vectors[0].size());
    int n = static_cast<int>(vectors.size());
    if (n + 1 != amb) throw bad_input("complete_to_lattice_basis: need n vectors in Z^{n+1}");
    IntMat stack = IntMat::from_rows(vectors);

    // Cofactors of the missing last row: det(v_1,...,v_n,eta) = <c, eta>.
    VecZ cof(static_cast<size_t>(amb));
    for (int i = 0; i < amb; ++i) {
        IntMat minor(n, n);
        for (int r = 0; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < amb; ++c) {
                if (c == i) continue;
                minor.at(r, cc++) = stack.at(r, c);
            }
        }
        Int d = n == 0 ? Int(1) : determinant(minor);
        // Laplace expansion along the appended last row (1-based sign
        // (-1)^{(n+1)+(i+1)}).
        cof[static_cast<size_t>(i)] = ((amb + i) % 2 == 1) ? d : -d;
    }

    // Extended gcd across the cofactors: <cof, eta0> = gcd.
    Int g = 0;
    VecZ eta(static_cast<size_t>(amb), Int(0));
    for (int i = 0; i < amb; ++i) {
        if (cof[static_cast<size_t>(i)] == 0) continue;
        if (g == 0) {
            g = abs(cof[static_cast<size_t>(i)]);
            eta[static_cast<size_t>(i)] = sign_of(cof[static_cast<size_t>(i)]);
            continue;
        }
        Int s, t, g2;
        mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
                   cof[static_cast<size_t>(i)].get_mpz_t());
        for (auto& e : eta) e *= s;
        eta[static_cast<size_t>(i)] += t;
        g = g2;
    }
    if (g != 1)
        throw validation_error("complete_to_lattice_basis: not completable (maximal-minor gcd is " +
                               g.get_str() + ")");

    // Canonical representative of eta modulo the row lattice of the inputs.
    auto hr = hermite_row_form(stack);
    for (size_t r = 0; r < hr.pivot_cols.size(); ++r) {
        int pc = hr.pivot_cols[r];
        Int q = floor_div(eta[static_cast<size_t>(pc)], hr.h.at(static_cast<int>(r), pc));
        if (q != 0)
            for (int j = 0; j < amb; ++j) eta[static_cast<size_t>(j)] -= q * hr.h.at(static_cast<int>(r), j);
    }

    // det = +1 by construction; verify.
    std::vector<VecZ> full = vectors;
    full.push_back(eta);
    Int d = determinant(IntMat::from_rows(full));
    if (d != 1) throw internal_error("complete_to_lattice_basis: determinant " + d.get_str());
    return eta;
}

std::vector<PerturbedScalar> solve_in_basis(const std::vector<PerturbedScalar>& target,
                                            const std::vector<VecZ>& basis) {
    size_t n = basis.size();
    if (n == 0 || target.size() != n || basis[0].size() != n)
        throw bad_input("solve_in_basis: need a square basis matching the target length");
    IntMat b = IntMat::from_columns(basis);
    Int d = determinant(b);
    if (d == 0) throw validation_error("solve_in_basis: singular basis");
    if (d != 1 && d != -1) throw validation_error("solve_in_basis: basis not unimodular (det " + d.get_str() + ")");
    IntMat inv = unimodular_inverse(b);
    std::vector<PerturbedScalar> x(n);
    for (size_t i = 0; i < n; ++i) {
        PerturbedScalar acc;
        for (size_t j = 0; j < n; ++j) {
            const Int& m = inv.at(static_cast<int>(i), static_cast<int>(j));
            if (m == 0) continue;
            acc = acc + target[j].scaled(Rat(m));
        }
        x[i] = acc;
    }
    // The recombination must reproduce the target exactly.
    for (size_t r = 0; r < n; ++r) {
        PerturbedScalar acc;
        for (size_t j = 0; j < n; ++j) {
            const Int& m = basis[j][r];
            if (m == 0) continue;
            acc = acc + x[j].scaled(Rat(m));
        }
        if (!(acc == target[r])) throw internal_error("solve_in_basis: nonzero residual");
    }
    return x;
}

std::optional<VecZ> solve_integer_linear(const IntMat& a, const VecZ& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw bad_input("solve_integer_linear: size mismatch");
    auto snf = smith_normal_form(a);
    // a x = b  <=>  S (V x) = U^{-1} b
    IntMat uinv = unimodular_inverse(snf.U);
    VecZ c(static_cast<size_t>(a.rows()), Int(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.rows(); ++j) c[static_cast<size_t>(i)] += uinv.at(i, j) * b[static_cast<size_t>(j)];
    VecZ y(static_cast<size_t>(a.cols()), Int(0));
    int nmin = std::min(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        Int rhs = c[static_cast<size_t>(i)];
        if (i < nmin && snf.S.at(i, i) != 0) {
            if (rhs % snf.S.at(i, i) != 0) return std::nullopt;
            y[static_cast<size_t>(i)] = rhs / snf.S.at(i, i);
        } else if (rhs != 0) {
            return std::nullopt;
        }
    }
    IntMat vinv = unimodular_inverse(snf.V);
    VecZ x(static_cast<size_t>(a.cols()), Int(0));
    for (int i = 0; i < a.cols(); ++i)
        for (int j = 0; j < a.cols(); ++j) x[static_cast<size_t>(i)] += vinv.at(i, j) * y[static_cast<size_t>(j)];
    return x;
}

VecZ primitive_direction(const VecQ& v) {
    Int den_lcm = 1;
    for (const Rat& q : v) den_lcm = lcm(den_lcm, Int(q.get_den()));
    VecZ w(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * Rat(den_lcm);
        w[i] = s.get_num();
    }
    Int g = gcd_of(w);
    if (g == 0) throw internal_error("primitive_direction of zero vector");
    for (Int& x : w) x /= g;
    return w;
}

bool is_primitive(const VecZ& v) { return gcd_of(v) == 1; }

}  // namespace tcc
