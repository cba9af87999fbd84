#pragma once

#include <optional>
#include <vector>

#include "tcc/exactfield.hpp"
#include "tcc/numeric.hpp"

namespace tcc {

// Dense arbitrary-precision integer matrix, row-major.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Int(0)) {
        if (rows <= 0 || cols <= 0) throw bad_input("IntMat: dimensions must be positive");
    }
    static IntMat identity(int n);
    static IntMat from_columns(const std::vector<VecZ>& cols);
    static IntMat from_rows(const std::vector<VecZ>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    VecZ row(int r) const;
    VecZ col(int c) const;

    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    IntMat transposed() const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMat& m);

// Rank over Q.
int rank(const IntMat& m);

// Inverse of a matrix with determinant +-1; entries stay integral.
IntMat unimodular_inverse(const IntMat& m);

// Rational kernel basis (column vectors x with m x = 0).
std::vector<VecQ> kernel_basis(const IntMat& m);

// Smith normal form: A = U * S * V with U, V unimodular and S diagonal with
// nonnegative invariant factors s_1 | s_2 | ... The reconstruction and the
// unimodularity of U, V are verified before returning.
struct SmithResult {
    IntMat U, S, V;
    VecZ invariant_factors;  // length min(rows, cols)
};
SmithResult smith_normal_form(const IntMat& a);

// Row-style Hermite normal form of the lattice spanned by the rows; returns
// the echelon matrix (zero rows dropped) and its pivot columns.
struct HermiteResult {
    IntMat h;
    std::vector<int> pivot_cols;
};
HermiteResult hermite_row_form(const IntMat& a);

// gcd of all maximal (rows x rows) minors of a wide matrix (rows <= cols);
// 0 iff rank deficient. Enumerates column subsets directly for small
// matrices and falls back to the Smith normal form (product of invariant
// factors) when the subset count blows up.
Int gcd_maximal_minors(const IntMat& a);

// Whether k given vectors in Z^n (k <= n) extend to a Z-basis of Z^n,
// i.e. the gcd of the k x k minors of their stack is 1.
bool extends_to_basis(const std::vector<VecZ>& vectors);

// Complete n vectors in Z^{n+1} to a Z-basis: returns the canonical eta with
// det(v_1, ..., v_n, eta) = +1. The canonical choice solves the cofactor
// equation by extended gcd and reduces the solution modulo the row lattice
// of the inputs (Hermite pivots, least nonnegative residues), so it is
// reproducible across runs and presentations. Throws "not completable" when
// the maximal-minor gcd is not 1.
VecZ complete_to_lattice_basis(const std::vector<VecZ>& vectors);

// Solve target = sum_i x_i basis_i exactly over the perturbed-scalar field;
// the basis must be a unimodular integer basis. The recombination is checked
// to reproduce the target exactly.
std::vector<PerturbedScalar> solve_in_basis(const std::vector<PerturbedScalar>& target,
                                            const std::vector<VecZ>& basis);

// Integer solution x of A x = b, if one exists (via Smith normal form).
std::optional<VecZ> solve_integer_linear(const IntMat& a, const VecZ& b);

// Primitive integer vector proportional to a rational direction.
VecZ primitive_direction(const VecQ& v);
bool is_primitive(const VecZ& v);

}  // namespace tcc
