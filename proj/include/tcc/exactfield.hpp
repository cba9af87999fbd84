#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tcc/numeric.hpp"

namespace tcc {

// Exact ordered field Q(eps_1, ..., eps_m) of rational functions in positive
// infinitesimals, ordered so that eps_{i+1} < eps_i^k for every k > 0. This
// is the field the symbolic perturbation of Reeb vectors lives in: every
// geometric predicate (interiority, signs of basis coefficients, floors in
// the index formula) is decided exactly in the limit eps -> 0+.
//
// The order is realized by iterated Laurent series Q((eps_1))...((eps_m)):
// among the monomials of a polynomial, the one dominating the value as
// eps -> 0+ is the one minimizing the exponent of eps_m first, then
// eps_{m-1}, and so on down to eps_1 (compare geode's simulation-of-
// simplicity, which orders infinitesimal monomials the same way). The sign
// of a nonzero polynomial is the sign of the coefficient of its dominant
// monomial.

// Exponent vector of a monomial; entry i is the power of eps_{i+1}.
// Trailing zeros are always trimmed so arities mix freely.
using Exp = std::vector<int>;

// Comparator realizing the dominance order: a precedes b iff the monomial
// eps^a dominates eps^b (is larger as eps -> 0+). Total order on trimmed
// exponent vectors; used as the map order so begin() is the dominant term.
struct ExpDominanceLess {
    bool operator()(const Exp& a, const Exp& b) const;
};

class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& c);  // constant polynomial
    static Poly variable(int i);  // eps_i, 1-based

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value at eps = 0, i.e. the coefficient of the constant monomial.
    Rat constant_term() const;

    int num_variables() const;
    int degree() const;  // total degree, -1 for the zero polynomial

    // Dominant term in the eps -> 0+ order (largest monomial). Zero poly has none.
    const std::pair<const Exp, Rat>& dominant() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    Poly scaled(const Rat& c) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Rational content; content() of a nonzero poly is positive and
    // poly/content() has coprime integer coefficients.
    Rat content() const;

    int degree_in(int var) const;                  // var is 0-based here
    Poly coeff_of_power(int var, int power) const; // coefficient poly (var dropped)
    std::map<int, Poly> as_univariate(int var) const;

    // Exact division: returns quotient iff divisor divides exactly.
    static std::optional<Poly> exact_divide(const Poly& num, const Poly& den);
    // GCD via primitive pseudo-remainder sequences; result has content 1 and
    // positive dominant coefficient.
    static Poly gcd(const Poly& a, const Poly& b);

    void add_term(const Exp& e, const Rat& c);
    const std::map<Exp, Rat, ExpDominanceLess>& terms() const { return terms_; }

    std::string str() const;  // human-readable, eps_i spelled e1, e2, ...

private:
    std::map<Exp, Rat, ExpDominanceLess> terms_;
};

// Result of a floor evaluated in the eps -> 0+ limit.
struct FloorResult {
    enum Kind { Finite, PlusInfinity, MinusInfinity } kind = Finite;
    Int value;  // meaningful only when finite

    bool finite() const { return kind == Finite; }
};

// Element of Q(eps_1,...,eps_m) kept in canonical form: numerator and
// denominator are coprime integer-coefficient polynomials, the pair has
// coprime contents, and the denominator's dominant coefficient is positive
// (so the denominator itself is a positive element of the field).
class PerturbedScalar {
public:
    PerturbedScalar() : num_(), den_(Rat(1)) {}
    PerturbedScalar(const Rat& c) : num_(c), den_(Rat(1)) { normalize(); }
    PerturbedScalar(const Int& c) : num_(Rat(c)), den_(Rat(1)) { normalize(); }
    PerturbedScalar(long c) : num_(Rat(c)), den_(Rat(1)) { normalize(); }
    PerturbedScalar(int c) : num_(Rat(c)), den_(Rat(1)) { normalize(); }
    PerturbedScalar(const Poly& num, const Poly& den);

    static PerturbedScalar epsilon(int i);  // eps_i, 1-based

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }

    PerturbedScalar operator-() const;
    PerturbedScalar operator+(const PerturbedScalar& o) const;
    PerturbedScalar operator-(const PerturbedScalar& o) const;
    PerturbedScalar operator*(const PerturbedScalar& o) const;
    PerturbedScalar operator/(const PerturbedScalar& o) const;  // throws on /0

    // Scalar fast paths (no polynomial gcd needed).
    PerturbedScalar scaled(const Rat& c) const;

    bool operator==(const PerturbedScalar& o) const;
    bool operator!=(const PerturbedScalar& o) const { return !(*this == o); }

    // Sign in the limit eps -> 0+ with eps_{i+1} infinitesimal relative to
    // every power of eps_i. Total: returns -1, 0 or +1.
    int sign() const;

    bool operator<(const PerturbedScalar& o) const { return (*this - o).sign() < 0; }
    bool operator>(const PerturbedScalar& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const PerturbedScalar& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const PerturbedScalar& o) const { return (*this - o).sign() >= 0; }

    // True iff |x| exceeds every rational (the value blows up as eps -> 0+).
    bool is_infinite() const;
    // Standard part: the unique rational s with x - s infinitesimal or zero.
    // nullopt iff the value is infinite.
    std::optional<Rat> standard_part() const;

    // floor of the value in the limit order: the unique integer f with
    // f <= x < f+1, or a divergence flag when x is infinite. When x is
    // exactly an integer (zero infinitesimal part) and strict is set, the
    // caller considers its Reeb data degenerate and an error is thrown.
    FloorResult floor_lim(bool strict = false) const;

    std::string str() const;

private:
    struct AlreadyCoprime {};
    PerturbedScalar(Poly num, Poly den, AlreadyCoprime);

    void normalize();
    void normalize_contents();

    Poly num_, den_;
};

inline PerturbedScalar operator+(const Rat& a, const PerturbedScalar& b) { return PerturbedScalar(a) + b; }
inline PerturbedScalar operator-(const Rat& a, const PerturbedScalar& b) { return PerturbedScalar(a) - b; }
inline PerturbedScalar operator*(const Rat& a, const PerturbedScalar& b) { return b.scaled(a); }

}  // namespace tcc
