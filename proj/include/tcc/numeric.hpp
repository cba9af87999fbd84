#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "tcc/errors.hpp"

namespace tcc {

// All integer and rational arithmetic is exact GMP arithmetic. There is no
// floating point anywhere in the library: every published number is an
// integer and a single rounded intermediate would corrupt the floor
// expressions the indices are made of.
using Int = mpz_class;
using Rat = mpq_class;

using VecZ = std::vector<Int>;
using VecQ = std::vector<Rat>;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Floor division (round toward -infinity), as opposed to C++ truncation.
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Least nonnegative residue of a mod m, m > 0.
inline Int mod_nonneg(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool is_unit_mod(const Int& a, const Int& m) { return gcd(a, m) == 1; }

// Inverse of a mod m (m >= 1); throws if gcd(a, m) != 1. For m == 1 the
// residue ring is trivial and 0 is returned.
inline Int inv_mod(const Int& a, const Int& m) {
    if (m == 1) return 0;
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw validation_error("inv_mod: " + a.get_str() + " is not a unit mod " + m.get_str());
    return r;
}

inline Int pow_mod(const Int& base, const Int& exp, const Int& m) {
    if (m == 1) return 0;
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline int sign_of(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sign_of(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline Int gcd_of(const VecZ& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

inline std::string to_string(const Int& a) { return a.get_str(); }

inline std::string to_string(const Rat& a) {
    if (is_integer(a)) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

inline std::string to_string(const VecZ& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s + ")";
}

}  // namespace tcc
