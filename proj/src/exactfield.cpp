#include "tcc/exactfield.hpp"

#include <algorithm>
#include <sstream>

namespace tcc {

namespace {

void trim(Exp& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

Exp add_exp(const Exp& a, const Exp& b) {
    Exp r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Exp sub_exp(const Exp& a, const Exp& b) {
    Exp r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

int exp_at(const Exp& e, size_t i) { return i < e.size() ? e[i] : 0; }

}  // namespace

// eps^a dominates eps^b iff, reading exponents from the last variable down
// to the first, the first difference has the smaller exponent in a. (The
// last variable is the most infinitesimal one, so its exponent decides.)
bool ExpDominanceLess::operator()(const Exp& a, const Exp& b) const {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = n; i-- > 0;) {
        int ai = exp_at(a, i), bi = exp_at(b, i);
        if (ai != bi) return ai < bi;
    }
    return false;
}

Poly::Poly(const Rat& c) { add_term(Exp{}, c); }

Poly Poly::variable(int i) {
    if (i < 1) throw internal_error("Poly::variable: index must be >= 1");
    Poly p;
    Exp e(static_cast<size_t>(i), 0);
    e[static_cast<size_t>(i - 1)] = 1;
    p.terms_.emplace(std::move(e), Rat(1));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat Poly::constant_term() const {
    auto it = terms_.find(Exp{});
    return it == terms_.end() ? Rat(0) : it->second;
}

int Poly::num_variables() const {
    size_t n = 0;
    for (const auto& [e, c] : terms_) n = std::max(n, e.size());
    return static_cast<int>(n);
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

const std::pair<const Exp, Rat>& Poly::dominant() const {
    if (terms_.empty()) throw internal_error("dominant() of zero polynomial");
    return *terms_.begin();
}

void Poly::add_term(const Exp& e, const Rat& c) {
    // Two-argument mpq construction does not canonicalize; everything
    // downstream assumes reduced fractions.
    Rat cc = c;
    cc.canonicalize();
    if (cc == 0) return;
    Exp t = e;
    trim(t);
    auto [it, inserted] = terms_.emplace(std::move(t), cc);
    if (!inserted) {
        it->second += cc;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(add_exp(ea, eb), ca * cb);
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Rat Poly::content() const {
    if (terms_.empty()) return Rat(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        num_gcd = tcc::gcd(num_gcd, Int(c.get_num()));
        den_lcm = tcc::lcm(den_lcm, Int(c.get_den()));
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

int Poly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, exp_at(e, static_cast<size_t>(var)));
    return d;
}

Poly Poly::coeff_of_power(int var, int power) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
        if (exp_at(e, static_cast<size_t>(var)) != power) continue;
        Exp rest = e;
        if (static_cast<size_t>(var) < rest.size()) rest[static_cast<size_t>(var)] = 0;
        trim(rest);
        r.add_term(rest, c);
    }
    return r;
}

std::map<int, Poly> Poly::as_univariate(int var) const {
    std::map<int, Poly> r;
    for (const auto& [e, c] : terms_) {
        int p = exp_at(e, static_cast<size_t>(var));
        Exp rest = e;
        if (static_cast<size_t>(var) < rest.size()) rest[static_cast<size_t>(var)] = 0;
        trim(rest);
        r[p].add_term(rest, c);
    }
    return r;
}

// Multivariate long division by a single divisor; succeeds iff the division
// is exact. Reduction is against the divisor's dominant term, which is a
// valid leading term for a monomial order refining divisibility.
std::optional<Poly> Poly::exact_divide(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw internal_error("exact_divide by zero polynomial");
    if (num.is_zero()) return Poly();
    if (den.is_constant()) return num.scaled(Rat(1) / den.constant_term());

    auto divisible = [](const Exp& a, const Exp& b) {
        if (b.size() > a.size()) return false;
        for (size_t i = 0; i < b.size(); ++i)
            if (a[i] < b[i]) return false;
        return true;
    };

    // Use the plain lex-largest term (any monomial order works); pick the
    // last map entry which is the least dominant, i.e. largest exponents.
    auto lead = [](const Poly& p) -> const std::pair<const Exp, Rat>& { return *p.terms_.rbegin(); };

    Poly q, r = num;
    const auto& dlead = lead(den);
    while (!r.is_zero()) {
        const auto& rlead = lead(r);
        if (!divisible(rlead.first, dlead.first)) return std::nullopt;
        Exp e = sub_exp(rlead.first, dlead.first);
        Rat c = rlead.second / dlead.second;
        Poly t;
        t.add_term(e, c);
        q += t;
        r -= t * den;
    }
    return q;
}

namespace {

// Pseudo-remainder of a by b in variable var: lc(b)^(da-db+1) * a reduced
// until deg_var < deg_var(b). Division-free.
Poly pseudo_remainder(const Poly& a, const Poly& b, int var) {
    int db = b.degree_in(var);
    Poly lcb = b.coeff_of_power(var, db);
    Poly r = a;
    int e = a.degree_in(var) - db + 1;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        int dr = r.degree_in(var);
        Poly lcr = r.coeff_of_power(var, dr);
        Poly xshift;
        Exp mono(static_cast<size_t>(var) + 1, 0);
        mono[static_cast<size_t>(var)] = dr - db;
        xshift.add_term(mono, Rat(1));
        r = r * lcb - (lcr * xshift) * b;
        --e;
    }
    for (; e > 0; --e) r = r * lcb;
    return r;
}

Poly poly_content_in(const Poly& p, int var) {
    Poly c;
    bool first = true;
    for (const auto& [pw, coeff] : p.as_univariate(var)) {
        c = first ? coeff : Poly::gcd(c, coeff);
        first = false;
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

Poly normalize_sign_content(Poly p) {
    if (p.is_zero()) return p;
    Rat c = p.content();
    if (p.dominant().second < 0) c = -c;
    return p.scaled(Rat(1) / c);
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalize_sign_content(b);
    if (b.is_zero()) return normalize_sign_content(a);
    if (a.is_constant() || b.is_constant()) return Poly(Rat(1));

    // Main variable: highest variable index occurring in either operand.
    int var = std::max(a.num_variables(), b.num_variables()) - 1;
    int da = a.degree_in(var), db = b.degree_in(var);
    if (da == 0 || db == 0) {
        // var occurs in only one of them; gcd divides both contents.
        Poly ca = poly_content_in(a, var), cb = poly_content_in(b, var);
        return Poly::gcd(ca, cb);
    }

    Poly ca = poly_content_in(a, var), cb = poly_content_in(b, var);
    Poly pa = *exact_divide(a, ca), pb = *exact_divide(b, cb);
    Poly cont_gcd = Poly::gcd(ca, cb);

    // Primitive PRS on the primitive parts.
    Poly f = pa, g = pb;
    if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
    while (!g.is_zero()) {
        Poly r = pseudo_remainder(f, g, var);
        if (!r.is_zero()) {
            Poly cr = poly_content_in(r, var);
            r = *exact_divide(r, cr);
        }
        f = g;
        g = r;
    }
    return normalize_sign_content(cont_gcd * f);
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rat ac = abs(c);
        bool has_vars = !e.empty();
        if (ac != 1 || !has_vars) os << to_string(ac);
        bool star = ac != 1;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (star || !has_vars) os << "*";
            os << "e" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            star = true;
        }
    }
    return os.str();
}

PerturbedScalar::PerturbedScalar(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw validation_error("PerturbedScalar: zero denominator");
    normalize();
}

PerturbedScalar PerturbedScalar::epsilon(int i) {
    return PerturbedScalar(Poly::variable(i), Poly(Rat(1)));
}

PerturbedScalar::PerturbedScalar(Poly num, Poly den, AlreadyCoprime)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize_contents();
}

void PerturbedScalar::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    if (!num_.is_constant() || !den_.is_constant()) {
        Poly g = Poly::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *Poly::exact_divide(num_, g);
            den_ = *Poly::exact_divide(den_, g);
        }
    }
    normalize_contents();
}

// Rescale both by one rational so num = a*Pn, den = b*Pd with Pn, Pd
// primitive integer polynomials and gcd(a, b) = 1; then fix the sign so the
// denominator's dominant coefficient is positive.
void PerturbedScalar::normalize_contents() {
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    Rat cn = num_.content(), cd = den_.content();
    Rat ratio = cn / cd;  // = a/b in lowest terms
    Rat r = Rat(ratio.get_num()) / cn;
    num_ = num_.scaled(r);
    den_ = den_.scaled(r);
    if (den_.dominant().second < 0) {
        num_ = num_.scaled(Rat(-1));
        den_ = den_.scaled(Rat(-1));
    }
}

PerturbedScalar PerturbedScalar::operator-() const {
    PerturbedScalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

// Sums and products stay reduced via pairwise gcds of the already-reduced
// operands (the mpq strategy): the gcd calls only ever see the small factor
// polynomials, never the blown-up products.
namespace {

Poly div_exact(const Poly& a, const Poly& g) {
    if (g.is_constant()) return a.scaled(Rat(1) / g.constant_term());
    return *Poly::exact_divide(a, g);
}

}  // namespace

PerturbedScalar PerturbedScalar::operator+(const PerturbedScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    Poly g = Poly::gcd(den_, o.den_);
    if (g.is_constant()) {
        // coprime denominators: the sum is automatically reduced
        return PerturbedScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_, AlreadyCoprime{});
    }
    Poly d1 = div_exact(den_, g), d2 = div_exact(o.den_, g);
    Poly t = num_ * d2 + o.num_ * d1;
    Poly h = Poly::gcd(t, g);
    if (h.is_constant()) return PerturbedScalar(std::move(t), den_ * d2, AlreadyCoprime{});
    return PerturbedScalar(div_exact(t, h), div_exact(den_, h) * d2, AlreadyCoprime{});
}

PerturbedScalar PerturbedScalar::operator-(const PerturbedScalar& o) const { return *this + (-o); }

PerturbedScalar PerturbedScalar::operator*(const PerturbedScalar& o) const {
    if (is_zero() || o.is_zero()) return PerturbedScalar();
    Poly g1 = Poly::gcd(num_, o.den_);
    Poly g2 = Poly::gcd(o.num_, den_);
    return PerturbedScalar(div_exact(num_, g1) * div_exact(o.num_, g2),
                           div_exact(den_, g2) * div_exact(o.den_, g1), AlreadyCoprime{});
}

PerturbedScalar PerturbedScalar::operator/(const PerturbedScalar& o) const {
    if (o.is_zero()) throw validation_error("PerturbedScalar: division by zero");
    if (is_zero()) return PerturbedScalar();
    Poly g1 = Poly::gcd(num_, o.num_);
    Poly g2 = Poly::gcd(den_, o.den_);
    return PerturbedScalar(div_exact(num_, g1) * div_exact(o.den_, g2),
                           div_exact(den_, g2) * div_exact(o.num_, g1), AlreadyCoprime{});
}

PerturbedScalar PerturbedScalar::scaled(const Rat& c) const {
    if (c == 0) return PerturbedScalar();
    return PerturbedScalar(num_.scaled(c), den_, AlreadyCoprime{});
}

bool PerturbedScalar::operator==(const PerturbedScalar& o) const {
    // Canonical forms are unique, but cross-multiplication is the contract.
    return num_ * o.den_ == o.num_ * den_;
}

int PerturbedScalar::sign() const {
    if (num_.is_zero()) return 0;
    int sn = sign_of(num_.dominant().second);
    int sd = sign_of(den_.dominant().second);
    return sn * sd;
}

namespace {

// Compare the dominance of the two dominant monomials: <0 if eps^a is an
// infinite multiple of eps^b, 0 if a == b, >0 if infinitesimal relative.
int dominance_cmp(const Exp& a, const Exp& b) {
    ExpDominanceLess less;
    if (less(a, b)) return -1;
    if (less(b, a)) return 1;
    return 0;
}

}  // namespace

bool PerturbedScalar::is_infinite() const {
    if (num_.is_zero()) return false;
    return dominance_cmp(num_.dominant().first, den_.dominant().first) < 0;
}

std::optional<Rat> PerturbedScalar::standard_part() const {
    if (num_.is_zero()) return Rat(0);
    int c = dominance_cmp(num_.dominant().first, den_.dominant().first);
    if (c < 0) return std::nullopt;  // infinite
    if (c > 0) return Rat(0);        // infinitesimal
    return num_.dominant().second / den_.dominant().second;
}

FloorResult PerturbedScalar::floor_lim(bool strict) const {
    auto st = standard_part();
    if (!st) {
        FloorResult r;
        r.kind = sign() > 0 ? FloorResult::PlusInfinity : FloorResult::MinusInfinity;
        return r;
    }
    FloorResult r;
    if (!is_integer(*st)) {
        r.value = floor_rat(*st);
        return r;
    }
    Int s(st->get_num());
    int tail = (*this - PerturbedScalar(Rat(s))).sign();
    if (tail == 0) {
        if (strict)
            throw degenerate_error("floor_lim: value is exactly the integer " + s.get_str() +
                                   " (degenerate Reeb data)");
        r.value = s;
        return r;
    }
    r.value = tail > 0 ? s : s - 1;
    return r;
}

std::string PerturbedScalar::str() const {
    if (den_.is_constant() && den_.constant_term() == 1) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace tcc
