#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "legode/rat.hpp"

namespace legode {

/* Variables are interned process-wide; the interning order is the declared
 * variable order of the monomial order (earlier id = more significant in the
 * lex tie-break). Deterministic for a fixed program flow, which is all the
 * canonical form needs. */
int var_id(const std::string& name);
const std::string& var_name(int id);

/* Sparse exponent vector: (var id, exponent) pairs, ids strictly increasing,
 * exponents positive. The empty Mono is the constant monomial 1. */
struct Mono {
    std::vector<std::pair<int, int>> e;

    int degree() const;
    int exp_of(int id) const;
    bool operator==(const Mono& o) const { return e == o.e; }
    static Mono one() { return {}; }
    static Mono var(int id, int exp = 1);
    Mono times(const Mono& o) const;
    /* Componentwise quotient; nullopt when o does not divide this. */
    std::optional<Mono> over(const Mono& o) const;
};

/* Graded lex: total degree first, then lex with lower var ids more
 * significant. Used for the term map, so rbegin() is the leading term. */
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

class MPoly {
public:
    using Terms = std::map<Mono, Rat, MonoLess>;

    MPoly() = default;
    static MPoly constant(const Rat& c);
    static MPoly variable(const std::string& name, int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /* Constant term as a Rat; precondition is_constant(). */
    Rat as_rat() const;

    const Terms& terms() const { return terms_; }
    void add_term(const Mono& m, const Rat& c);   // accumulates, drops zeros

    int degree() const;                 // total degree, -1 for zero
    int degree_in(int id) const;        // -1 for zero
    bool depends_on(int id) const;
    std::vector<int> vars_present() const;

    const Mono& leading_mono() const;   // precondition: nonzero
    const Rat& leading_coef() const;    // precondition: nonzero

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly scaled(const Rat& c) const;
    MPoly pow(int e) const;             // e >= 0
    MPoly derivative(int id) const;

    /* Coefficients of powers of the given variable, ascending; the entries
     * no longer involve that variable. Zero polynomial gives {}. */
    std::vector<MPoly> coeffs_in(int id) const;
    static MPoly from_coeffs_in(int id, const std::vector<MPoly>& cs);

    /* Substitutes a polynomial for one variable (polynomial result).
     * Rational-function substitution lives in RatFunc. */
    MPoly subst_poly(int id, const MPoly& val) const;

    /* Scales so the graded-lex leading coefficient is 1. Zero stays zero. */
    MPoly monic() const;

    /* Smallest positive rational u with u*this having coprime integer
     * coefficients; sign chosen so the scaled leading coefficient is
     * positive. Returns 1 for zero. */
    Rat integer_normalizer() const;

private:
    Terms terms_;
};

/* Monic gcd under graded lex (1 for coprime or constant inputs, 0 only if
 * both are 0). Recursive primitive-PRS on the most significant variable,
 * subresultant-damped. */
MPoly mp_gcd(const MPoly& a, const MPoly& b);

/* Exact division; nullopt when g does not divide f. g must be nonzero. */
std::optional<MPoly> mp_div_exact(const MPoly& f, const MPoly& g);

/* Compact expression form: terms descending under graded lex, "^" powers,
 * juxtaposed integer coefficients ("9c^2+6", "s^4-60s^2+576"), "*" between
 * variables. Parseable by the RatFunc grammar. */
std::string mpoly_str(const MPoly& p);

} // namespace legode
