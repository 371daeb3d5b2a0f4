#pragma once

#include "legode/matf.hpp"

namespace legode {

/* Exponent of e^{(cr*r + c1) t}: affine in the catalog parameter r with
 * rational coefficients. */
struct ExpKey {
    Rat cr, c1;

    bool operator==(const ExpKey& o) const { return cr == o.cr && c1 == o.c1; }
    bool operator<(const ExpKey& o) const {
        if (cr != o.cr) return cr < o.cr;
        return c1 < o.c1;
    }
    RatFunc rate() const; // cr*r + c1 as a rational function
};

/* Finite sums  sum_k e^{key_k t} p_k(t)  with p_k in F[t], F the field of
 * rational functions of the parameters. Closed under +, *, d/dt, which is
 * what the orbit computations need. */
class ExpPoly {
public:
    using TPoly = std::map<int, RatFunc>; // t-power -> coefficient

    ExpPoly() = default;
    static ExpPoly term(const ExpKey& k, int power, const RatFunc& coef);
    static ExpPoly constant(const RatFunc& c);

    bool is_zero() const { return parts_.empty(); }
    const std::map<ExpKey, TPoly>& parts() const { return parts_; }

    ExpPoly operator-() const;
    ExpPoly operator+(const ExpPoly& o) const;
    ExpPoly operator-(const ExpPoly& o) const;
    ExpPoly operator*(const ExpPoly& o) const;
    ExpPoly& operator+=(const ExpPoly& o) { return *this = *this + o; }
    ExpPoly& operator-=(const ExpPoly& o) { return *this = *this - o; }
    bool operator==(const ExpPoly& o) const { return parts_ == o.parts_; }
    bool operator!=(const ExpPoly& o) const { return !(*this == o); }

    ExpPoly scaled(const RatFunc& f) const;
    ExpPoly derivative() const; // in t

    /* Substitutes a rational value for the parameter r, merging buckets whose
     * exponents collide after the substitution. */
    ExpPoly specialize_r(const Rat& rv) const;

private:
    void put(const ExpKey& k, int power, const RatFunc& coef);
    std::map<ExpKey, TPoly> parts_;
};

/* Component functions of t -> exp(tA) z for A = D + N with D the diagonal
 * part (entries affine in r), N nilpotent and commuting with D. Anything
 * else is outside the normal-form catalog. */
std::vector<ExpPoly> exp_orbit(const MatF& a, const VecF& z);

/* As above after conjugating into catalog form: returns p * exp(t p^-1 a p) p^-1 z
 * ... i.e. the orbit of z under exp(tA) computed through the conjugator. */
std::vector<ExpPoly> exp_orbit_conj(const MatF& a, const VecF& z, const MatF& p);

/* Homogeneous system  sum_u rows[c][u] x_u = 0  with exp-polynomial
 * coefficients; splitting by (exponent, t-power) makes it an exact linear
 * system over the parameter field. Returns a nullspace basis. */
std::vector<VecF> ep_nullspace(const std::vector<std::vector<ExpPoly>>& rows, int unknowns);

} // namespace legode
