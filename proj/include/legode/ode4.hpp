#pragma once

#include "legode/jet.hpp"
#include "legode/ratfunc.hpp"

#include <optional>
#include <vector>

namespace legode {

/* u'''' + p3 u''' + p2 u'' + p1 u' + p0 u = 0, coefficients rational in t
 * (parameters allowed). */
struct ODE4 {
    RatFunc p3, p2, p1, p0;

    bool operator==(const ODE4& o) const {
        return p3 == o.p3 && p2 == o.p2 && p1 == o.p1 && p0 == o.p0;
    }
};

/* t -> (a t + b)/(c t + d), det != 0. */
struct Mobius {
    Rat a, b, c, d;

    Rat det() const { return a * d - b * c; }
    Mobius inverse() const { return Mobius{d, -b, -c, a}; }
    RatFunc as_ratfunc() const;
};

/* Recovers Mobius coefficients; throws when the map is not of that shape or
 * is degenerate. */
Mobius mobius_from_ratfunc(const RatFunc& lam);

/* Coefficients of the equation satisfied by  u~(lambda(t)) = mu(t) u(t).
 * The reparameterization is restricted to Mobius maps so the result stays in
 * the rational-function field. */
ODE4 general_transform_ode(const ODE4& ode, const RatFunc& lambda, const RatFunc& mu);

/* Weight-(-4) transport of the bottom coefficient of a self-dual equation
 * u'''' + q0 u = 0 under a Mobius reparameterization. */
RatFunc mobius_transform_q0(const RatFunc& q0, const Mobius& m);

struct InvariantReport {
    RatFunc q0;
    RatFunc R;         // 8 q0 q0'' - 9 (q0')^2
    bool rnc = false;  // q0 == 0: rational normal curve, quotients undefined
    RatFunc I_lit;     // R^2 / (4096 q0^5)
    RatFunc I_cls;     // -I_lit, the classification convention
};

InvariantReport legendrian_invariants(const RatFunc& q0);

/* Bottom coefficient of the reduced form of u'''' + c2 u'' + c0 u = 0:
 * q0 = N/(t^2+40c2)^4 with N = -1600(9c2^2-100c0). */
RatFunc lf_family_q0(const Rat& c2, const Rat& c0);

/* c2^2/(9c2^2-100c0); nullopt when the denominator vanishes identically
 * (the rational normal curve stratum). */
std::optional<RatFunc> class_invariant_from_charpoly(const RatFunc& c2, const RatFunc& c0);

struct LfSample {
    double t;
    double r3, r2, r1, r0; // residual magnitudes of the reduced coefficients
};

/* Floating-point check that the closed-form reduction of
 * u'''' + c2 u'' + c0 u = 0 lands on the family potential: transforms with
 * lambda = -2 sqrt(10(-c2)) tanh(t sqrt(-c2/10)), mu = (lambda')^(3/2) and
 * reports how far the reduced coefficients are from (0, 0, 0, family q0). */
std::vector<LfSample> numeric_lf_reduce(double c2, double c0, const std::vector<double>& ts);

} // namespace legode
