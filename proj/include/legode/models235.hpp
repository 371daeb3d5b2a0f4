#pragma once

#include <string>
#include <vector>

#include "legode/legcurve.hpp"
#include "legode/liealg.hpp"
#include "legode/matf.hpp"

namespace legode {

/* A multiply transitive model: the symmetry algebra of a (2,3,5) cone
 * structure together with the data of its Legendrian lift.  The degree
 * attached to each basis element is its filtration label (0 for the
 * isotropy, -1/-2/-3 down the flag of the distribution). */
struct Model235 {
    std::string name;
    FiltLieAlg f;
    std::vector<int> isotropy;       // basis indices spanning f^0
    std::vector<int> lift_isotropy;  // indices spanning the isotropy of the lift
    VecF lift_e;                     // horizontal direction of the lift
    VecF lift_v;                     // vertical (fiber) direction
    std::vector<VecF> quotient_basis;  // basis of the rank-4 quotient
    MatF generator;  // action of lift_e on the quotient in that basis
};

/* Known names: N7c, N6, D6a.  N7c depends on the parameter c, D6a on a. */
const Model235& model_by_name(const std::string& name);
std::vector<std::string> model_names();

enum class FlagKind { Derived, Weak };

/* F_1 = span(gens) + span(modout), then F_{k+1} = F_k + [F_k, F_k] for the
 * derived flag or F_{k+1} = F_k + [F_1, F_k] for the weak one, until the
 * chain stabilizes.  Every returned span contains the modout vectors. */
std::vector<Span> bracket_flag(const FiltLieAlg& f, const std::vector<VecF>& gens,
                               const std::vector<VecF>& modout, FlagKind kind,
                               int max_steps = 16);

std::vector<int> model_growth_dims(const Model235& m);  // 2, 3, 5
std::vector<int> model_lift_dims(const Model235& m);    // 2, 3, 4, 5, 6

/* Recomputes the quotient action of lift_e from the bracket table; equal to
 * m.generator. */
MatF induced_generator(const Model235& m);

PolyInS model_charpoly(const Model235& m);
RatFunc model_invariant(const Model235& m);
CurveClass model_curve_class(const Model235& m);

/* Rewrites every var^(2k) as square^k; the input must be even in var. */
RatFunc substitute_even(const RatFunc& f, const std::string& var, const RatFunc& square);

}  // namespace legode
