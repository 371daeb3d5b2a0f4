#pragma once

#include "legode/exppoly.hpp"
#include "legode/ode4.hpp"

#include <optional>
#include <string>

namespace legode {

enum class CurveKind { RationalNormal, L0, L1, Lr2 };

std::string curve_kind_name(CurveKind k);

/* Catalog normal form: matrix, compatible symplectic structure, basepoint. */
struct NormalForm {
    MatF A;
    MatF sigma;
    VecF z;
};

NormalForm normal_form_L0();
NormalForm normal_form_L1();
NormalForm normal_form_diag(const RatFunc& r); // diag(r,1,-1,-r)
NormalForm normal_form_rnc();                  // the r = 3 diagonal form
NormalForm normal_form_rnc_shift();            // polynomial realization, z = e1

struct CurveClass {
    CurveKind kind;
    std::optional<RatFunc> invariant_cls; // absent for the rational normal curve
    std::optional<Rat> r_squared;         // present for Lr2 with a rational root
    NormalForm rep;
};

/* Nondegeneracy: z is a cyclic vector for A, so the orbit spans all of C^4. */
bool check_star(const MatF& a, const VecF& z);

/* Star plus sigma(gamma, gamma') == 0 along the orbit. */
bool admissible(const MatF& a, const VecF& z, const MatF& sigma);

/* The symplectic structure making exp(tA)z Legendrian: solves A^T S + S A = 0
 * together with S(gamma, gamma') == 0 over the skew matrices. The solution
 * line is normalized by S[0][3] = 1. */
MatF compatible_sigma(const MatF& a, const VecF& z);

CurveClass classify(const MatF& a, const VecF& z);

/* Class determined by the value of the invariant alone; absent means the
 * rational normal curve. */
CurveClass class_from_invariant(const std::optional<RatFunc>& icls);

bool equivalent(const MatF& a1, const VecF& z1, const MatF& a2, const VecF& z2);

/* Two recovered ratios name the same class exactly when they agree after
 * inverting into |x| >= 1. */
bool equivalent_r2(const Rat& a, const Rat& b);

/* Group element moving the orbit of the catalog basepoint onto the orbit of
 * z, for each of the five normal-form cases; rejects basepoints outside the
 * open orbit. */
MatF normalize_basepoint(const MatF& a, const VecF& z);

/* Dimension of the conformal-symplectic symmetries preserving the curve
 * cone: u with u^T sigma + sigma u = lambda sigma and u gamma wedge gamma
 * wedge gamma' = 0. Always at least two. */
int aut_dimension(const MatF& a, const VecF& z, const MatF& sigma);

/* Class of the curve attached to rolling with radius ratio rho. */
CurveClass rolling_class(const Rat& rho);

} // namespace legode
