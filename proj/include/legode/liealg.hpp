#pragma once

#include "legode/matf.hpp"

#include <string>
#include <vector>

namespace legode {

/* Lie algebra with a fixed graded basis; table[i][j] holds the coordinates
 * of [e_i, e_j]. Degrees are nonpositive, as in the nilpotent symbols the
 * package works with. */
struct FiltLieAlg {
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::vector<std::vector<VecF>> table;

    int dim() const { return static_cast<int>(names.size()); }
    static FiltLieAlg zero(std::vector<std::string> names, std::vector<int> degrees);
    void set_bracket(int i, int j, const VecF& v); // keeps the table skew
    const VecF& bracket(int i, int j) const;
    VecF bracket_vec(const VecF& x, const VecF& y) const;
};

bool jacobi_check(const FiltLieAlg& g);

/* The five-dimensional Heisenberg algebra of a symplectic 4x4 structure:
 * [e_i, e_j] = sigma_ij z. */
FiltLieAlg heis_build(const MatF& sigma);

/* Heisenberg group in exponential coordinates for the pairing
 * sigma(x, y) = x1 y3 - x3 y1 + x2 y4 - x4 y2. */
VecF heis_product(const VecF& x, const VecF& y);
VecF heis_inverse(const VecF& x);
/* Covector at x annihilating the left-invariant horizontal distribution. */
VecF heis_contact_form_at(const VecF& x);

/* Basis of the degree-zero derivation algebra, as matrices on the given
 * basis. */
std::vector<MatF> graded_derivations(const FiltLieAlg& g);

/* gl(2) acting on binary cubics in the basis x^3, 3x^2 y, 3x y^2, y^3. */
MatF sym3_embed(const MatF& m);

/* Extends a conformally symplectic matrix to a derivation of heis(5); the
 * center scales by the conformal factor. */
MatF heis_derivation_from_csp(const MatF& m, const MatF& sigma);

struct ProlongResult {
    std::vector<int> dims; // levels 1 .. max
    int total = 0;         // dim m + dim g0 + sum of the level dims
};

/* Prolongation of the pair (m, g0) level by level. Stops once a level
 * vanishes unless continue_past_zero is set. */
ProlongResult tanaka_prolong(const FiltLieAlg& m, const std::vector<MatF>& g0,
                             int max_level, bool continue_past_zero = false);

/* First prolongation computed directly: maps V -> g0 with the symplectic
 * trace correction, kernel of the skew-symmetrized evaluation. The g0
 * elements are given by their 4x4 action. */
int delta_kernel(const MatF& sigma, const std::vector<MatF>& g0);

} // namespace legode
