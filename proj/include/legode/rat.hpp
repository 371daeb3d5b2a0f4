#pragma once

#include <gmpxx.h>
#include <string>

#include "legode/common.hpp"

namespace legode {

/* Exact rationals. gmpxx keeps values canonical (gcd-reduced, positive
 * denominator, zero stored as 0/1), which is exactly the invariant we need,
 * so Rat is the GMP class itself plus parse/print and a few helpers. */
using Rat = mpq_class;

/* Parses "p", "-p", or "p/q" (decimal digits). Throws calc_error on any
 * other shape or on a zero denominator. */
Rat rat_parse(const std::string& s);

/* "p" when the denominator is 1, else "p/q". Inverse of rat_parse. */
std::string rat_str(const Rat& x);

Rat rat_pow(const Rat& x, long e);   // e < 0 inverts; 0^negative throws

/* Checked division: y == 0 throws calc_error("division_by_zero"). */
Rat rat_div(const Rat& x, const Rat& y);

bool rat_is_square(const Rat& x);    // true iff x = (p/q)^2 for some rational
Rat rat_sqrt(const Rat& x);          // nonnegative root; precondition rat_is_square

} // namespace legode
