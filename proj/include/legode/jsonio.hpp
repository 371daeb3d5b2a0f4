#pragma once

#include <json.hpp>

#include "legode/liealg.hpp"
#include "legode/matf.hpp"
#include "legode/ode4.hpp"

namespace legode {

using json = nlohmann::json;

/* Wire format: rationals are "p/q" strings, polynomials arrays of
 * {exps: [int], coef: "p/q"} with exps indexed by interned variable id,
 * rational functions {num, den}.  Inputs are accepted more loosely: a
 * rational function may also be a grammar string or a plain integer. */
json rat_to_json(const Rat& x);
Rat rat_from_json(const json& j);

json mpoly_to_json(const MPoly& p);
MPoly mpoly_from_json(const json& j);

json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const json& j);

json matf_to_json(const MatF& m);
MatF matf_from_json(const json& j);

json vecf_to_json(const VecF& v);
VecF vecf_from_json(const json& j);

json ode_to_json(const ODE4& ode);
ODE4 ode_from_json(const json& j);

json filt_to_json(const FiltLieAlg& f);
FiltLieAlg filt_from_json(const json& j);

/* Parses inline JSON, or reads the file when the argument starts with '@'. */
json load_json_arg(const std::string& arg);

} // namespace legode
