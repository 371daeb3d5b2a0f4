#pragma once

#include <string>
#include <vector>

namespace legode {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // short context; empty unless there is something to say
    double seconds = 0.0;
};

/* The twelve in-process acceptance checks, in their numbered order.  A
 * nonempty filter restricts the run to the named checks. */
std::vector<CheckResult> run_acceptance_checks(const std::vector<std::string>& only = {});

/* Names of the checks exercising the multiply transitive model tables. */
std::vector<std::string> model_check_names();

} // namespace legode
