#include "legode/checks.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace legode;

namespace {

struct Criterion {
    const char* label;
    double budget_seconds; // 0 means no bound is enforced
};

// One entry per check reported by run_acceptance_checks, in order.
const Criterion kCriteria[] = {
    {"model generators and quartic polynomials are reproduced exactly", 1.0},
    {"model curve invariants, including the flat member", 0.0},
    {"invariant table of the homogeneous curves and injectivity", 0.0},
    {"transformation weights of the family invariants", 0.0},
    {"closed form of the family obstruction and its sign convention", 0.0},
    {"prolongation dimensions of the distinguished symbol pairs", 5.0},
    {"symmetry dimensions of the classified curves", 0.0},
    {"recovery of the compatible structure on the catalog", 0.0},
    {"bracket tables, distribution growth, and generation depth", 0.0},
    {"exponential orbits solve their quartic equations", 0.0},
    {"matchings between the three model families", 0.0},
    {"numeric reduction residuals on random equations", 1.0},
};

std::string capture(const std::string& cmd, int& status) {
    std::string text;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return text;
    }
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) text.append(buf, n);
    const int rc = pclose(pipe);
    status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return text;
}

bool cli_reproducibility(std::string& detail) {
    const std::string cli = std::string("\"") + LEGODE_CLI_PATH + "\"";
    const std::pair<const char*, const char*> pinned[] = {
        {"rolling --rho 3/1", "{\"kind\":\"RationalNormal\",\"schema\":\"1\"}\n"},
        {"models --name N6",
         "{\"A\":[[\"0\",\"-18\",\"0\",\"-42\"],[\"-1\",\"0\",\"-12\",\"0\"],"
         "[\"0\",\"-2\",\"0\",\"6\"],[\"0\",\"0\",\"3\",\"0\"]],\"I\":\"-1/7\","
         "\"fA\":\"s^4-60s^2+576\",\"name\":\"N6\",\"q0_nonzero\":true,\"schema\":\"1\"}\n"},
        {"equiv --a 4/1 --b 1/4", "{\"equivalent\":true,\"schema\":\"1\"}\n"},
    };
    for (const auto& [args, want] : pinned) {
        int st1 = -1, st2 = -1;
        const std::string first = capture(cli + " " + args + " 2>/dev/null", st1);
        const std::string second = capture(cli + " " + args + " 2>/dev/null", st2);
        if (st1 != 0 || st2 != 0) {
            detail = std::string("nonzero exit from ") + args;
            return false;
        }
        if (first != want) {
            detail = std::string("unexpected bytes from ") + args;
            return false;
        }
        if (first != second) {
            detail = std::string("unstable bytes from ") + args;
            return false;
        }
    }
    int st = -1;
    capture(cli + " verify --suite all 2>/dev/null", st);
    if (st != 0) {
        detail = "verify --suite all exited with status " + std::to_string(st);
        return false;
    }
    return true;
}

} // namespace

int main() {
    const std::vector<CheckResult> results = run_acceptance_checks();
    const std::size_t expected = sizeof(kCriteria) / sizeof(kCriteria[0]);
    bool all_pass = true;
    if (results.size() != expected) {
        std::cout << "FAIL criterion 0: harness reported " << results.size() << " checks, expected "
                  << expected << "\n";
        return 1;
    }
    for (std::size_t i = 0; i < expected; ++i) {
        const CheckResult& r = results[i];
        const Criterion& c = kCriteria[i];
        bool ok = r.pass;
        std::string note = r.detail;
        if (ok && c.budget_seconds > 0 && r.seconds >= c.budget_seconds) {
            ok = false;
            note = "took " + std::to_string(r.seconds) + "s, budget " +
                   std::to_string(c.budget_seconds) + "s";
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << c.label;
        if (!note.empty()) std::cout << " (" << note << ")";
        std::cout << "\n";
        all_pass = all_pass && ok;
    }
    {
        std::string detail;
        const bool ok = cli_reproducibility(detail);
        std::cout << (ok ? "PASS" : "FAIL")
                  << " criterion 13: command-line reproducibility and full verification";
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        all_pass = all_pass && ok;
    }
    return all_pass ? 0 : 1;
}
