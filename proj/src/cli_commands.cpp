#include "legode/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "legode/checks.hpp"
#include "legode/common.hpp"
#include "legode/jsonio.hpp"
#include "legode/legcurve.hpp"
#include "legode/models235.hpp"
#include "legode/ode4.hpp"

namespace legode {

namespace {

void emit(const json& j, bool pretty) {
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

void emit_error(const std::string& code, const std::string& message) {
    const json j{{"schema", "1"}, {"error", {{"code", code}, {"message", message}}}};
    std::cerr << j.dump() << "\n";
}

int exit_code_for(const std::string& code) {
    return code == "parse_error" || code == "bad_rational" || code == "usage" ? 2 : 1;
}

/* Accepts the inline expression grammar, inline JSON, or @file JSON. */
RatFunc parse_rf_arg(const std::string& s) {
    if (!s.empty() && (s[0] == '{' || s[0] == '[' || s[0] == '@'))
        return ratfunc_from_json(load_json_arg(s));
    return rf_parse(s);
}

RatFunc parse_q0_arg(const std::string& s) {
    if (s.rfind("c2=", 0) == 0) {
        const auto comma = s.find(',');
        if (comma == std::string::npos || s.compare(comma + 1, 3, "c0=") != 0)
            throw calc_error("parse_error", "potential shorthand is c2=p/q,c0=p/q");
        return lf_family_q0(rat_parse(s.substr(3, comma - 3)),
                            rat_parse(s.substr(comma + 4)));
    }
    return parse_rf_arg(s);
}

void parse_curve_input(const std::string& arg, MatF& a, VecF& z) {
    const json in = load_json_arg(arg);
    if (!in.is_object() || !in.contains("A") || !in.contains("z"))
        throw calc_error("parse_error", "curve input must carry A and z");
    a = matf_from_json(in.at("A"));
    z = vecf_from_json(in.at("z"));
}

json checks_to_json(const std::vector<CheckResult>& checks, const std::string& suite) {
    json arr = json::array();
    bool all = true;
    for (const auto& c : checks) {
        json row{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) row["detail"] = c.detail;
        arr.push_back(std::move(row));
        all = all && c.pass;
    }
    json out{{"schema", "1"}, {"checks", std::move(arr)}, {"all_pass", all}};
    if (!suite.empty()) out["suite"] = suite;
    return out;
}

struct RunOut {
    int status = -1;
    std::string text;
};

RunOut capture(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw calc_error("internal", "cannot spawn: " + cmd);
    RunOut out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.text.append(buf, n);
    const int st = pclose(pipe);
    out.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return out;
}

CheckResult byte_stability_check(const std::string& self) {
    CheckResult res;
    res.name = "cli_byte_stability";
    res.pass = true;
    const std::string base = "\"" + self + "\" ";
    const char* examples[] = {"rolling --rho 3/1", "models --name N6",
                              "equiv --a 4/1 --b 1/4"};
    for (const char* ex : examples) {
        const std::string cmd = base + ex + " 2>/dev/null";
        const RunOut first = capture(cmd);
        const RunOut second = capture(cmd);
        if (first.status != 0 || first.text.empty() || first.text != second.text ||
            json::parse(first.text, nullptr, false).is_discarded()) {
            res.pass = false;
            res.detail = std::string("unstable or invalid output from: ") + ex;
            return res;
        }
    }
    return res;
}

std::string model_param_name(const Model235& m) {
    const auto ids = m.generator.at(0, 1).num().vars_present();
    return ids.empty() ? std::string() : var_name(ids.front());
}

json model_row(const Model235& m, const std::string& param) {
    MatF a = m.generator;
    const std::string pname = model_param_name(m);
    if (!param.empty() && param != pname) {
        Rat v;
        try {
            v = rat_parse(param);
        } catch (const calc_error&) {
            throw calc_error("bad_input", pname.empty()
                                              ? "model has no parameter"
                                              : "parameter must be " + pname +
                                                    " or a rational value");
        }
        if (pname.empty()) throw calc_error("bad_input", "model has no parameter");
        const int pid = var_id(pname);
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                a.at(i, j) = a.at(i, j).substitute(pid, RatFunc(v));
    }
    const PolyInS f = charpoly(a);
    const auto icls = class_invariant_from_charpoly(f.at(2), f.at(0));
    if (!icls)
        throw calc_error("internal", "model generator lies on the degenerate locus");
    const RatFunc gap = f.at(2) * f.at(2) * 9 - f.at(0) * 100;

    json rows = json::array();
    for (int i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.cols(); ++j) row.push_back(rf_str(a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"schema", "1"},     {"name", m.name},
                {"A", std::move(rows)}, {"fA", f.str("s")},
                {"I", rf_str(*icls)},   {"q0_nonzero", !gap.is_zero()}};
}

} // namespace

int cli_run(int argc, char** argv) {
    const std::string self = argc > 0 ? argv[0] : "legode";
    bool pretty = false;
    int status = 0;

    CLI::App app{
        "Exact invariants of nondegenerate Legendrian curves, their fourth-order "
        "equations, and the symmetry algebras behind them."};
    app.require_subcommand(1);
    app.footer(
        "Rational-function arguments use a small expression grammar: integer\n"
        "literals, named variables (t, c, a, r, ...), + - * / ^, parentheses,\n"
        "and juxtaposition for products such as 9c^2. Structured inputs are\n"
        "inline JSON or @file.json; rationals are p/q strings, polynomials\n"
        "arrays of {exps, coef}, rational functions {num, den}.");
    app.add_flag("--pretty", pretty, "indent JSON output");

    auto* inv = app.add_subcommand("invariants",
                                   "differential invariants of u'''' + q0 u = 0");
    std::string q0_arg;
    inv->add_option("--q0", q0_arg,
                    "potential: expression in t, JSON, @file, or c2=p/q,c0=p/q")
        ->required();
    inv->add_flag("--pretty", pretty, "indent JSON output");
    inv->callback([&] {
        const InvariantReport rep = legendrian_invariants(parse_q0_arg(q0_arg));
        emit(json{{"schema", "1"},
                  {"q0", ratfunc_to_json(rep.q0)},
                  {"rnc", rep.rnc},
                  {"R", ratfunc_to_json(rep.R)},
                  {"I_lit", rep.rnc ? json() : ratfunc_to_json(rep.I_lit)},
                  {"I_cls", rep.rnc ? json() : ratfunc_to_json(rep.I_cls)}},
             pretty);
    });

    auto* cls = app.add_subcommand("classify", "projective class of the curve exp(tA)z");
    std::string curve_arg;
    cls->add_option("--input", curve_arg, "JSON {A, z}, inline or @file")->required();
    cls->add_flag("--pretty", pretty, "indent JSON output");
    cls->callback([&] {
        MatF a;
        VecF z;
        parse_curve_input(curve_arg, a, z);
        const CurveClass c = classify(a, z);
        emit(json{{"schema", "1"},
                  {"kind", curve_kind_name(c.kind)},
                  {"invariant_cls",
                   c.invariant_cls ? ratfunc_to_json(*c.invariant_cls) : json()},
                  {"r_squared", c.r_squared ? json(rat_str(*c.r_squared)) : json()},
                  {"rep",
                   {{"A", matf_to_json(c.rep.A)},
                    {"sigma", matf_to_json(c.rep.sigma)},
                    {"z", vecf_to_json(c.rep.z)}}}},
             pretty);
    });

    auto* eqv = app.add_subcommand("equiv", "whether two eigenvalue ratios name one class");
    std::string eq_a, eq_b;
    eqv->add_option("--a", eq_a, "first squared ratio p/q")->required();
    eqv->add_option("--b", eq_b, "second squared ratio p/q")->required();
    eqv->add_flag("--pretty", pretty, "indent JSON output");
    eqv->callback([&] {
        emit(json{{"schema", "1"},
                  {"equivalent", equivalent_r2(rat_parse(eq_a), rat_parse(eq_b))}},
             pretty);
    });

    auto* sig = app.add_subcommand("sigma", "symplectic structure making the curve Legendrian");
    std::string sigma_arg;
    sig->add_option("--input", sigma_arg, "JSON {A, z}, inline or @file")->required();
    sig->add_flag("--pretty", pretty, "indent JSON output");
    sig->callback([&] {
        MatF a;
        VecF z;
        parse_curve_input(sigma_arg, a, z);
        emit(json{{"schema", "1"}, {"sigma", matf_to_json(compatible_sigma(a, z))}}, pretty);
    });

    auto* aut = app.add_subcommand("aut-dim", "dimension of the symmetry algebra of the curve cone");
    std::string aut_arg;
    aut->add_option("--input", aut_arg, "JSON {A, z}, inline or @file")->required();
    aut->add_flag("--pretty", pretty, "indent JSON output");
    aut->callback([&] {
        MatF a;
        VecF z;
        parse_curve_input(aut_arg, a, z);
        emit(json{{"schema", "1"}, {"dim", aut_dimension(a, z, compatible_sigma(a, z))}},
             pretty);
    });

    auto* pro = app.add_subcommand("prolong", "Tanaka prolongation of a graded symbol pair");
    std::string alg_arg, g0_arg;
    int max_level = 5;
    bool past_zero = false;
    pro->add_option("--algebra", alg_arg, "graded algebra JSON, inline or @file")->required();
    pro->add_option("--g0", g0_arg, "JSON array of degree-zero matrices")->required();
    pro->add_option("--max", max_level, "levels to compute")->check(CLI::Range(1, 8));
    pro->add_flag("--continue-past-zero", past_zero, "do not stop at the first zero level");
    pro->add_flag("--pretty", pretty, "indent JSON output");
    pro->callback([&] {
        const FiltLieAlg alg = filt_from_json(load_json_arg(alg_arg));
        const json gj = load_json_arg(g0_arg);
        if (!gj.is_array())
            throw calc_error("parse_error", "g0 must be an array of matrices");
        std::vector<MatF> g0;
        for (const auto& mj : gj) g0.push_back(matf_from_json(mj));
        const ProlongResult res = tanaka_prolong(alg, g0, max_level, past_zero);
        emit(json{{"schema", "1"}, {"dims", res.dims}, {"total", res.total}}, pretty);
    });

    auto* mdl = app.add_subcommand("models", "multiply transitive model tables");
    std::string model_name, model_param;
    bool verify_all = false;
    mdl->add_option("--name", model_name, "N7c, N6, or D6a");
    mdl->add_option("--param", model_param, "parameter name, or a rational value to specialize");
    mdl->add_flag("--verify-all", verify_all, "run every model check instead of printing a row");
    mdl->add_flag("--pretty", pretty, "indent JSON output");
    mdl->callback([&] {
        if (verify_all) {
            const auto checks = run_acceptance_checks(model_check_names());
            const json out = checks_to_json(checks, "");
            emit(out, pretty);
            if (!out.at("all_pass").get<bool>()) status = 1;
            return;
        }
        if (model_name.empty())
            throw calc_error("usage", "models needs --name or --verify-all");
        emit(model_row(model_by_name(model_name), model_param), pretty);
    });

    auto* rol = app.add_subcommand("rolling", "curve class of the rolling distribution");
    std::string rho_arg;
    rol->add_option("--rho", rho_arg, "radius ratio p/q")->required();
    rol->add_flag("--pretty", pretty, "indent JSON output");
    rol->callback([&] {
        const CurveClass c = rolling_class(rat_parse(rho_arg));
        json out{{"schema", "1"}, {"kind", curve_kind_name(c.kind)}};
        if (c.invariant_cls) out["I_cls"] = rf_str(*c.invariant_cls);
        if (c.r_squared) out["r_squared"] = rat_str(*c.r_squared);
        emit(out, pretty);
    });

    auto* lfc = app.add_subcommand("lf-check", "numeric reduction residuals for u'''' + c2 u'' + c0 u = 0");
    std::string c2_arg, c0_arg;
    int points = 5;
    lfc->add_option("--c2", c2_arg, "second-order coefficient p/q")->required();
    lfc->add_option("--c0", c0_arg, "zeroth-order coefficient p/q")->required();
    lfc->add_option("--points", points, "number of sample points")->check(CLI::Range(1, 32));
    lfc->add_flag("--pretty", pretty, "indent JSON output");
    lfc->callback([&] {
        const double c2 = rat_parse(c2_arg).get_d();
        const double c0 = rat_parse(c0_arg).get_d();
        std::vector<double> ts;
        for (int i = 0; i < points; ++i)
            ts.push_back(points == 1 ? 0.1 : 0.1 + 0.6 * i / (points - 1));
        json samples = json::array();
        double worst = 0.0;
        for (const auto& s : numeric_lf_reduce(c2, c0, ts)) {
            samples.push_back(json{{"t", s.t}, {"r3", s.r3}, {"r2", s.r2},
                                   {"r1", s.r1}, {"r0", s.r0}});
            worst = std::max({worst, s.r3, s.r2, s.r1, s.r0});
        }
        emit(json{{"schema", "1"},
                  {"c2", rat_str(rat_parse(c2_arg))},
                  {"c0", rat_str(rat_parse(c0_arg))},
                  {"samples", std::move(samples)},
                  {"max_residual", worst}},
             pretty);
    });

    auto* tro = app.add_subcommand("transform-ode", "push a fourth-order equation through t -> lambda, u -> mu u");
    std::string ode_arg, lam_arg, mu_arg = "1";
    tro->add_option("--ode", ode_arg, "JSON {p3, p2, p1, p0}, inline or @file")->required();
    tro->add_option("--lambda", lam_arg, "Mobius reparameterization of t")->required();
    tro->add_option("--mu", mu_arg, "scaling of the unknown");
    tro->add_flag("--pretty", pretty, "indent JSON output");
    tro->callback([&] {
        const ODE4 ode = ode_from_json(load_json_arg(ode_arg));
        const ODE4 res =
            general_transform_ode(ode, parse_rf_arg(lam_arg), parse_rf_arg(mu_arg));
        emit(json{{"schema", "1"}, {"ode", ode_to_json(res)}}, pretty);
    });

    auto* ver = app.add_subcommand("verify", "run the full invariant suite");
    std::string suite;
    ver->add_option("--suite", suite, "which suite to run")
        ->required()
        ->check(CLI::IsMember({"all"}));
    ver->add_flag("--pretty", pretty, "indent JSON output");
    ver->callback([&] {
        auto checks = run_acceptance_checks();
        checks.push_back(byte_stability_check(self));
        const json out = checks_to_json(checks, suite);
        emit(out, pretty);
        if (!out.at("all_pass").get<bool>()) status = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("usage", e.what());
        return 2;
    } catch (const calc_error& e) {
        emit_error(e.code(), e.what());
        return exit_code_for(e.code());
    } catch (const json::exception& e) {
        emit_error("parse_error", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 1;
    }
    return status;
}

} // namespace legode
