#include "legode/jsonio.hpp"

#include <fstream>
#include <sstream>

#include "legode/common.hpp"

namespace legode {

json rat_to_json(const Rat& x) { return rat_str(x); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return rat_parse(j.get<std::string>());
    throw calc_error("parse_error", "expected a rational literal");
}

json mpoly_to_json(const MPoly& p) {
    json out = json::array();
    for (const auto& term : p.terms()) {
        int width = 0;
        for (const auto& pe : term.first.e) width = pe.first + 1;
        std::vector<int> exps(static_cast<std::size_t>(width), 0);
        for (const auto& pe : term.first.e)
            exps[static_cast<std::size_t>(pe.first)] = pe.second;
        out.push_back(json{{"exps", exps}, {"coef", rat_str(term.second)}});
    }
    return out;
}

MPoly mpoly_from_json(const json& j) {
    if (!j.is_array()) throw calc_error("parse_error", "polynomial must be an array of terms");
    MPoly p;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("exps") || !term.contains("coef"))
            throw calc_error("parse_error", "polynomial term must carry exps and coef");
        Mono m;
        int id = 0;
        for (const auto& e : term.at("exps")) {
            const int exp = e.get<int>();
            if (exp < 0) throw calc_error("parse_error", "negative exponent in polynomial term");
            if (exp > 0) m.e.emplace_back(id, exp);
            ++id;
        }
        p.add_term(m, rat_from_json(term.at("coef")));
    }
    return p;
}

json ratfunc_to_json(const RatFunc& f) {
    return json{{"num", mpoly_to_json(f.num())}, {"den", mpoly_to_json(f.den())}};
}

RatFunc ratfunc_from_json(const json& j) {
    if (j.is_number_integer()) return RatFunc(j.get<long>());
    if (j.is_string()) return rf_parse(j.get<std::string>());
    if (j.is_object() && j.contains("num") && j.contains("den"))
        return RatFunc(mpoly_from_json(j.at("num")), mpoly_from_json(j.at("den")));
    throw calc_error("parse_error", "expected a rational function");
}

json matf_to_json(const MatF& m) {
    json out = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(ratfunc_to_json(m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

MatF matf_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw calc_error("parse_error", "matrix must be a nonempty array of rows");
    std::vector<VecF> rows;
    std::size_t width = 0;
    for (const auto& r : j) {
        if (!r.is_array()) throw calc_error("parse_error", "matrix row must be an array");
        VecF row;
        for (const auto& e : r) row.push_back(ratfunc_from_json(e));
        if (rows.empty())
            width = row.size();
        else if (row.size() != width)
            throw calc_error("parse_error", "matrix rows differ in length");
        rows.push_back(std::move(row));
    }
    return MatF::from_rows(rows);
}

json vecf_to_json(const VecF& v) {
    json out = json::array();
    for (const auto& e : v) out.push_back(ratfunc_to_json(e));
    return out;
}

VecF vecf_from_json(const json& j) {
    if (!j.is_array()) throw calc_error("parse_error", "vector must be an array");
    VecF v;
    for (const auto& e : j) v.push_back(ratfunc_from_json(e));
    return v;
}

json ode_to_json(const ODE4& ode) {
    return json{{"p3", ratfunc_to_json(ode.p3)},
                {"p2", ratfunc_to_json(ode.p2)},
                {"p1", ratfunc_to_json(ode.p1)},
                {"p0", ratfunc_to_json(ode.p0)}};
}

ODE4 ode_from_json(const json& j) {
    if (!j.is_object()) throw calc_error("parse_error", "equation must be an object");
    // Accept a full command response so outputs can be piped back in.
    if (j.contains("ode")) return ode_from_json(j.at("ode"));
    const bool known = j.contains("p3") || j.contains("p2") || j.contains("p1") || j.contains("p0");
    if (!known && !j.empty())
        throw calc_error("parse_error", "equation object carries none of p3, p2, p1, p0");
    auto coef = [&](const char* key) {
        return j.contains(key) ? ratfunc_from_json(j.at(key)) : RatFunc();
    };
    return ODE4{coef("p3"), coef("p2"), coef("p1"), coef("p0")};
}

json filt_to_json(const FiltLieAlg& f) {
    json brackets = json::array();
    for (int i = 0; i < f.dim(); ++i)
        for (int j = i + 1; j < f.dim(); ++j) {
            const VecF& v = f.bracket(i, j);
            json coeffs = json::object();
            for (int k = 0; k < f.dim(); ++k)
                if (!v[static_cast<std::size_t>(k)].is_zero())
                    coeffs[std::to_string(k)] = rf_str(v[static_cast<std::size_t>(k)]);
            if (!coeffs.empty())
                brackets.push_back(json{{"i", i}, {"j", j}, {"coeffs", std::move(coeffs)}});
        }
    return json{{"dim", f.dim()},
                {"names", f.names},
                {"degrees", f.degrees},
                {"brackets", std::move(brackets)}};
}

FiltLieAlg filt_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("degrees"))
        throw calc_error("parse_error", "algebra must carry dim and degrees");
    const int n = j.at("dim").get<int>();
    std::vector<std::string> names;
    if (j.contains("names"))
        names = j.at("names").get<std::vector<std::string>>();
    else
        for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
    const auto degrees = j.at("degrees").get<std::vector<int>>();
    if (static_cast<int>(names.size()) != n || static_cast<int>(degrees.size()) != n)
        throw calc_error("parse_error", "names and degrees must match dim");

    FiltLieAlg f = FiltLieAlg::zero(names, degrees);
    if (j.contains("brackets"))
        for (const auto& b : j.at("brackets")) {
            const int bi = b.at("i").get<int>();
            const int bj = b.at("j").get<int>();
            if (bi < 0 || bi >= n || bj < 0 || bj >= n)
                throw calc_error("parse_error", "bracket index out of range");
            VecF v(static_cast<std::size_t>(n), RatFunc());
            for (const auto& [key, val] : b.at("coeffs").items()) {
                std::size_t pos = 0;
                int k = -1;
                try {
                    k = std::stoi(key, &pos);
                } catch (const std::exception&) {
                }
                if (k < 0 || k >= n || pos != key.size())
                    throw calc_error("parse_error", "bracket coefficient key out of range");
                v[static_cast<std::size_t>(k)] = ratfunc_from_json(val);
            }
            f.set_bracket(bi, bj, v);
        }
    return f;
}

json load_json_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw calc_error("parse_error", "cannot read file: " + arg.substr(1));
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw calc_error("parse_error", "malformed JSON input");
    return j;
}

} // namespace legode
