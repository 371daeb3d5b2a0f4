#include "legode/models235.hpp"

#include <initializer_list>
#include <map>
#include <utility>

#include "legode/common.hpp"

namespace legode {

namespace {

VecF zvec(int n) { return VecF(static_cast<std::size_t>(n), RatFunc()); }

VecF unit(int n, int k) {
    VecF v = zvec(n);
    v[static_cast<std::size_t>(k)] = RatFunc(1);
    return v;
}

void bra(FiltLieAlg& f, int i, int j,
         std::initializer_list<std::pair<int, RatFunc>> terms) {
    VecF v = zvec(f.dim());
    for (const auto& t : terms)
        v[static_cast<std::size_t>(t.first)] = t.second;
    f.set_bracket(i, j, v);
}

MatF mat4(std::initializer_list<std::initializer_list<RatFunc>> rows) {
    std::vector<VecF> r;
    for (const auto& row : rows) r.emplace_back(row);
    return MatF::from_rows(r);
}

/* Basis T, N, X1, X2, X3, X4, X5. */
Model235 build_n7c() {
    const RatFunc c = RatFunc::variable("c");
    Model235 m;
    m.name = "N7c";
    m.f = FiltLieAlg::zero({"T", "N", "X1", "X2", "X3", "X4", "X5"},
                           {0, 0, -1, -1, -2, -3, -3});
    bra(m.f, 0, 1, {{1, RatFunc(-1)}});
    bra(m.f, 0, 3, {{3, RatFunc(-1)}});
    bra(m.f, 0, 4, {{4, RatFunc(-1)}});
    bra(m.f, 0, 5, {{5, RatFunc(-1)}});
    bra(m.f, 0, 6, {{6, RatFunc(-2)}});
    bra(m.f, 1, 2, {{3, RatFunc(1)}});
    bra(m.f, 1, 5, {{6, RatFunc(-1)}});
    bra(m.f, 2, 3, {{1, c * -3}, {4, RatFunc(-2)}});
    bra(m.f, 2, 4, {{3, c * -2}, {5, RatFunc(3)}});
    bra(m.f, 2, 5, {{1, RatFunc(-1)}, {4, c}});
    bra(m.f, 3, 4, {{6, RatFunc(-3)}});
    m.isotropy = {0, 1};
    m.lift_isotropy = {0};
    m.lift_e = unit(7, 2);
    m.lift_v = unit(7, 1);
    m.quotient_basis = {unit(7, 1), unit(7, 3), unit(7, 4), unit(7, 5)};
    m.generator = mat4({{RatFunc(), c * -3, RatFunc(), RatFunc(-1)},
                        {RatFunc(-1), RatFunc(), c * -2, RatFunc()},
                        {RatFunc(), RatFunc(-2), RatFunc(), c},
                        {RatFunc(), RatFunc(), RatFunc(3), RatFunc()}});
    return m;
}

/* Basis N, X1, X2, X3, X4, X5. */
Model235 build_n6() {
    Model235 m;
    m.name = "N6";
    m.f = FiltLieAlg::zero({"N", "X1", "X2", "X3", "X4", "X5"},
                           {0, -1, -1, -2, -3, -3});
    bra(m.f, 0, 1, {{2, RatFunc(1)}});
    bra(m.f, 0, 2, {{0, RatFunc(-2)}});
    bra(m.f, 0, 4, {{0, RatFunc(1)}, {5, RatFunc(-1)}});
    bra(m.f, 1, 2, {{0, RatFunc(-18)}, {1, RatFunc(2)}, {3, RatFunc(-2)}});
    bra(m.f, 1, 3, {{2, RatFunc(-12)}, {4, RatFunc(3)}});
    bra(m.f, 1, 4, {{0, RatFunc(-42)}, {1, RatFunc(-2)}, {3, RatFunc(6)}});
    bra(m.f, 1, 5, {{4, RatFunc(-1)}});
    bra(m.f, 2, 3, {{0, RatFunc(27)}, {5, RatFunc(-3)}});
    bra(m.f, 2, 4, {{2, RatFunc(-1)}, {4, RatFunc(-1)}});
    bra(m.f, 2, 5, {{0, RatFunc(-1)}, {5, RatFunc(1)}});
    bra(m.f, 3, 4, {{0, RatFunc(-60)}, {3, RatFunc(6)}});
    bra(m.f, 4, 5, {{0, RatFunc(-24)}, {3, RatFunc(2)}, {5, RatFunc(4)}});
    m.isotropy = {0};
    m.lift_isotropy = {};
    m.lift_e = unit(6, 1);
    m.lift_v = unit(6, 0);
    m.quotient_basis = {unit(6, 0), unit(6, 2), unit(6, 3), unit(6, 4)};
    m.generator = mat4({{RatFunc(), RatFunc(-18), RatFunc(), RatFunc(-42)},
                        {RatFunc(-1), RatFunc(), RatFunc(-12), RatFunc()},
                        {RatFunc(), RatFunc(-2), RatFunc(), RatFunc(6)},
                        {RatFunc(), RatFunc(), RatFunc(3), RatFunc()}});
    return m;
}

/* Basis T, X1, X2, X3, X4, X5. */
Model235 build_d6a() {
    const RatFunc a = RatFunc::variable("a");
    Model235 m;
    m.name = "D6a";
    m.f = FiltLieAlg::zero({"T", "X1", "X2", "X3", "X4", "X5"},
                           {0, -1, -1, -2, -3, -3});
    bra(m.f, 0, 1, {{1, RatFunc(1)}});
    bra(m.f, 0, 2, {{2, RatFunc(-1)}});
    bra(m.f, 0, 4, {{4, RatFunc(1)}});
    bra(m.f, 0, 5, {{5, RatFunc(-1)}});
    bra(m.f, 1, 2, {{0, a * 3}, {3, RatFunc(-2)}});
    bra(m.f, 1, 3, {{1, a * 2}, {4, RatFunc(3)}});
    bra(m.f, 1, 5, {{0, RatFunc(6)}, {3, a * -1}});
    bra(m.f, 2, 3, {{2, a * -2}, {5, RatFunc(-3)}});
    bra(m.f, 2, 4, {{0, RatFunc(-6)}, {3, a}});
    bra(m.f, 3, 4, {{1, (a * a + 3) * -1}});
    bra(m.f, 3, 5, {{2, a * a + 3}});
    bra(m.f, 4, 5, {{0, a * a * a - a}, {3, RatFunc(-2)}});
    m.isotropy = {0};
    m.lift_isotropy = {};
    m.lift_e = unit(6, 1);
    m.lift_e[2] = RatFunc(1);
    m.lift_v = unit(6, 0);
    VecF w = unit(6, 4);
    w[5] = RatFunc(-1);
    m.quotient_basis = {unit(6, 0), unit(6, 1), unit(6, 3), w};
    m.generator = mat4({{RatFunc(), a * -3, RatFunc(), RatFunc(-12)},
                        {RatFunc(-2), RatFunc(), a * 4, RatFunc()},
                        {RatFunc(), RatFunc(2), RatFunc(), a * 2},
                        {RatFunc(), RatFunc(), RatFunc(3), RatFunc()}});
    return m;
}

const std::map<std::string, Model235>& model_map() {
    static const std::map<std::string, Model235>* all = [] {
        auto* t = new std::map<std::string, Model235>;
        for (Model235 m : {build_n7c(), build_n6(), build_d6a()}) {
            if (!jacobi_check(m.f))
                throw calc_error("internal", "model table violates the Jacobi identity");
            t->emplace(m.name, std::move(m));
        }
        return t;
    }();
    return *all;
}

} // namespace

const Model235& model_by_name(const std::string& name) {
    const auto& all = model_map();
    const auto it = all.find(name);
    if (it == all.end())
        throw calc_error("unknown_model", "unknown model name: " + name);
    return it->second;
}

std::vector<std::string> model_names() { return {"N7c", "N6", "D6a"}; }

} // namespace legode
