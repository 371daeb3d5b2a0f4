#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "legode/models235.hpp"

#include <algorithm>
#include <random>

#include "legode/common.hpp"
#include "legode/ode4.hpp"

using namespace legode;

namespace {

VecF unit(int n, int k) {
    VecF v(static_cast<std::size_t>(n), RatFunc());
    v[static_cast<std::size_t>(k)] = RatFunc(1);
    return v;
}

int idx(const FiltLieAlg& f, const std::string& name) {
    const auto it = std::find(f.names.begin(), f.names.end(), name);
    REQUIRE(it != f.names.end());
    return static_cast<int>(it - f.names.begin());
}

} // namespace

TEST_CASE("tables are filtered Lie algebras") {
    for (const auto& name : model_names()) {
        const Model235& m = model_by_name(name);
        CAPTURE(name);
        CHECK(m.name == name);
        CHECK(jacobi_check(m.f));
        CHECK(m.f.dim() == (name == "N7c" ? 7 : 6));

        // [f^i, f^j] lands in f^(i+j): every component of a bracket of basis
        // elements with labels d1, d2 carries a label >= d1 + d2.
        for (int i = 0; i < m.f.dim(); ++i)
            for (int j = i + 1; j < m.f.dim(); ++j) {
                const VecF& v = m.f.bracket(i, j);
                for (int k = 0; k < m.f.dim(); ++k) {
                    if (v[static_cast<std::size_t>(k)].is_zero()) continue;
                    CHECK(m.f.degrees[static_cast<std::size_t>(k)] >=
                          m.f.degrees[static_cast<std::size_t>(i)] +
                              m.f.degrees[static_cast<std::size_t>(j)]);
                }
            }
    }
    CHECK_THROWS_WITH_AS(model_by_name("D7"), "unknown model name: D7", calc_error);
}

TEST_CASE("distribution growth") {
    for (const auto& name : model_names()) {
        CAPTURE(name);
        CHECK(model_growth_dims(model_by_name(name)) == std::vector<int>{2, 3, 5});
    }
}

TEST_CASE("lifted flag and generation depth") {
    for (const auto& name : model_names()) {
        CAPTURE(name);
        const std::vector<int> dims = model_lift_dims(model_by_name(name));
        CHECK(dims == std::vector<int>{2, 3, 4, 5, 6});
    }
}

TEST_CASE("characteristic directions of the lift") {
    for (const auto& name : model_names()) {
        CAPTURE(name);
        const Model235& m = model_by_name(name);
        std::vector<VecF> mod;
        for (int k : m.lift_isotropy) mod.push_back(unit(m.f.dim(), k));
        const auto flags = bracket_flag(m.f, {m.lift_e, m.lift_v}, mod, FlagKind::Weak);
        REQUIRE(flags.size() == 5);

        // The vertical direction is characteristic for the square of the
        // lifted distribution, the horizontal one for its fourth power.
        const Span& f2 = flags[1];
        for (const auto& b : f2.basis())
            CHECK(f2.contains(m.f.bracket_vec(m.lift_v, b)));
        const Span& f4 = flags[3];
        for (const auto& b : f4.basis())
            CHECK(f4.contains(m.f.bracket_vec(m.lift_e, b)));
    }

    // Swapping the two roles fails: witnesses in the seven-dimensional model.
    const Model235& m = model_by_name("N7c");
    const auto flags =
        bracket_flag(m.f, {m.lift_e, m.lift_v}, {unit(7, 0)}, FlagKind::Weak);
    CHECK_FALSE(flags[1].contains(m.f.bracket_vec(m.lift_e, unit(7, idx(m.f, "X2")))));
    CHECK_FALSE(flags[3].contains(m.f.bracket_vec(m.lift_v, unit(7, idx(m.f, "X4")))));
}

TEST_CASE("quotient action matches the stored generator") {
    for (const auto& name : model_names()) {
        CAPTURE(name);
        const Model235& m = model_by_name(name);
        CHECK(induced_generator(m) == m.generator);
    }
}

TEST_CASE("characteristic polynomials of the generators") {
    CHECK(model_charpoly(model_by_name("N7c")).str("s") == "s^4-10c*s^2+9c^2+6");
    CHECK(model_charpoly(model_by_name("N6")).str("s") == "s^4-60s^2+576");
    CHECK(model_charpoly(model_by_name("D6a")).str("s") == "s^4-20a*s^2+36a^2-144");

    for (const auto& name : model_names()) {
        CAPTURE(name);
        const Model235& m = model_by_name(name);
        const PolyInS f = model_charpoly(m);
        // Even spectrum and a cyclic generator (minimal = characteristic),
        // symbolically in the parameter.
        CHECK(f.at(3).is_zero());
        CHECK(f.at(1).is_zero());
        CHECK(minpoly(m.generator) == f);
    }
}

TEST_CASE("curve invariants of the models") {
    CHECK(model_invariant(model_by_name("N7c")) == rf_parse("-c^2/6"));
    CHECK(model_invariant(model_by_name("N6")) == RatFunc(Rat(-1, 7)));
    CHECK(model_invariant(model_by_name("D6a")) == rf_parse("a^2/36"));

    const CurveClass n6 = model_curve_class(model_by_name("N6"));
    CHECK(n6.kind == CurveKind::Lr2);
    REQUIRE(n6.r_squared.has_value());
    CHECK(*n6.r_squared == Rat(4));

    const CurveClass n7c = model_curve_class(model_by_name("N7c"));
    CHECK(n7c.kind == CurveKind::Lr2);
    CHECK_FALSE(n7c.r_squared.has_value());
    CHECK(model_curve_class(model_by_name("D6a")).kind == CurveKind::Lr2);

    // The ratio-4 class seen from the catalog side: the same invariant comes
    // out of the diagonal matrix with eigenvalue ratio 2.
    MatF d(4, 4);
    d.at(0, 0) = RatFunc(2);
    d.at(1, 1) = RatFunc(1);
    d.at(2, 2) = RatFunc(-1);
    d.at(3, 3) = RatFunc(-2);
    const VecF ones(4, RatFunc(1));
    const CurveClass cat = classify(d, ones);
    REQUIRE(cat.invariant_cls.has_value());
    CHECK(*cat.invariant_cls == model_invariant(model_by_name("N6")));
}

TEST_CASE("specializations stay off the degenerate locus") {
    std::mt19937 rng(2026);
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 12);
    for (const auto& name : model_names()) {
        CAPTURE(name);
        const Model235& m = model_by_name(name);
        const PolyInS f = model_charpoly(m);
        const RatFunc gap = f.at(2) * f.at(2) * 9 - f.at(0) * 100;
        // Constant and nonzero: no parameter value lands on the rational
        // normal stratum.
        CHECK(gap.is_constant());
        CHECK_FALSE(gap.is_zero());

        const std::vector<int> params = m.generator.at(0, 1).num().vars_present();
        for (int trial = 0; trial < 10; ++trial) {
            const Rat v = Rat(num(rng)) / Rat(den(rng));
            RatFunc inv = model_invariant(m);
            for (int id : params) inv = inv.substitute(id, RatFunc(v));
            const RatFunc c2 = f.at(2), c0 = f.at(0);
            RatFunc c2v = c2, c0v = c0;
            for (int id : params) {
                c2v = c2v.substitute(id, RatFunc(v));
                c0v = c0v.substitute(id, RatFunc(v));
            }
            const auto icls = class_invariant_from_charpoly(c2v, c0v);
            REQUIRE(icls.has_value());
            CHECK(*icls == inv);
        }
    }
}

TEST_CASE("flatness dimension count") {
    // Locally flat exactly when the symmetry algebra is as large as the
    // curve's own: dim f == 5 + dim aut.
    for (const auto& name : model_names()) {
        CAPTURE(name);
        const Model235& m = model_by_name(name);
        const NormalForm rep = model_curve_class(m).rep;
        const int za = aut_dimension(rep.A, rep.z, rep.sigma);
        CHECK(za == 2);
        CHECK((m.f.dim() == 5 + za) == (name == "N7c"));
    }
}

TEST_CASE("matching of the three families") {
    const RatFunc i7 = model_invariant(model_by_name("N7c"));
    const RatFunc i6 = model_invariant(model_by_name("N6"));
    const RatFunc id = model_invariant(model_by_name("D6a"));

    // a^2 = -6c^2 carries the D6a curve to the N7c one.
    CHECK(substitute_even(id, "a", rf_parse("-6c^2")) == i7);
    // Both hit the six-dimensional model's curve: c^2 = 6/7, a^2 = -36/7.
    CHECK(substitute_even(i7, "c", RatFunc(Rat(6, 7))) == i6);
    CHECK(substitute_even(id, "a", RatFunc(Rat(-36, 7))) == i6);

    const CurveClass match = class_from_invariant(substitute_even(id, "a", RatFunc(Rat(-36, 7))));
    CHECK(match.kind == CurveKind::Lr2);
    REQUIRE(match.r_squared.has_value());
    CHECK(*match.r_squared == Rat(4));

    CHECK_THROWS_WITH_AS(substitute_even(rf_parse("c^3+c"), "c", RatFunc(2)),
                         "variable appears with an odd exponent", calc_error);
    // Unrelated variables pass through untouched.
    CHECK(substitute_even(rf_parse("c^2+1"), "a", RatFunc(5)) == rf_parse("c^2+1"));
}
