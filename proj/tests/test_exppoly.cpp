#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "legode/common.hpp"
#include "legode/exppoly.hpp"

using namespace legode;

namespace {

[[maybe_unused]] const int RID = var_id("r");

MatF parse_mat(const std::vector<std::vector<std::string>>& rows) {
    std::vector<VecF> out;
    for (const auto& row : rows) {
        VecF v;
        for (const auto& s : row) v.push_back(rf_parse(s));
        out.push_back(v);
    }
    return MatF::from_rows(out);
}

VecF ones(int n) { return VecF(static_cast<std::size_t>(n), RatFunc(1)); }

/* gamma' = A gamma is the defining property of the orbit. */
void check_orbit_ode(const MatF& a, const std::vector<ExpPoly>& g) {
    for (int i = 0; i < a.rows(); ++i) {
        ExpPoly rhs;
        for (int j = 0; j < a.cols(); ++j)
            rhs += g[static_cast<std::size_t>(j)].scaled(a.at(i, j));
        CHECK(g[static_cast<std::size_t>(i)].derivative() == rhs);
    }
}

} // namespace

TEST_CASE("orbit of a diagonal matrix with symbolic parameter") {
    MatF a = parse_mat({{"r", "0", "0", "0"},
                        {"0", "1", "0", "0"},
                        {"0", "0", "-1", "0"},
                        {"0", "0", "0", "-r"}});
    auto g = exp_orbit(a, ones(4));
    CHECK(g[0] == ExpPoly::term(ExpKey{Rat(1), Rat(0)}, 0, RatFunc(1)));
    CHECK(g[1] == ExpPoly::term(ExpKey{Rat(0), Rat(1)}, 0, RatFunc(1)));
    CHECK(g[2] == ExpPoly::term(ExpKey{Rat(0), Rat(-1)}, 0, RatFunc(1)));
    CHECK(g[3] == ExpPoly::term(ExpKey{Rat(-1), Rat(0)}, 0, RatFunc(1)));
    check_orbit_ode(a, g);
}

TEST_CASE("orbit of the unipotent-pair normal form") {
    MatF a = parse_mat({{"1", "1", "0", "0"},
                        {"0", "1", "0", "0"},
                        {"0", "0", "-1", "1"},
                        {"0", "0", "0", "-1"}});
    VecF z = {RatFunc(2), RatFunc(3), RatFunc(5), RatFunc(7)};
    auto g = exp_orbit(a, z);
    ExpKey up{Rat(0), Rat(1)}, down{Rat(0), Rat(-1)};
    CHECK(g[0] == ExpPoly::term(up, 0, RatFunc(2)) + ExpPoly::term(up, 1, RatFunc(3)));
    CHECK(g[1] == ExpPoly::term(up, 0, RatFunc(3)));
    CHECK(g[2] == ExpPoly::term(down, 0, RatFunc(5)) + ExpPoly::term(down, 1, RatFunc(7)));
    CHECK(g[3] == ExpPoly::term(down, 0, RatFunc(7)));
    check_orbit_ode(a, g);
}

TEST_CASE("orbit of the full shift is the polynomial curve") {
    MatF a(4, 4);
    for (int i = 1; i < 4; ++i) a.at(i, i - 1) = RatFunc(1);
    VecF z = {RatFunc(1), RatFunc(0), RatFunc(0), RatFunc(0)};
    auto g = exp_orbit(a, z);
    ExpKey flat{Rat(0), Rat(0)};
    CHECK(g[0] == ExpPoly::term(flat, 0, RatFunc(1)));
    CHECK(g[1] == ExpPoly::term(flat, 1, RatFunc(1)));
    CHECK(g[2] == ExpPoly::term(flat, 2, RatFunc(Rat(1, 2))));
    CHECK(g[3] == ExpPoly::term(flat, 3, RatFunc(Rat(1, 6))));
    check_orbit_ode(a, g);
}

TEST_CASE("orbit of the split degenerate normal form") {
    MatF a = parse_mat({{"1", "0", "0", "0"},
                        {"0", "0", "1", "0"},
                        {"0", "0", "0", "0"},
                        {"0", "0", "0", "-1"}});
    VecF z = {RatFunc(1), RatFunc(2), RatFunc(3), RatFunc(4)};
    auto g = exp_orbit(a, z);
    ExpKey up{Rat(0), Rat(1)}, flat{Rat(0), Rat(0)}, down{Rat(0), Rat(-1)};
    CHECK(g[0] == ExpPoly::term(up, 0, RatFunc(1)));
    CHECK(g[1] == ExpPoly::term(flat, 0, RatFunc(2)) + ExpPoly::term(flat, 1, RatFunc(3)));
    CHECK(g[2] == ExpPoly::term(flat, 0, RatFunc(3)));
    CHECK(g[3] == ExpPoly::term(down, 0, RatFunc(4)));
    check_orbit_ode(a, g);
}

TEST_CASE("matrices outside the catalog are rejected") {
    MatF rot = parse_mat({{"0", "1"}, {"1", "0"}});
    CHECK_THROWS_WITH_AS(exp_orbit(rot, ones(2)), "non-catalog matrix", calc_error);
    MatF quad = parse_mat({{"r^2", "0"}, {"0", "0"}});
    CHECK_THROWS_WITH_AS(exp_orbit(quad, ones(2)), "non-catalog matrix", calc_error);
    MatF frac = parse_mat({{"1/r", "0"}, {"0", "0"}});
    CHECK_THROWS_WITH_AS(exp_orbit(frac, ones(2)), "non-catalog matrix", calc_error);
}

TEST_CASE("conjugated orbits reach beyond the direct catalog") {
    MatF a = parse_mat({{"1", "1"}, {"0", "2"}});
    CHECK_THROWS_AS(exp_orbit(a, ones(2)), calc_error); // diagonal and nilpotent parts do not commute
    MatF p = parse_mat({{"1", "1"}, {"0", "1"}});
    auto g = exp_orbit_conj(a, ones(2), p);
    ExpPoly e2t = ExpPoly::term(ExpKey{Rat(0), Rat(2)}, 0, RatFunc(1));
    CHECK(g[0] == e2t);
    CHECK(g[1] == e2t);
    check_orbit_ode(a, g);
}

TEST_CASE("product rule") {
    ExpPoly f = ExpPoly::term(ExpKey{Rat(1), Rat(0)}, 1, RatFunc(2)) +
                ExpPoly::term(ExpKey{Rat(0), Rat(-1)}, 0, rf_parse("r"));
    ExpPoly g = ExpPoly::term(ExpKey{Rat(0), Rat(1)}, 2, RatFunc(1)) +
                ExpPoly::constant(RatFunc(3));
    CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
    CHECK((f + g).derivative() == f.derivative() + g.derivative());
    CHECK((f - f).is_zero());
}

TEST_CASE("specialization merges colliding exponents") {
    MatF a = parse_mat({{"r", "0", "0", "0"},
                        {"0", "1", "0", "0"},
                        {"0", "0", "-1", "0"},
                        {"0", "0", "0", "-r"}});
    auto g = exp_orbit(a, ones(4));
    ExpPoly s = (g[0] + g[1]).specialize_r(Rat(1));
    CHECK(s == ExpPoly::term(ExpKey{Rat(0), Rat(1)}, 0, RatFunc(2)));
    ExpPoly coef = ExpPoly::term(ExpKey{Rat(1), Rat(0)}, 0, rf_parse("r^2"));
    CHECK(coef.specialize_r(Rat(3)) == ExpPoly::term(ExpKey{Rat(0), Rat(3)}, 0, RatFunc(9)));
}

TEST_CASE("bucketed homogeneous systems") {
    ExpPoly et = ExpPoly::term(ExpKey{Rat(0), Rat(1)}, 0, RatFunc(1));
    ExpPoly e2t = ExpPoly::term(ExpKey{Rat(0), Rat(2)}, 0, RatFunc(1));

    auto same = ep_nullspace({{et, et}}, 2);
    REQUIRE(same.size() == 1);
    CHECK(same[0][0] + same[0][1] == RatFunc(0));

    auto split = ep_nullspace({{et, e2t}}, 2);
    CHECK(split.empty());

    ExpPoly tet = ExpPoly::term(ExpKey{Rat(0), Rat(1)}, 1, RatFunc(1));
    auto powers = ep_nullspace({{et + tet, tet}}, 2); // x(1+t)e^t + y t e^t = 0
    CHECK(powers.empty());

    auto trivial = ep_nullspace({{ExpPoly(), ExpPoly()}}, 2);
    CHECK(trivial.size() == 2);
}
