#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "legode/legcurve.hpp"

#include <random>

using namespace legode;

namespace {

[[maybe_unused]] const int RID = var_id("r");

VecF ones() { return VecF(4, RatFunc(1)); }

VecF vec4(long a, long b, long c, long d) {
    return VecF{RatFunc(a), RatFunc(b), RatFunc(c), RatFunc(d)};
}

MatF diag4(const Rat& r) {
    MatF m(4, 4);
    m.at(0, 0) = RatFunc(r);
    m.at(1, 1) = RatFunc(1);
    m.at(2, 2) = RatFunc(-1);
    m.at(3, 3) = RatFunc(-r);
    return m;
}

bool orbits_match(const MatF& a, const VecF& z, const MatF& p, const VecF& z0) {
    const auto lhs = exp_orbit(a, z);
    const auto base = exp_orbit(a, z0);
    for (int i = 0; i < 4; ++i) {
        ExpPoly combo;
        for (int j = 0; j < 4; ++j) combo += base[static_cast<std::size_t>(j)].scaled(p.at(i, j));
        if (combo != lhs[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

} // namespace

TEST_CASE("catalog forms are nondegenerate Legendrian curves") {
    const std::vector<NormalForm> cat = {
        normal_form_L0(),          normal_form_L1(), normal_form_diag(RatFunc(2)),
        normal_form_diag(RatFunc::variable("r")),
        normal_form_rnc(),         normal_form_rnc_shift()};
    for (const auto& nf : cat) {
        CHECK(check_star(nf.A, nf.z));
        CHECK(admissible(nf.A, nf.z, nf.sigma));
        CHECK((nf.A.transpose() * nf.sigma + nf.sigma * nf.A).is_zero());
        CHECK(rank(nf.sigma) == 4);
    }
}

TEST_CASE("star condition fails off the open stratum") {
    CHECK_FALSE(check_star(diag4(2), vec4(1, 1, 1, 0)));
    CHECK_THROWS_WITH_AS(classify(diag4(2), vec4(1, 1, 1, 0)),
                         "basepoint is not cyclic for the matrix", calc_error);
}

TEST_CASE("sigma recovery reproduces the catalog structures") {
    for (const auto& nf : {normal_form_L0(), normal_form_L1(), normal_form_diag(RatFunc(2)),
                           normal_form_diag(RatFunc::variable("r")), normal_form_rnc_shift()}) {
        CHECK(compatible_sigma(nf.A, nf.z) == nf.sigma);
    }
    // Recovery works from any admissible basepoint, not just the catalog
    // one; admissible here means lying on the invariant quadric z1 z4 = z2 z3.
    CHECK(compatible_sigma(normal_form_L1().A, vec4(1, 2, 3, 6)) == normal_form_L1().sigma);
}

TEST_CASE("no compatible structure exists off the symplectic locus") {
    MatF a(4, 4);
    a.at(0, 0) = RatFunc(1);
    a.at(1, 1) = RatFunc(2);
    a.at(2, 2) = RatFunc(3);
    a.at(3, 3) = RatFunc(4);
    CHECK_THROWS_WITH_AS(compatible_sigma(a, ones()),
                         "no symplectic structure is compatible with the curve", calc_error);
}

TEST_CASE("classification of the catalog representatives") {
    const CurveClass l0 = classify(normal_form_L0().A, ones());
    CHECK(l0.kind == CurveKind::L0);
    CHECK(curve_kind_name(l0.kind) == "L0");
    REQUIRE(l0.invariant_cls.has_value());
    CHECK(*l0.invariant_cls == RatFunc(Rat(1, 9)));
    CHECK_FALSE(l0.r_squared.has_value());

    const CurveClass l1 = classify(normal_form_L1().A, ones());
    CHECK(l1.kind == CurveKind::L1);
    REQUIRE(l1.invariant_cls.has_value());
    CHECK(*l1.invariant_cls == RatFunc(Rat(-1, 16)));

    const CurveClass lr = classify(diag4(2), ones());
    CHECK(lr.kind == CurveKind::Lr2);
    REQUIRE(lr.invariant_cls.has_value());
    CHECK(*lr.invariant_cls == RatFunc(Rat(-1, 7)));
    REQUIRE(lr.r_squared.has_value());
    CHECK(*lr.r_squared == 4);
    CHECK(lr.rep.A == diag4(2));

    const CurveClass rn = classify(normal_form_rnc().A, ones());
    CHECK(rn.kind == CurveKind::RationalNormal);
    CHECK_FALSE(rn.invariant_cls.has_value());
    CHECK_FALSE(rn.r_squared.has_value());

    const NormalForm sh = normal_form_rnc_shift();
    const CurveClass rs = classify(sh.A, sh.z);
    CHECK(rs.kind == CurveKind::RationalNormal);
}

TEST_CASE("generic family classifies with a symbolic invariant") {
    const NormalForm nf = normal_form_diag(RatFunc::variable("r"));
    const CurveClass cls = classify(nf.A, nf.z);
    CHECK(cls.kind == CurveKind::Lr2);
    REQUIRE(cls.invariant_cls.has_value());
    CHECK(*cls.invariant_cls == rf_parse("(r^2+1)^2/((r^2-9)(9r^2-1))"));
    CHECK_FALSE(cls.r_squared.has_value());
}

TEST_CASE("class does not depend on the basepoint inside the open orbit") {
    const CurveClass a = classify(normal_form_L1().A, ones());
    const CurveClass b = classify(normal_form_L1().A, vec4(2, 3, 5, 7));
    CHECK(a.kind == b.kind);
    CHECK(*a.invariant_cls == *b.invariant_cls);
}

TEST_CASE("ratio recovery and its normalization") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    int done = 0;
    while (done < 20) {
        const Rat r = Rat(num(rng)) / Rat(den(rng));
        if (r == 0 || abs(r) == 1 || abs(r) == 3 || abs(r) == Rat(1, 3)) continue;
        const CurveClass cls = classify(diag4(r), ones());
        REQUIRE(cls.kind == CurveKind::Lr2);
        REQUIRE(cls.r_squared.has_value());
        const Rat r2 = r * r;
        const Rat expect = abs(r2) >= 1 ? r2 : Rat(1) / r2;
        CHECK(*cls.r_squared == expect);
        CHECK(*cls.r_squared != 9);
        CHECK(*cls.r_squared != Rat(1, 9));
        // The reported ratio solves the recovery quadratic.
        REQUIRE(cls.invariant_cls.has_value());
        const Rat iv = cls.invariant_cls->as_rat();
        const Rat x = *cls.r_squared;
        CHECK((1 - 9 * iv) * x * x + (2 + 82 * iv) * x + (1 - 9 * iv) == 0);
        ++done;
    }
}

TEST_CASE("equivalence of recovered ratios") {
    CHECK(equivalent_r2(Rat(4), Rat(1, 4)));
    CHECK(equivalent_r2(Rat(4), Rat(4)));
    CHECK(equivalent_r2(Rat(-2), Rat(-1, 2)));
    CHECK_FALSE(equivalent_r2(Rat(4), Rat(9, 2)));
    CHECK_FALSE(equivalent_r2(Rat(4), Rat(-4)));
}

TEST_CASE("equivalence of curves") {
    CHECK(equivalent(diag4(2), ones(), diag4(Rat(1, 2)), ones()));
    CHECK(equivalent(diag4(2), ones(), diag4(-2), ones()));
    const NormalForm sh = normal_form_rnc_shift();
    CHECK(equivalent(normal_form_rnc().A, ones(), sh.A, sh.z));
    CHECK_FALSE(equivalent(normal_form_L0().A, ones(), normal_form_L1().A, ones()));
    CHECK_FALSE(equivalent(diag4(2), ones(), normal_form_rnc().A, ones()));
}

TEST_CASE("basepoint normalization on the five catalog cases") {
    const VecF z = vec4(2, 3, 5, 7);

    const NormalForm l1 = normal_form_L1();
    CHECK(orbits_match(l1.A, z, normalize_basepoint(l1.A, z), l1.z));

    const NormalForm l0 = normal_form_L0();
    CHECK(orbits_match(l0.A, z, normalize_basepoint(l0.A, z), l0.z));

    const NormalForm dg = normal_form_diag(RatFunc(2));
    CHECK(orbits_match(dg.A, z, normalize_basepoint(dg.A, z), dg.z));

    const NormalForm rn = normal_form_rnc();
    CHECK(orbits_match(rn.A, z, normalize_basepoint(rn.A, z), rn.z));

    const NormalForm sh = normal_form_rnc_shift();
    CHECK(orbits_match(sh.A, z, normalize_basepoint(sh.A, z), sh.z));

    // Symbolic member of the diagonal family.
    const NormalForm sy = normal_form_diag(RatFunc::variable("r"));
    CHECK(orbits_match(sy.A, z, normalize_basepoint(sy.A, z), sy.z));
}

TEST_CASE("basepoint normalization needs the open orbit") {
    CHECK_THROWS_WITH_AS(normalize_basepoint(normal_form_L1().A, vec4(1, 0, 1, 1)),
                         "basepoint is outside the open orbit", calc_error);
    CHECK_THROWS_WITH_AS(normalize_basepoint(normal_form_L0().A, vec4(1, 1, 0, 1)),
                         "basepoint is outside the open orbit", calc_error);
    CHECK_THROWS_WITH_AS(normalize_basepoint(normal_form_rnc_shift().A, vec4(0, 1, 1, 1)),
                         "basepoint is outside the open orbit", calc_error);
    CHECK_THROWS_WITH_AS(normalize_basepoint(diag4(2), vec4(1, 1, 0, 1)),
                         "basepoint is outside the open orbit", calc_error);
    // The second slot of L0 may vanish: the orbit is still open there.
    CHECK(orbits_match(normal_form_L0().A, vec4(1, 0, 1, 1),
                       normalize_basepoint(normal_form_L0().A, vec4(1, 0, 1, 1)),
                       normal_form_L0().z));
    CHECK_THROWS_WITH_AS(normalize_basepoint(normal_form_L1().A.transpose(), ones()),
                         "non-catalog matrix", calc_error);
}

TEST_CASE("symmetry dimensions of the flat models") {
    const NormalForm l0 = normal_form_L0();
    CHECK(aut_dimension(l0.A, l0.z, l0.sigma) == 2);
    const NormalForm l1 = normal_form_L1();
    CHECK(aut_dimension(l1.A, l1.z, l1.sigma) == 2);
    const NormalForm dg = normal_form_diag(RatFunc(2));
    CHECK(aut_dimension(dg.A, dg.z, dg.sigma) == 2);
    const NormalForm sy = normal_form_diag(RatFunc::variable("r"));
    CHECK(aut_dimension(sy.A, sy.z, sy.sigma) == 2);
    // The dimension jumps on the rational normal curve.
    const NormalForm rn = normal_form_rnc();
    CHECK(aut_dimension(rn.A, rn.z, rn.sigma) == 4);
    const NormalForm sh = normal_form_rnc_shift();
    CHECK(aut_dimension(sh.A, sh.z, sh.sigma) == 4);
}

TEST_CASE("rolling ratios") {
    CHECK(rolling_class(Rat(3)).kind == CurveKind::RationalNormal);
    CHECK(rolling_class(Rat(1, 3)).kind == CurveKind::RationalNormal);
    const CurveClass two = rolling_class(Rat(2));
    CHECK(two.kind == CurveKind::Lr2);
    CHECK(*two.invariant_cls == RatFunc(Rat(-1, 7)));
    CHECK(*two.r_squared == 4);
    const CurveClass half = rolling_class(Rat(1, 2));
    CHECK(half.kind == CurveKind::Lr2);
    CHECK(*half.invariant_cls == RatFunc(Rat(-1, 7)));
    CHECK(*half.r_squared == Rat(1, 4));
    const CurveClass even = rolling_class(Rat(1));
    CHECK(even.kind == CurveKind::L1);
    CHECK(*even.invariant_cls == RatFunc(Rat(-1, 16)));
    CHECK_THROWS_WITH_AS(rolling_class(Rat(0)), "radius ratio must be nonzero", calc_error);
}

TEST_CASE("admissibility is sensitive to the chosen structure") {
    const NormalForm dg = normal_form_diag(RatFunc::variable("r"));
    CHECK(admissible(dg.A, vec4(1, 2, 3, 6), dg.sigma));
    CHECK_FALSE(admissible(dg.A, vec4(2, 3, 5, 7), dg.sigma)); // off the quadric cone
    CHECK_FALSE(admissible(dg.A, vec4(1, 2, 3, 6), normal_form_L0().sigma));
}

TEST_CASE("classification is stable under conjugation and rescaling") {
    const std::vector<NormalForm> cat = {normal_form_L0(), normal_form_L1(),
                                         normal_form_diag(RatFunc(2)), normal_form_rnc(),
                                         normal_form_rnc_shift()};
    std::mt19937 rng(4160);
    std::uniform_int_distribution<int> entry(-5, 5);
    int done = 0;
    while (done < 20) {
        MatF p(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) p.at(i, j) = RatFunc(entry(rng));
        if (rank(p) < 4) continue;
        const NormalForm& nf = cat[static_cast<std::size_t>(done) % cat.size()];
        const CurveClass base = classify(nf.A, nf.z);
        const CurveClass moved = classify(p * nf.A * inverse(p), p.apply(nf.z));
        CHECK(moved.kind == base.kind);
        CHECK(moved.invariant_cls == base.invariant_cls);
        CHECK(moved.r_squared == base.r_squared);
        ++done;
    }
    for (const Rat& k : {Rat(2), Rat(-3), Rat(1, 5)}) {
        for (const NormalForm& nf : cat) {
            const CurveClass base = classify(nf.A, nf.z);
            const CurveClass scaled = classify(nf.A.scaled(RatFunc(k)), nf.z);
            CHECK(scaled.kind == base.kind);
            CHECK(scaled.invariant_cls == base.invariant_cls);
        }
    }
}
