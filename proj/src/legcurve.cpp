#include "legode/legcurve.hpp"

#include "legode/common.hpp"

#include <array>
#include <utility>

namespace legode {

namespace {

const std::array<std::pair<int, int>, 6> kSkewPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

MatF mat4(const std::array<std::array<long, 4>, 4>& e) {
    MatF m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = RatFunc(e[i][j]);
    return m;
}

VecF ones4() { return VecF(4, RatFunc(1)); }

void require_curve_data(const MatF& a, const VecF& z) {
    if (a.rows() != 4 || a.cols() != 4 || z.size() != 4)
        throw calc_error("bad_input", "expected a 4x4 matrix and a 4-vector");
}

bool is_diagonal(const MatF& a) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j && !a.at(i, j).is_zero()) return false;
    return true;
}

bool is_lower_shift(const MatF& a) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const RatFunc want = i == j + 1 ? RatFunc(1) : RatFunc();
            if (a.at(i, j) != want) return false;
        }
    return true;
}

std::vector<ExpPoly> orbit_derivative(const std::vector<ExpPoly>& g) {
    std::vector<ExpPoly> gd;
    gd.reserve(g.size());
    for (const auto& c : g) gd.push_back(c.derivative());
    return gd;
}

ExpPoly sigma_pairing(const MatF& sigma, const std::vector<ExpPoly>& g,
                      const std::vector<ExpPoly>& gd) {
    ExpPoly out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!sigma.at(i, j).is_zero()) out += (g[i] * gd[j]).scaled(sigma.at(i, j));
    return out;
}

/* Coefficient of the skew unknown s_{pq} (p < q) in the matrix entry S_{ij}. */
int skew_coef(int i, int j, int p, int q) {
    if (i == p && j == q) return 1;
    if (i == q && j == p) return -1;
    return 0;
}

Rat chosen_root(const Rat& icls) {
    const Rat a2 = 1 - 9 * icls;
    const Rat a1 = 2 + 82 * icls;
    const Rat disc = a1 * a1 - 4 * a2 * a2;
    if (!rat_is_square(disc)) return Rat(); // caller checks squareness first
    const Rat s = rat_sqrt(disc);
    const Rat x1 = (-a1 + s) / (2 * a2);
    const Rat x2 = (-a1 - s) / (2 * a2);
    const Rat ax1 = abs(x1), ax2 = abs(x2);
    return ax1 >= ax2 ? x1 : x2;
}

} // namespace

std::string curve_kind_name(CurveKind k) {
    switch (k) {
    case CurveKind::RationalNormal: return "RationalNormal";
    case CurveKind::L0: return "L0";
    case CurveKind::L1: return "L1";
    case CurveKind::Lr2: return "Lr2";
    }
    throw calc_error("internal", "unknown curve kind");
}

NormalForm normal_form_L0() {
    NormalForm nf;
    nf.A = mat4({{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}}});
    nf.sigma = mat4({{{0, 0, 0, 1}, {0, 0, -2, 0}, {0, 2, 0, 0}, {-1, 0, 0, 0}}});
    nf.z = ones4();
    return nf;
}

NormalForm normal_form_L1() {
    NormalForm nf;
    nf.A = mat4({{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}}});
    nf.sigma = mat4({{{0, 0, 0, 1}, {0, 0, -1, -1}, {0, 1, 0, 0}, {-1, 1, 0, 0}}});
    nf.z = ones4();
    return nf;
}

NormalForm normal_form_diag(const RatFunc& r) {
    NormalForm nf;
    nf.A = MatF(4, 4);
    nf.A.at(0, 0) = r;
    nf.A.at(1, 1) = RatFunc(1);
    nf.A.at(2, 2) = RatFunc(-1);
    nf.A.at(3, 3) = -r;
    nf.sigma = MatF(4, 4);
    nf.sigma.at(0, 3) = RatFunc(1);
    nf.sigma.at(1, 2) = -r;
    nf.sigma.at(2, 1) = r;
    nf.sigma.at(3, 0) = RatFunc(-1);
    nf.z = ones4();
    return nf;
}

NormalForm normal_form_rnc() { return normal_form_diag(RatFunc(3)); }

NormalForm normal_form_rnc_shift() {
    NormalForm nf;
    nf.A = MatF(4, 4);
    for (int i = 1; i < 4; ++i) nf.A.at(i, i - 1) = RatFunc(1);
    nf.sigma = mat4({{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}});
    nf.z = VecF(4);
    nf.z[0] = RatFunc(1);
    return nf;
}

bool check_star(const MatF& a, const VecF& z) {
    require_curve_data(a, z);
    MatF krylov(4, 4);
    VecF v = z;
    for (int j = 0; j < 4; ++j) {
        for (int i = 0; i < 4; ++i) krylov.at(i, j) = v[static_cast<std::size_t>(i)];
        if (j < 3) v = a.apply(v);
    }
    return rank(krylov) == 4;
}

bool admissible(const MatF& a, const VecF& z, const MatF& sigma) {
    if (!check_star(a, z)) return false;
    const auto g = exp_orbit(a, z);
    return sigma_pairing(sigma, g, orbit_derivative(g)).is_zero();
}

MatF compatible_sigma(const MatF& a, const VecF& z) {
    require_curve_data(a, z);

    // The pairing of the orbit with its velocity is constant in t once the
    // matrix condition holds, so the orbit condition reduces to its value at
    // the basepoint and the whole system is linear over the coefficient field.
    MatF cond(17, 6);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const int r = 4 * i + j;
            for (int u = 0; u < 6; ++u) {
                const auto [p, q] = kSkewPairs[static_cast<std::size_t>(u)];
                RatFunc c;
                for (int k = 0; k < 4; ++k) {
                    const int right = skew_coef(k, j, p, q);
                    if (right == 1) c += a.at(k, i);
                    if (right == -1) c -= a.at(k, i);
                    const int left = skew_coef(i, k, p, q);
                    if (left == 1) c += a.at(k, j);
                    if (left == -1) c -= a.at(k, j);
                }
                cond.at(r, u) = c;
            }
        }
    const VecF az = a.apply(z);
    for (int u = 0; u < 6; ++u) {
        const auto [p, q] = kSkewPairs[static_cast<std::size_t>(u)];
        const auto pp = static_cast<std::size_t>(p);
        const auto qq = static_cast<std::size_t>(q);
        cond.at(16, u) = z[pp] * az[qq] - z[qq] * az[pp];
    }

    const auto basis = nullspace(cond);
    if (basis.empty())
        throw calc_error("no_compatible_sigma",
                         "no symplectic structure is compatible with the curve");
    if (basis.size() > 1)
        throw calc_error("ambiguous_sigma", "compatible symplectic structure is not unique");

    MatF s(4, 4);
    for (int u = 0; u < 6; ++u) {
        const auto [p, q] = kSkewPairs[static_cast<std::size_t>(u)];
        s.at(p, q) = basis[0][static_cast<std::size_t>(u)];
        s.at(q, p) = -basis[0][static_cast<std::size_t>(u)];
    }
    if (rank(s) < 4)
        throw calc_error("no_compatible_sigma",
                         "compatible structure is degenerate");
    RatFunc pivot = s.at(0, 3);
    if (pivot.is_zero()) {
        for (const auto& [p, q] : kSkewPairs)
            if (!s.at(p, q).is_zero()) {
                pivot = s.at(p, q);
                break;
            }
    }
    return s.scaled(pivot.inverse());
}

CurveClass classify(const MatF& a, const VecF& z) {
    require_curve_data(a, z);
    if (!check_star(a, z))
        throw calc_error("degenerate_curve", "basepoint is not cyclic for the matrix");
    compatible_sigma(a, z);

    const PolyInS f = charpoly(a);
    if (!f.at(3).is_zero() || !f.at(1).is_zero())
        throw calc_error("internal", "characteristic polynomial is not even");

    return class_from_invariant(class_invariant_from_charpoly(f.at(2), f.at(0)));
}

CurveClass class_from_invariant(const std::optional<RatFunc>& icls) {
    CurveClass cls;
    if (!icls) {
        cls.kind = CurveKind::RationalNormal;
        cls.rep = normal_form_rnc();
        return cls;
    }
    cls.invariant_cls = *icls;
    if (!icls->is_constant()) {
        cls.kind = CurveKind::Lr2;
        cls.rep = normal_form_diag(RatFunc::variable("r"));
        return cls;
    }

    const Rat iv = icls->as_rat();
    if (iv == Rat(1, 9)) {
        cls.kind = CurveKind::L0;
        cls.rep = normal_form_L0();
        return cls;
    }
    if (iv == Rat(-1, 16)) {
        cls.kind = CurveKind::L1;
        cls.rep = normal_form_L1();
        return cls;
    }

    cls.kind = CurveKind::Lr2;
    const Rat a2 = 1 - 9 * iv;
    const Rat a1 = 2 + 82 * iv;
    if (rat_is_square(a1 * a1 - 4 * a2 * a2)) {
        const Rat x = chosen_root(iv);
        if (x == 9 || x == Rat(1, 9))
            throw calc_error("internal", "recovered ratio collides with the rational normal curve");
        cls.r_squared = x;
        cls.rep = rat_is_square(x) ? normal_form_diag(RatFunc(rat_sqrt(x)))
                                   : normal_form_diag(RatFunc::variable("r"));
    } else {
        cls.rep = normal_form_diag(RatFunc::variable("r"));
    }
    return cls;
}

bool equivalent(const MatF& a1, const VecF& z1, const MatF& a2, const VecF& z2) {
    const CurveClass c1 = classify(a1, z1);
    const CurveClass c2 = classify(a2, z2);
    if (c1.kind != c2.kind) return false;
    if (c1.invariant_cls.has_value() != c2.invariant_cls.has_value()) return false;
    return !c1.invariant_cls || *c1.invariant_cls == *c2.invariant_cls;
}

bool equivalent_r2(const Rat& a, const Rat& b) {
    const auto into_unit_exterior = [](const Rat& x) -> Rat {
        if (x != 0 && abs(x) < 1) return Rat(1) / x;
        return x;
    };
    return into_unit_exterior(a) == into_unit_exterior(b);
}

MatF normalize_basepoint(const MatF& a, const VecF& z) {
    require_curve_data(a, z);
    const auto need_nonzero = [&](std::initializer_list<int> idx) {
        for (int i : idx)
            if (z[static_cast<std::size_t>(i)].is_zero())
                throw calc_error("degenerate_curve", "basepoint is outside the open orbit");
    };

    MatF p(4, 4);
    if (a == normal_form_L1().A) {
        need_nonzero({1, 3});
        p.at(0, 0) = z[1];
        p.at(0, 1) = z[0] - z[1];
        p.at(1, 1) = z[1];
        p.at(2, 2) = z[3];
        p.at(2, 3) = z[2] - z[3];
        p.at(3, 3) = z[3];
        return p;
    }
    if (a == normal_form_L0().A) {
        need_nonzero({0, 2, 3});
        p.at(0, 0) = z[0];
        p.at(1, 1) = z[2];
        p.at(1, 2) = z[1] - z[2];
        p.at(2, 2) = z[2];
        p.at(3, 3) = z[3];
        return p;
    }
    if (is_lower_shift(a)) {
        need_nonzero({0});
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j <= i; ++j) p.at(i, j) = z[static_cast<std::size_t>(i - j)];
        return p;
    }
    if (is_diagonal(a)) {
        need_nonzero({0, 1, 2, 3});
        for (int i = 0; i < 4; ++i) p.at(i, i) = z[static_cast<std::size_t>(i)];
        return p;
    }
    throw calc_error("non_catalog", "non-catalog matrix");
}

int aut_dimension(const MatF& a, const VecF& z, const MatF& sigma) {
    require_curve_data(a, z);
    const auto g = exp_orbit(a, z);
    const auto gd = orbit_derivative(g);

    std::vector<std::vector<ExpPoly>> rows;
    rows.reserve(20);

    /* u^T sigma + sigma u - lambda sigma = 0, unknowns u_{ab} then lambda. */
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::vector<ExpPoly> row(17);
            for (int ai = 0; ai < 4; ++ai)
                for (int b = 0; b < 4; ++b) {
                    RatFunc c;
                    if (b == i) c += sigma.at(ai, j);
                    if (b == j) c += sigma.at(i, ai);
                    if (!c.is_zero()) row[static_cast<std::size_t>(ai * 4 + b)] = ExpPoly::constant(c);
                }
            if (!sigma.at(i, j).is_zero())
                row[16] = ExpPoly::constant(-sigma.at(i, j));
            rows.push_back(std::move(row));
        }

    /* u gamma wedge gamma wedge gamma' = 0, one condition per basis 3-form. */
    const std::array<std::array<int, 3>, 4> triples = {
        {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
    for (const auto& m : triples) {
        std::vector<ExpPoly> row(17);
        for (int pos = 0; pos < 3; ++pos) {
            const int i = m[static_cast<std::size_t>(pos)];
            const int u = m[static_cast<std::size_t>(pos == 0 ? 1 : 0)];
            const int v = m[static_cast<std::size_t>(pos == 2 ? 1 : 2)];
            ExpPoly minor = g[u] * gd[v] - g[v] * gd[u];
            if (pos == 1) minor = -minor;
            for (int j = 0; j < 4; ++j)
                row[static_cast<std::size_t>(i * 4 + j)] += minor * g[j];
        }
        rows.push_back(std::move(row));
    }

    return static_cast<int>(ep_nullspace(rows, 17).size());
}

CurveClass rolling_class(const Rat& rho) {
    if (rho == 0) throw calc_error("bad_input", "radius ratio must be nonzero");
    const Rat x = rho * rho;
    if (x == 9 || x == Rat(1) / Rat(9)) return class_from_invariant(std::nullopt);
    const Rat num = (x + 1) * (x + 1);
    const Rat den = (x - 9) * (x * 9 - 1);
    const Rat val = num / den;
    CurveClass cls = class_from_invariant(RatFunc(val));
    // The ratio fixes the representative, so keep r^2 = rho^2 rather than the
    // canonical root recovered from the invariant.
    if (cls.kind == CurveKind::Lr2) cls.r_squared = x;
    return cls;
}

} // namespace legode
