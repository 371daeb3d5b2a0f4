#include "legode/ode4.hpp"

#include "legode/common.hpp"

#include <array>
#include <cmath>

namespace legode {

RatFunc Mobius::as_ratfunc() const {
    RatFunc t = RatFunc::variable("t");
    return (RatFunc(a) * t + RatFunc(b)) / (RatFunc(c) * t + RatFunc(d));
}

Mobius mobius_from_ratfunc(const RatFunc& lam) {
    int tid = var_id("t");
    auto linear = [tid](const MPoly& p, Rat& hi, Rat& lo) {
        hi = 0;
        lo = 0;
        if (p.degree_in(tid) > 1) return false;
        for (int v : p.vars_present())
            if (v != tid) return false;
        for (const auto& term : p.terms())
            (term.first.e.empty() ? lo : hi) = term.second;
        return true;
    };
    Mobius m;
    if (!linear(lam.num(), m.a, m.b) || !linear(lam.den(), m.c, m.d) || m.det() == 0)
        throw calc_error("unsupported_transform",
                         "reparameterization must be a nondegenerate Mobius map");
    return m;
}

ODE4 general_transform_ode(const ODE4& ode, const RatFunc& lambda, const RatFunc& mu) {
    int tid = var_id("t");
    Mobius m = mobius_from_ratfunc(lambda);
    if (mu.is_zero())
        throw calc_error("unsupported_transform", "scaling factor must be nonzero");

    RatFunc lp = lambda.derivative(tid);
    std::array<std::array<RatFunc, 5>, 5> A;
    A[0][0] = mu;
    for (int k = 0; k < 4; ++k)
        for (int j = 0; j <= k + 1; ++j) {
            RatFunc v = A[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].derivative(tid);
            if (j > 0) v += A[static_cast<std::size_t>(k)][static_cast<std::size_t>(j - 1)];
            A[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(j)] = v / lp;
        }

    std::array<RatFunc, 4> p = {ode.p0, ode.p1, ode.p2, ode.p3};
    std::array<RatFunc, 4> q;
    for (int j = 3; j >= 0; --j) {
        RatFunc s = A[4][static_cast<std::size_t>(j)] - A[4][4] * p[static_cast<std::size_t>(j)];
        for (int k = j + 1; k <= 3; ++k)
            s += q[static_cast<std::size_t>(k)] * A[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        q[static_cast<std::size_t>(j)] = -(s / A[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)]);
    }

    RatFunc linv = m.inverse().as_ratfunc();
    ODE4 out;
    out.p3 = q[3].substitute(tid, linv);
    out.p2 = q[2].substitute(tid, linv);
    out.p1 = q[1].substitute(tid, linv);
    out.p0 = q[0].substitute(tid, linv);
    return out;
}

RatFunc mobius_transform_q0(const RatFunc& q0, const Mobius& m) {
    int tid = var_id("t");
    RatFunc lam = m.as_ratfunc();
    RatFunc lp = lam.derivative(tid);
    return (q0 / lp.pow(4)).substitute(tid, m.inverse().as_ratfunc());
}

InvariantReport legendrian_invariants(const RatFunc& q0) {
    int tid = var_id("t");
    InvariantReport rep;
    rep.q0 = q0;
    if (q0.is_zero()) {
        rep.rnc = true;
        return rep;
    }
    RatFunc d1 = q0.derivative(tid);
    RatFunc d2 = d1.derivative(tid);
    rep.R = RatFunc(8) * q0 * d2 - RatFunc(9) * d1 * d1;
    rep.I_lit = rep.R * rep.R / (RatFunc(4096) * q0.pow(5));
    rep.I_cls = -rep.I_lit;
    return rep;
}

RatFunc lf_family_q0(const Rat& c2, const Rat& c0) {
    RatFunc t = RatFunc::variable("t");
    Rat n = Rat(-1600) * (Rat(9) * c2 * c2 - Rat(100) * c0);
    return RatFunc(n) / (t * t + RatFunc(Rat(40) * c2)).pow(4);
}

std::optional<RatFunc> class_invariant_from_charpoly(const RatFunc& c2, const RatFunc& c0) {
    RatFunc den = RatFunc(9) * c2 * c2 - RatFunc(100) * c0;
    if (den.is_zero()) return std::nullopt;
    return c2 * c2 / den;
}

std::vector<LfSample> numeric_lf_reduce(double c2, double c0, const std::vector<double>& ts) {
    if (c2 == 0.0)
        throw calc_error("already_lf", "already in Laguerre-Forsyth form");
    using C = Jet::C;
    C rate = std::sqrt(C(-c2 / 10.0));
    C amp = -2.0 * std::sqrt(C(-10.0 * c2));
    double fam = -1600.0 * (9.0 * c2 * c2 - 100.0 * c0);

    std::vector<LfSample> out;
    out.reserve(ts.size());
    for (double t0 : ts) {
        Jet t = Jet::variable(C(t0));
        Jet lam = jet_tanh(t.scaled(rate)).scaled(amp);
        Jet lp = lam.derivative();
        Jet mu = jet_pow32(lp);

        std::array<std::array<Jet, 5>, 5> A{};
        A[0][0] = mu;
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j <= k + 1; ++j) {
                Jet v = A[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].derivative();
                if (j > 0) v += A[static_cast<std::size_t>(k)][static_cast<std::size_t>(j - 1)];
                A[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(j)] = v / lp;
            }

        std::array<Jet, 4> p{};
        p[0] = Jet::constant(C(c0));
        p[2] = Jet::constant(C(c2));
        std::array<Jet, 4> q{};
        for (int j = 3; j >= 0; --j) {
            Jet s = A[4][static_cast<std::size_t>(j)] - A[4][4] * p[static_cast<std::size_t>(j)];
            for (int k = j + 1; k <= 3; ++k)
                s += q[static_cast<std::size_t>(k)] * A[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            q[static_cast<std::size_t>(j)] = -(s / A[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)]);
        }

        Jet base = lam * lam + Jet::constant(C(40.0 * c2));
        Jet pow2 = base * base;
        Jet target = Jet::constant(C(fam)) / (pow2 * pow2);

        LfSample s{};
        s.t = t0;
        s.r3 = std::abs(q[3].value());
        s.r2 = std::abs(q[2].value());
        s.r1 = std::abs(q[1].value());
        s.r0 = std::abs((q[0] - target).value());
        out.push_back(s);
    }
    return out;
}

} // namespace legode
