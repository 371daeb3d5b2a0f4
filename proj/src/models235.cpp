#include "legode/models235.hpp"

#include <cstddef>

#include "legode/common.hpp"
#include "legode/ode4.hpp"

namespace legode {

namespace {

std::vector<VecF> unit_vectors(int n, const std::vector<int>& idx) {
    std::vector<VecF> out;
    for (int k : idx) {
        VecF v(static_cast<std::size_t>(n), RatFunc());
        v[static_cast<std::size_t>(k)] = RatFunc(1);
        out.push_back(v);
    }
    return out;
}

int index_of(const FiltLieAlg& f, const std::string& name) {
    for (int i = 0; i < f.dim(); ++i)
        if (f.names[static_cast<std::size_t>(i)] == name) return i;
    throw calc_error("internal", "basis element " + name + " is missing");
}

std::vector<int> flag_dims(const std::vector<Span>& flags, int base) {
    std::vector<int> dims;
    for (const auto& s : flags) dims.push_back(s.dim() - base);
    return dims;
}

} // namespace

std::vector<Span> bracket_flag(const FiltLieAlg& f, const std::vector<VecF>& gens,
                               const std::vector<VecF>& modout, FlagKind kind,
                               int max_steps) {
    Span cur(f.dim());
    for (const auto& v : modout) cur.add(v);
    for (const auto& v : gens) cur.add(v);
    std::vector<Span> flags{cur};
    const std::vector<VecF> first = cur.basis();
    for (int s = 1; s < max_steps; ++s) {
        Span next = cur;
        const std::vector<VecF> left = kind == FlagKind::Weak ? first : cur.basis();
        bool grew = false;
        for (const auto& x : left)
            for (const auto& y : cur.basis())
                if (next.add(f.bracket_vec(x, y))) grew = true;
        if (!grew) break;
        flags.push_back(next);
        cur = next;
    }
    return flags;
}

std::vector<int> model_growth_dims(const Model235& m) {
    const std::vector<VecF> gens =
        unit_vectors(m.f.dim(), {index_of(m.f, "X1"), index_of(m.f, "X2")});
    const std::vector<VecF> mod = unit_vectors(m.f.dim(), m.isotropy);
    return flag_dims(bracket_flag(m.f, gens, mod, FlagKind::Derived),
                     static_cast<int>(m.isotropy.size()));
}

std::vector<int> model_lift_dims(const Model235& m) {
    const std::vector<VecF> mod = unit_vectors(m.f.dim(), m.lift_isotropy);
    return flag_dims(bracket_flag(m.f, {m.lift_e, m.lift_v}, mod, FlagKind::Weak),
                     static_cast<int>(m.lift_isotropy.size()));
}

MatF induced_generator(const Model235& m) {
    const int n = m.f.dim();
    std::vector<VecF> cols = m.quotient_basis;
    for (const auto& v : unit_vectors(n, m.lift_isotropy)) cols.push_back(v);
    cols.push_back(m.lift_e);

    std::vector<VecF> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (const auto& c : cols)
            rows[static_cast<std::size_t>(i)].push_back(c[static_cast<std::size_t>(i)]);
    const MatF basis = MatF::from_rows(rows);

    MatF out(4, 4);
    for (std::size_t j = 0; j < m.quotient_basis.size(); ++j) {
        const VecF w = m.f.bracket_vec(m.lift_e, m.quotient_basis[j]);
        const auto coords = solve_linear(basis, w);
        if (!coords)
            throw calc_error("internal", "quotient basis does not span the lift");
        for (int i = 0; i < 4; ++i)
            out.at(i, static_cast<int>(j)) = (*coords)[static_cast<std::size_t>(i)];
    }
    return out;
}

PolyInS model_charpoly(const Model235& m) { return charpoly(m.generator); }

RatFunc model_invariant(const Model235& m) {
    const PolyInS f = model_charpoly(m);
    const auto icls = class_invariant_from_charpoly(f.at(2), f.at(0));
    if (!icls)
        throw calc_error("internal", "model generator lies on the degenerate locus");
    return *icls;
}

CurveClass model_curve_class(const Model235& m) {
    return class_from_invariant(model_invariant(m));
}

namespace {

RatFunc subst_even_poly(const MPoly& p, int id, const RatFunc& square) {
    RatFunc acc;
    for (const auto& term : p.terms()) {
        int e = 0;
        Mono rest;
        for (const auto& pe : term.first.e) {
            if (pe.first == id)
                e = pe.second;
            else
                rest.e.push_back(pe);
        }
        if (e % 2 != 0)
            throw calc_error("bad_input",
                             "variable appears with an odd exponent");
        MPoly base;
        base.add_term(rest, term.second);
        acc += RatFunc(base) * square.pow(e / 2);
    }
    return acc;
}

} // namespace

RatFunc substitute_even(const RatFunc& f, const std::string& var, const RatFunc& square) {
    const int id = var_id(var);
    if (!f.depends_on(id)) return f;
    return subst_even_poly(f.num(), id, square) / subst_even_poly(f.den(), id, square);
}

} // namespace legode
