#include "legode/exppoly.hpp"

#include "legode/common.hpp"

#include <cassert>

namespace legode {

RatFunc ExpKey::rate() const {
    RatFunc f(c1);
    if (cr != 0) f += RatFunc(cr) * RatFunc::variable("r");
    return f;
}

ExpPoly ExpPoly::term(const ExpKey& k, int power, const RatFunc& coef) {
    ExpPoly p;
    p.put(k, power, coef);
    return p;
}

ExpPoly ExpPoly::constant(const RatFunc& c) {
    return term(ExpKey{Rat(0), Rat(0)}, 0, c);
}

void ExpPoly::put(const ExpKey& k, int power, const RatFunc& coef) {
    if (coef.is_zero()) return;
    TPoly& tp = parts_[k];
    RatFunc& slot = tp[power];
    slot += coef;
    if (slot.is_zero()) {
        tp.erase(power);
        if (tp.empty()) parts_.erase(k);
    }
}

ExpPoly ExpPoly::operator-() const {
    ExpPoly r;
    for (const auto& [k, tp] : parts_)
        for (const auto& [pw, cf] : tp) r.put(k, pw, -cf);
    return r;
}

ExpPoly ExpPoly::operator+(const ExpPoly& o) const {
    ExpPoly r(*this);
    for (const auto& [k, tp] : o.parts_)
        for (const auto& [pw, cf] : tp) r.put(k, pw, cf);
    return r;
}

ExpPoly ExpPoly::operator-(const ExpPoly& o) const {
    ExpPoly r(*this);
    for (const auto& [k, tp] : o.parts_)
        for (const auto& [pw, cf] : tp) r.put(k, pw, -cf);
    return r;
}

ExpPoly ExpPoly::operator*(const ExpPoly& o) const {
    ExpPoly r;
    for (const auto& [k1, tp1] : parts_)
        for (const auto& [k2, tp2] : o.parts_) {
            ExpKey k{k1.cr + k2.cr, k1.c1 + k2.c1};
            for (const auto& [p1, c1] : tp1)
                for (const auto& [p2, c2] : tp2) r.put(k, p1 + p2, c1 * c2);
        }
    return r;
}

ExpPoly ExpPoly::scaled(const RatFunc& f) const {
    ExpPoly r;
    for (const auto& [k, tp] : parts_)
        for (const auto& [pw, cf] : tp) r.put(k, pw, cf * f);
    return r;
}

ExpPoly ExpPoly::derivative() const {
    ExpPoly r;
    for (const auto& [k, tp] : parts_) {
        RatFunc rate = k.rate();
        for (const auto& [pw, cf] : tp) {
            if (pw > 0) r.put(k, pw - 1, cf * RatFunc(Rat(pw)));
            if (!rate.is_zero()) r.put(k, pw, cf * rate);
        }
    }
    return r;
}

ExpPoly ExpPoly::specialize_r(const Rat& rv) const {
    int rid = var_id("r");
    RatFunc rval{rv};
    ExpPoly out;
    for (const auto& [k, tp] : parts_) {
        ExpKey nk{Rat(0), k.cr * rv + k.c1};
        for (const auto& [pw, cf] : tp)
            out.put(nk, pw, cf.depends_on(rid) ? cf.substitute(rid, rval) : cf);
    }
    return out;
}

namespace {

/* Splits an affine-in-r rational function into (cr, c1); anything else is
 * outside the catalog of exponents the closed forms cover. */
ExpKey affine_key(const RatFunc& f) {
    if (f.is_zero()) return ExpKey{Rat(0), Rat(0)};
    if (!f.is_poly()) throw calc_error("non_catalog", "non-catalog matrix");
    int rid = var_id("r");
    const MPoly& p = f.num();
    for (int v : p.vars_present())
        if (v != rid) throw calc_error("non_catalog", "non-catalog matrix");
    if (p.degree_in(rid) > 1) throw calc_error("non_catalog", "non-catalog matrix");
    ExpKey k{Rat(0), Rat(0)};
    for (const auto& t : p.terms()) {
        if (t.first.e.empty())
            k.c1 = t.second;
        else
            k.cr = t.second;
    }
    return k;
}

} // namespace

std::vector<ExpPoly> exp_orbit(const MatF& a, const VecF& z) {
    assert(a.rows() == a.cols());
    int n = a.rows();
    assert(static_cast<int>(z.size()) == n);
    MatF diag(n, n), nil(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            (i == j ? diag.at(i, j) : nil.at(i, j)) = a.at(i, j);
    if (!nil.pow(n).is_zero() || !(diag * nil - nil * diag).is_zero())
        throw calc_error("non_catalog", "non-catalog matrix");
    std::vector<ExpKey> keys;
    keys.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) keys.push_back(affine_key(diag.at(i, i)));

    std::vector<ExpPoly> out(static_cast<std::size_t>(n));
    VecF nkz = z;
    Rat fact(1);
    for (int k = 0; k < n; ++k) {
        if (k > 0) {
            nkz = nil.apply(nkz);
            fact *= k;
        }
        RatFunc inv_fact{Rat(1) / fact};
        for (int i = 0; i < n; ++i) {
            const RatFunc& c = nkz[static_cast<std::size_t>(i)];
            if (!c.is_zero())
                out[static_cast<std::size_t>(i)] +=
                    ExpPoly::term(keys[static_cast<std::size_t>(i)], k, c * inv_fact);
        }
    }
    return out;
}

std::vector<ExpPoly> exp_orbit_conj(const MatF& a, const VecF& z, const MatF& p) {
    MatF pinv = inverse(p);
    std::vector<ExpPoly> inner = exp_orbit(pinv * a * p, pinv.apply(z));
    int n = a.rows();
    std::vector<ExpPoly> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (p.at(i, j).is_zero()) continue;
            out[static_cast<std::size_t>(i)] +=
                inner[static_cast<std::size_t>(j)].scaled(p.at(i, j));
        }
    return out;
}

std::vector<VecF> ep_nullspace(const std::vector<std::vector<ExpPoly>>& rows, int unknowns) {
    std::vector<VecF> mrows;
    for (const auto& cond : rows) {
        assert(static_cast<int>(cond.size()) == unknowns);
        std::map<std::pair<ExpKey, int>, VecF> buckets;
        for (int u = 0; u < unknowns; ++u)
            for (const auto& [k, tp] : cond[static_cast<std::size_t>(u)].parts())
                for (const auto& [pw, cf] : tp) {
                    VecF& row = buckets[{k, pw}];
                    if (row.empty()) row.assign(static_cast<std::size_t>(unknowns), RatFunc());
                    row[static_cast<std::size_t>(u)] = cf;
                }
        for (auto& kv : buckets) mrows.push_back(std::move(kv.second));
    }
    if (mrows.empty()) {
        std::vector<VecF> basis;
        for (int u = 0; u < unknowns; ++u) {
            VecF v(static_cast<std::size_t>(unknowns));
            v[static_cast<std::size_t>(u)] = RatFunc(1);
            basis.push_back(std::move(v));
        }
        return basis;
    }
    return nullspace(MatF::from_rows(mrows));
}

} // namespace legode
