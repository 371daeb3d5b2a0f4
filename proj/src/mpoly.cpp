#include "legode/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <cstdint>
#include <iterator>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace legode {

namespace {

struct VarRegistry {
    std::mutex mu;
    std::vector<std::string> names;
    std::unordered_map<std::string, int> ids;
};

VarRegistry& registry() {
    static VarRegistry r;
    return r;
}

} // namespace

int var_id(const std::string& name) {
    auto& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    auto it = r.ids.find(name);
    if (it != r.ids.end()) return it->second;
    int id = static_cast<int>(r.names.size());
    r.names.push_back(name);
    r.ids.emplace(name, id);
    return id;
}

const std::string& var_name(int id) {
    auto& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    return r.names.at(static_cast<std::size_t>(id));
}

int Mono::degree() const {
    int d = 0;
    for (const auto& p : e) d += p.second;
    return d;
}

int Mono::exp_of(int id) const {
    for (const auto& p : e)
        if (p.first == id) return p.second;
    return 0;
}

Mono Mono::var(int id, int exp) {
    Mono m;
    if (exp > 0) m.e.emplace_back(id, exp);
    return m;
}

Mono Mono::times(const Mono& o) const {
    Mono r;
    std::size_t i = 0, j = 0;
    while (i < e.size() || j < o.e.size()) {
        if (j == o.e.size() || (i < e.size() && e[i].first < o.e[j].first)) {
            r.e.push_back(e[i++]);
        } else if (i == e.size() || o.e[j].first < e[i].first) {
            r.e.push_back(o.e[j++]);
        } else {
            r.e.emplace_back(e[i].first, e[i].second + o.e[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

std::optional<Mono> Mono::over(const Mono& o) const {
    Mono r;
    std::size_t i = 0;
    for (const auto& p : o.e) {
        while (i < e.size() && e[i].first < p.first) r.e.push_back(e[i++]);
        if (i == e.size() || e[i].first != p.first || e[i].second < p.second)
            return std::nullopt;
        if (e[i].second > p.second) r.e.emplace_back(p.first, e[i].second - p.second);
        ++i;
    }
    while (i < e.size()) r.e.push_back(e[i++]);
    return r;
}

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    /* Lex tie-break, lower var id more significant. */
    std::size_t i = 0, j = 0;
    while (i < a.e.size() || j < b.e.size()) {
        int ia = i < a.e.size() ? a.e[i].first : INT32_MAX;
        int ib = j < b.e.size() ? b.e[j].first : INT32_MAX;
        int id = std::min(ia, ib);
        int ea = ia == id ? a.e[i].second : 0;
        int eb = ib == id ? b.e[j].second : 0;
        if (ea != eb) return ea < eb;
        if (ia == id) ++i;
        if (ib == id) ++j;
    }
    return false;
}

MPoly MPoly::constant(const Rat& c) {
    MPoly p;
    if (c != 0) p.terms_.emplace(Mono::one(), c);
    return p;
}

MPoly MPoly::variable(const std::string& name, int exp) {
    MPoly p;
    p.terms_.emplace(Mono::var(var_id(name), exp), Rat(1));
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.e.empty());
}

Rat MPoly::as_rat() const {
    if (terms_.empty()) return Rat(0);
    assert(is_constant());
    return terms_.begin()->second;
}

void MPoly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int MPoly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
}

int MPoly::degree_in(int id) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.exp_of(id));
    return d;
}

bool MPoly::depends_on(int id) const {
    for (const auto& t : terms_)
        if (t.first.exp_of(id) > 0) return true;
    return false;
}

std::vector<int> MPoly::vars_present() const {
    std::vector<int> v;
    for (const auto& t : terms_)
        for (const auto& p : t.first.e) v.push_back(p.first);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

const Mono& MPoly::leading_mono() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

const Rat& MPoly::leading_coef() const {
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& t : terms_) r.terms_.emplace(t.first, -t.second);
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r(*this);
    r += o;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r(*this);
    r -= o;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& t : o.terms_) add_term(t.first, t.second);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& t : o.terms_) add_term(t.first, -t.second);
    return *this;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            r.add_term(a.first.times(b.first), a.second * b.second);
    return r;
}

MPoly MPoly::scaled(const Rat& c) const {
    if (c == 0) return MPoly();
    MPoly r;
    for (const auto& t : terms_) r.terms_.emplace(t.first, t.second * c);
    return r;
}

MPoly MPoly::pow(int e) const {
    assert(e >= 0);
    MPoly acc = MPoly::constant(Rat(1));
    MPoly base(*this);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

MPoly MPoly::derivative(int id) const {
    MPoly r;
    for (const auto& t : terms_) {
        int k = t.first.exp_of(id);
        if (k == 0) continue;
        Mono m;
        for (const auto& p : t.first.e) {
            if (p.first == id) {
                if (p.second > 1) m.e.emplace_back(p.first, p.second - 1);
            } else {
                m.e.push_back(p);
            }
        }
        r.add_term(m, t.second * k);
    }
    return r;
}

std::vector<MPoly> MPoly::coeffs_in(int id) const {
    if (terms_.empty()) return {};
    std::vector<MPoly> cs(static_cast<std::size_t>(degree_in(id)) + 1);
    for (const auto& t : terms_) {
        int k = t.first.exp_of(id);
        Mono m;
        for (const auto& p : t.first.e)
            if (p.first != id) m.e.push_back(p);
        cs[static_cast<std::size_t>(k)].add_term(m, t.second);
    }
    return cs;
}

MPoly MPoly::from_coeffs_in(int id, const std::vector<MPoly>& cs) {
    MPoly r;
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k].is_zero()) continue;
        MPoly xk;
        xk.terms_.emplace(Mono::var(id, static_cast<int>(k)), Rat(1));
        r += cs[k] * xk;
    }
    return r;
}

MPoly MPoly::subst_poly(int id, const MPoly& val) const {
    if (!depends_on(id)) return *this;
    auto cs = coeffs_in(id);
    MPoly r;
    for (std::size_t k = cs.size(); k-- > 0;) {
        r = r * val + cs[k];
    }
    return r;
}

MPoly MPoly::monic() const {
    if (terms_.empty()) return *this;
    return scaled(Rat(1) / leading_coef());
}

Rat MPoly::integer_normalizer() const {
    if (terms_.empty()) return Rat(1);
    mpz_class l(1), g(0);
    for (const auto& t : terms_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den().get_mpz_t());
    for (const auto& t : terms_) {
        mpz_class n = t.second.get_num() * (l / t.second.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rat scale(l, g);
    scale.canonicalize();
    if (leading_coef() * scale < 0) scale = -scale;
    return scale;
}

namespace {

/* Univariate view in variable x with MPoly coefficients, for the PRS. */
using UPoly = std::vector<MPoly>; // ascending, no trailing zeros

UPoly uview(const MPoly& p, int x) {
    UPoly u = p.coeffs_in(x);
    while (!u.empty() && u.back().is_zero()) u.pop_back();
    return u;
}

int udeg(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

bool uzero(const UPoly& u) { return u.empty(); }

void utrim(UPoly& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

UPoly uscale(const UPoly& u, const MPoly& c) {
    UPoly r;
    r.reserve(u.size());
    for (const auto& m : u) r.push_back(m * c);
    utrim(r);
    return r;
}

UPoly usub(const UPoly& a, const UPoly& b) {
    UPoly r = a;
    if (b.size() > r.size()) r.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    utrim(r);
    return r;
}

UPoly ushift(const UPoly& u, int k) {
    if (uzero(u)) return u;
    UPoly r(u.size() + static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < u.size(); ++i) r[i + static_cast<std::size_t>(k)] = u[i];
    return r;
}

MPoly urebuild(const UPoly& u, int x) {
    return MPoly::from_coeffs_in(x, u);
}

UPoly udivexact(const UPoly& u, const MPoly& d) {
    UPoly r;
    r.reserve(u.size());
    for (const auto& c : u) {
        auto q = mp_div_exact(c, d);
        assert(q.has_value());
        r.push_back(*q);
    }
    return r;
}

/* Pseudo-remainder of F by G (both nonzero, deg F >= deg G):
 * lc(G)^(degF-degG+1) * F = Q*G + R with deg R < deg G. */
UPoly uprem(UPoly F, const UPoly& G) {
    const MPoly d = G.back();
    int e = udeg(F) - udeg(G) + 1;
    while (!uzero(F) && udeg(F) >= udeg(G)) {
        int k = udeg(F) - udeg(G);
        UPoly sub = uscale(ushift(G, k), F.back());
        F = usub(uscale(F, d), sub);
        --e;
    }
    MPoly mult = d.pow(e > 0 ? e : 0);
    return uscale(F, mult);
}

MPoly content_of(const std::vector<MPoly>& cs) {
    MPoly g;
    for (const auto& c : cs) g = mp_gcd(g, c);
    return g;
}

/* Dense primitive PRS over Z for polynomials in a single variable; far
 * cheaper than the generic machinery, and the case the library hits most. */
MPoly uni_gcd(const MPoly& a, const MPoly& b, int x) {
    auto dense = [x](const MPoly& p) {
        std::vector<mpz_class> v(static_cast<std::size_t>(p.degree_in(x)) + 1);
        Rat u = p.integer_normalizer();
        for (const auto& t : p.terms()) {
            Rat c = t.second * u;
            v[static_cast<std::size_t>(t.first.exp_of(x))] = c.get_num();
        }
        return v;
    };
    auto strip = [](std::vector<mpz_class>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    auto make_primitive = [](std::vector<mpz_class>& v) {
        mpz_class g(0);
        for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g > 1)
            for (auto& c : v) c /= g;
    };
    std::vector<mpz_class> f = dense(a), g = dense(b);
    if (f.size() < g.size()) std::swap(f, g);
    while (!g.empty()) {
        /* pseudo-remainder of f by g */
        std::vector<mpz_class> r = f;
        const mpz_class& lg = g.back();
        while (r.size() >= g.size()) {
            mpz_class lr = r.back();
            for (auto& c : r) c *= lg;
            std::size_t off = r.size() - g.size();
            for (std::size_t i = 0; i < g.size(); ++i) r[off + i] -= lr * g[i];
            strip(r);
        }
        make_primitive(r);
        f = std::move(g);
        g = std::move(r);
    }
    MPoly res;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] != 0) res.add_term(Mono::var(x, static_cast<int>(i)), Rat(f[i]));
    return res.monic();
}

} // namespace

MPoly mp_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return MPoly::constant(Rat(1));

    std::vector<int> va = a.vars_present(), vb = b.vars_present();
    std::vector<int> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                          std::back_inserter(common));
    if (common.empty()) return MPoly::constant(Rat(1));
    if (va.size() == 1 && vb.size() == 1) return uni_gcd(a, b, common.front());

    int x = common.front();
    long best = LONG_MAX;
    for (int v : common) {
        long s = a.degree_in(v) + b.degree_in(v);
        if (s < best) {
            best = s;
            x = v;
        }
    }

    UPoly ua = uview(a, x), ub = uview(b, x);
    MPoly ca = content_of(ua), cb = content_of(ub);
    UPoly F = udivexact(ua, ca), G = udivexact(ub, cb);
    MPoly c = mp_gcd(ca, cb);
    if (udeg(F) < udeg(G)) std::swap(F, G);

    MPoly g = MPoly::constant(Rat(1)), h = MPoly::constant(Rat(1));
    for (;;) {
        int delta = udeg(F) - udeg(G);
        UPoly R = uprem(F, G);
        if (uzero(R)) break;
        if (udeg(R) == 0) {
            return c.monic();
        }
        MPoly divisor = g * h.pow(delta);
        F = std::move(G);
        G = udivexact(R, divisor);
        g = F.back();
        if (delta >= 1) {
            auto q = mp_div_exact(g.pow(delta), h.pow(delta - 1));
            assert(q.has_value());
            h = *q;
        }
    }
    MPoly pp = urebuild(udivexact(G, content_of(G)), x);
    return (c * pp).monic();
}

std::optional<MPoly> mp_div_exact(const MPoly& f, const MPoly& g) {
    assert(!g.is_zero());
    MPoly q;
    MPoly r = f;
    while (!r.is_zero()) {
        auto m = r.leading_mono().over(g.leading_mono());
        if (!m) return std::nullopt;
        Rat qc = r.leading_coef() / g.leading_coef();
        MPoly term;
        term.add_term(*m, qc);
        q += term;
        r -= term * g;
    }
    return q;
}

std::string mpoly_str(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& ts = p.terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        Rat c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? '-' : '+');
        }
        std::string vars;
        for (std::size_t i = 0; i < it->first.e.size(); ++i) {
            if (i) vars += '*';
            vars += var_name(it->first.e[i].first);
            if (it->first.e[i].second > 1)
                vars += "^" + std::to_string(it->first.e[i].second);
        }
        if (vars.empty()) {
            os << rat_str(c);
        } else if (c == 1) {
            os << vars;
        } else if (c.get_den() == 1) {
            os << c.get_num().get_str() << vars;
        } else {
            os << c.get_num().get_str() << vars << '/' << c.get_den().get_str();
        }
    }
    return os.str();
}

} // namespace legode
