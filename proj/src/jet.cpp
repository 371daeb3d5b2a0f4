#include "legode/jet.hpp"

#include "legode/common.hpp"

#include <cmath>

namespace legode {

Jet Jet::constant(C c) {
    Jet f;
    f.a[0] = c;
    return f;
}

Jet Jet::variable(C t0) {
    Jet f;
    f.a[0] = t0;
    f.a[1] = 1.0;
    return f;
}

Jet Jet::operator-() const {
    Jet f;
    for (int k = 0; k < N; ++k) f.a[k] = -a[k];
    return f;
}

Jet Jet::operator+(const Jet& o) const {
    Jet f;
    for (int k = 0; k < N; ++k) f.a[k] = a[k] + o.a[k];
    return f;
}

Jet Jet::operator-(const Jet& o) const {
    Jet f;
    for (int k = 0; k < N; ++k) f.a[k] = a[k] - o.a[k];
    return f;
}

Jet Jet::operator*(const Jet& o) const {
    Jet f;
    for (int k = 0; k < N; ++k)
        for (int j = 0; j <= k; ++j) f.a[k] += a[j] * o.a[k - j];
    return f;
}

Jet Jet::operator/(const Jet& o) const { return *this * jet_inv(o); }

Jet Jet::scaled(C s) const {
    Jet f;
    for (int k = 0; k < N; ++k) f.a[k] = a[k] * s;
    return f;
}

Jet Jet::derivative() const {
    Jet f;
    for (int k = 0; k + 1 < N; ++k) f.a[k] = a[k + 1] * C(k + 1);
    return f;
}

Jet jet_inv(const Jet& f) {
    if (std::abs(f.a[0]) == 0.0)
        throw calc_error("division_by_zero", "jet has zero constant term");
    Jet g;
    g.a[0] = 1.0 / f.a[0];
    for (int k = 1; k < Jet::N; ++k) {
        Jet::C s = 0.0;
        for (int j = 1; j <= k; ++j) s += f.a[j] * g.a[k - j];
        g.a[k] = -s / f.a[0];
    }
    return g;
}

Jet jet_exp(const Jet& f) {
    Jet g;
    g.a[0] = std::exp(f.a[0]);
    for (int k = 1; k < Jet::N; ++k) {
        Jet::C s = 0.0;
        for (int j = 1; j <= k; ++j) s += static_cast<double>(j) * f.a[j] * g.a[k - j];
        g.a[k] = s / static_cast<double>(k);
    }
    return g;
}

Jet jet_sqrt(const Jet& f) {
    if (std::abs(f.a[0]) == 0.0)
        throw calc_error("branch_point", "square root at a branch point");
    Jet g;
    g.a[0] = std::sqrt(f.a[0]);
    for (int k = 1; k < Jet::N; ++k) {
        Jet::C s = 0.0;
        for (int j = 1; j < k; ++j) s += g.a[j] * g.a[k - j];
        g.a[k] = (f.a[k] - s) / (2.0 * g.a[0]);
    }
    return g;
}

Jet jet_tanh(const Jet& f) {
    Jet e2 = jet_exp(f.scaled(2.0));
    Jet one = Jet::constant(1.0);
    return (e2 - one) / (e2 + one);
}

Jet jet_pow32(const Jet& f) {
    Jet s = jet_sqrt(f);
    return s * s * s;
}

} // namespace legode
