#pragma once

#include <array>
#include <complex>

namespace legode {

/* Truncated Taylor expansion f(t0+h) = sum a[k] h^k with complex double
 * coefficients, through order 6. Derivatives shift coefficients down and
 * zero the top slot; every operation is triangular in the order, so entries
 * up to the surviving order stay exact expansions. */
struct Jet {
    static constexpr int N = 7;
    using C = std::complex<double>;

    std::array<C, N> a{};

    static Jet constant(C c);
    static Jet variable(C t0); // t0 + h

    C value() const { return a[0]; }

    Jet operator-() const;
    Jet operator+(const Jet& o) const;
    Jet operator-(const Jet& o) const;
    Jet operator*(const Jet& o) const;
    Jet operator/(const Jet& o) const;
    Jet& operator+=(const Jet& o) { return *this = *this + o; }
    Jet& operator-=(const Jet& o) { return *this = *this - o; }

    Jet scaled(C s) const;
    Jet derivative() const;
};

Jet jet_inv(const Jet& f);   // needs f(t0) != 0
Jet jet_exp(const Jet& f);
Jet jet_sqrt(const Jet& f);  // principal branch; rejects a zero constant term
Jet jet_tanh(const Jet& f);
Jet jet_pow32(const Jet& f); // f^(3/2), principal branch

} // namespace legode
