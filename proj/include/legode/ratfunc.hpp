#pragma once

#include "legode/mpoly.hpp"

namespace legode {

/* Quotient of two multivariate polynomials over Q, kept in canonical form:
 * gcd-reduced with a monic denominator (graded-lex leading term).  Equality
 * of canonical forms is therefore structural equality. */
class RatFunc {
public:
    RatFunc() : den_(MPoly::constant(Rat(1))) {}
    RatFunc(const Rat& c) : num_(MPoly::constant(c)), den_(MPoly::constant(Rat(1))) {}
    RatFunc(long c) : RatFunc(Rat(c)) {}
    explicit RatFunc(const MPoly& p) : num_(p), den_(MPoly::constant(Rat(1))) {}
    RatFunc(MPoly num, MPoly den);

    static RatFunc variable(const std::string& name);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_poly() const;
    Rat as_rat() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    bool operator==(const RatFunc& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inverse() const;
    RatFunc pow(int e) const;
    RatFunc derivative(int id) const;
    RatFunc substitute(int id, const RatFunc& val) const;
    bool depends_on(int id) const { return num_.depends_on(id) || den_.depends_on(id); }

private:
    void canonicalize();
    MPoly num_, den_;
};

RatFunc rf_parse(const std::string& s);
std::string rf_str(const RatFunc& f);

} // namespace legode
