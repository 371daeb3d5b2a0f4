#include "legode/rat.hpp"

#include <cctype>

namespace legode {

Rat rat_parse(const std::string& s) {
    auto fail = [&]() -> Rat {
        throw calc_error("bad_rational", "not a rational literal: '" + s + "'");
    };
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        return j;
    };
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t num_end = digits(i);
    if (num_end == i) return fail();
    mpz_class num(s.substr(0, num_end));
    mpz_class den(1);
    if (num_end != s.size()) {
        if (s[num_end] != '/') return fail();
        std::size_t den_end = digits(num_end + 1);
        if (den_end == num_end + 1 || den_end != s.size()) return fail();
        den = mpz_class(s.substr(num_end + 1));
        if (den == 0) throw calc_error("division_by_zero", "zero denominator in '" + s + "'");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& x) {
    return x.get_str();
}

Rat rat_pow(const Rat& x, long e) {
    if (e < 0) {
        if (x == 0) throw calc_error("division_by_zero", "0 raised to a negative power");
        return rat_pow(Rat(x.get_den(), x.get_num()), -e);
    }
    Rat acc(1), base(x);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    acc.canonicalize();
    return acc;
}

Rat rat_div(const Rat& x, const Rat& y) {
    if (y == 0) throw calc_error("division_by_zero", "division by zero");
    return x / y;
}

bool rat_is_square(const Rat& x) {
    if (x < 0) return false;
    return mpz_perfect_square_p(x.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(x.get_den().get_mpz_t());
}

Rat rat_sqrt(const Rat& x) {
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den().get_mpz_t());
    return Rat(n, d);
}

} // namespace legode
