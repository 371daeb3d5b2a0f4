#include "legode/ratfunc.hpp"

#include "legode/common.hpp"

#include <cctype>
#include <sstream>

namespace legode {

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw calc_error("division_by_zero", "rational function with zero denominator");
    canonicalize();
}

RatFunc RatFunc::variable(const std::string& name) {
    return RatFunc(MPoly::variable(name));
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = MPoly::constant(Rat(1));
        return;
    }
    if (!num_.is_constant() && !den_.is_constant()) {
        MPoly g = mp_gcd(num_, den_);
        if (!(g.is_constant() && g.as_rat() == 1)) {
            num_ = *mp_div_exact(num_, g);
            den_ = *mp_div_exact(den_, g);
        }
    }
    Rat lc = den_.leading_coef();
    if (lc != 1) {
        Rat s = Rat(1) / lc;
        num_ = num_.scaled(s);
        den_ = den_.scaled(s);
    }
}

bool RatFunc::is_poly() const {
    return den_.is_constant() && den_.as_rat() == 1;
}

Rat RatFunc::as_rat() const {
    return num_.as_rat() / den_.as_rat();
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero())
        throw calc_error("division_by_zero", "division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero())
        throw calc_error("division_by_zero", "inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r;
    r.num_ = num_.pow(e);
    r.den_ = den_.pow(e);
    r.canonicalize();
    return r;
}

RatFunc RatFunc::derivative(int id) const {
    return RatFunc(num_.derivative(id) * den_ - num_ * den_.derivative(id), den_ * den_);
}

namespace {

RatFunc eval_poly_at(const MPoly& p, int id, const RatFunc& val) {
    if (!p.depends_on(id)) return RatFunc(p);
    auto cs = p.coeffs_in(id);
    RatFunc r;
    for (std::size_t k = cs.size(); k-- > 0;)
        r = r * val + RatFunc(cs[k]);
    return r;
}

} // namespace

RatFunc RatFunc::substitute(int id, const RatFunc& val) const {
    RatFunc n = eval_poly_at(num_, id, val);
    RatFunc d = eval_poly_at(den_, id, val);
    if (d.is_zero())
        throw calc_error("division_by_zero", "denominator vanishes under substitution");
    return n / d;
}

namespace {

struct Lexer {
    enum Kind { End, Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen };
    explicit Lexer(const std::string& s) : s_(s) { next(); }

    Kind kind = End;
    std::string text;

    void next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        text.clear();
        if (pos_ >= s_.size()) {
            kind = End;
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                text += s_[pos_++];
            kind = Num;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                text += s_[pos_++];
            kind = Ident;
            return;
        }
        ++pos_;
        switch (c) {
        case '+': kind = Plus; return;
        case '-': kind = Minus; return;
        case '*': kind = Star; return;
        case '/': kind = Slash; return;
        case '^': kind = Caret; return;
        case '(': kind = LParen; return;
        case ')': kind = RParen; return;
        default:
            throw calc_error("parse_error", std::string("unexpected character '") + c + "'");
        }
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

struct Parser {
    explicit Parser(const std::string& s) : lx(s) {}
    Lexer lx;

    RatFunc parse() {
        RatFunc r = expr();
        if (lx.kind != Lexer::End)
            throw calc_error("parse_error", "trailing input after expression");
        return r;
    }

    RatFunc expr() {
        RatFunc r = term();
        while (lx.kind == Lexer::Plus || lx.kind == Lexer::Minus) {
            bool add = lx.kind == Lexer::Plus;
            lx.next();
            RatFunc t = term();
            r = add ? r + t : r - t;
        }
        return r;
    }

    RatFunc term() {
        RatFunc r = factor();
        for (;;) {
            if (lx.kind == Lexer::Star) {
                lx.next();
                r = r * factor();
            } else if (lx.kind == Lexer::Slash) {
                lx.next();
                r = r / factor();
            } else if (lx.kind == Lexer::Ident || lx.kind == Lexer::LParen) {
                r = r * factor(); // juxtaposition, e.g. 60s^2 or 2(t+1)
            } else {
                break;
            }
        }
        return r;
    }

    RatFunc factor() {
        if (lx.kind == Lexer::Minus) {
            lx.next();
            return -factor();
        }
        if (lx.kind == Lexer::Plus) {
            lx.next();
            return factor();
        }
        RatFunc base = primary();
        if (lx.kind == Lexer::Caret) {
            lx.next();
            bool neg = false;
            if (lx.kind == Lexer::Minus) {
                neg = true;
                lx.next();
            }
            if (lx.kind != Lexer::Num)
                throw calc_error("parse_error", "exponent must be an integer");
            int e = std::stoi(lx.text);
            lx.next();
            base = base.pow(neg ? -e : e);
        }
        return base;
    }

    RatFunc primary() {
        if (lx.kind == Lexer::Num) {
            Rat v(lx.text, 10);
            lx.next();
            return RatFunc(v);
        }
        if (lx.kind == Lexer::Ident) {
            std::string name = lx.text;
            lx.next();
            return RatFunc::variable(name);
        }
        if (lx.kind == Lexer::LParen) {
            lx.next();
            RatFunc r = expr();
            if (lx.kind != Lexer::RParen)
                throw calc_error("parse_error", "missing closing parenthesis");
            lx.next();
            return r;
        }
        throw calc_error("parse_error", "expected number, name, or parenthesis");
    }
};

/* A denominator monomial is safe to print after '/' without parentheses only
 * when no implicit product could rebind, i.e. an integer or a single power of
 * one variable with unit coefficient. */
bool den_needs_parens(const MPoly& d) {
    if (d.is_constant()) return false;
    if (d.terms().size() > 1) return true;
    const auto& t = *d.terms().begin();
    return !(t.second == 1 && t.first.e.size() == 1);
}

} // namespace

RatFunc rf_parse(const std::string& s) {
    Parser p(s);
    return p.parse();
}

std::string rf_str(const RatFunc& f) {
    if (f.is_zero()) return "0";
    /* Rescale so both parts have coprime integer coefficients and the
     * denominator's leading coefficient is positive. */
    mpz_class l(1), g(0);
    auto absorb = [&](const MPoly& p) {
        for (const auto& t : p.terms())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den().get_mpz_t());
    };
    absorb(f.num());
    absorb(f.den());
    auto absorb_num = [&](const MPoly& p) {
        for (const auto& t : p.terms()) {
            mpz_class n = t.second.get_num() * (l / t.second.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        }
    };
    absorb_num(f.num());
    absorb_num(f.den());
    Rat scale(l, g);
    scale.canonicalize();
    if (f.den().leading_coef() * scale < 0) scale = -scale;

    MPoly n = f.num().scaled(scale);
    MPoly d = f.den().scaled(scale);
    if (d.is_constant() && d.as_rat() == 1) return mpoly_str(n);

    std::string ns = mpoly_str(n);
    if (n.terms().size() > 1) ns = "(" + ns + ")";
    std::string ds = mpoly_str(d);
    if (den_needs_parens(d)) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

} // namespace legode
