#pragma once

#include "legode/ratfunc.hpp"

#include <optional>

namespace legode {

using VecF = std::vector<RatFunc>;

/* Dense matrix over the rational-function field. Row-major. */
class MatF {
public:
    MatF() = default;
    MatF(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    static MatF identity(int n);
    static MatF from_rows(const std::vector<VecF>& rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    RatFunc& at(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const RatFunc& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    MatF operator+(const MatF& o) const;
    MatF operator-(const MatF& o) const;
    MatF operator*(const MatF& o) const;
    MatF scaled(const RatFunc& s) const;
    MatF transpose() const;
    MatF pow(int e) const; // square matrices, e >= 0
    VecF apply(const VecF& v) const;
    RatFunc trace() const;
    bool is_zero() const;
    bool operator==(const MatF& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const MatF& o) const { return !(*this == o); }

private:
    int r_ = 0, c_ = 0;
    std::vector<RatFunc> a_;
};

struct RrefResult {
    MatF mat;
    std::vector<int> pivots; // pivot column of each leading row
    int rank = 0;
};

RrefResult rref(const MatF& m);
int rank(const MatF& m);
std::vector<VecF> nullspace(const MatF& m);
/* One solution of a x = b with free variables set to zero, or nullopt. */
std::optional<VecF> solve_linear(const MatF& a, const VecF& b);
MatF inverse(const MatF& m); // throws calc_error("singular_matrix") if not invertible

/* Polynomial in one auxiliary indeterminate with rational-function
 * coefficients; ascending order, trailing zeros trimmed. */
struct PolyInS {
    std::vector<RatFunc> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    RatFunc at(int k) const {
        return k >= 0 && k < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(k)] : RatFunc();
    }
    void trim();
    RatFunc evaluate(const RatFunc& s) const;
    bool operator==(const PolyInS& o) const { return c == o.c; }
    std::string str(const std::string& name) const;
};

PolyInS charpoly(const MatF& a); // det(sI - a), monic
PolyInS minpoly(const MatF& a);  // monic, minimal degree with p(a) = 0
MatF eval_poly_mat(const PolyInS& p, const MatF& a);

/* Subspace of the ambient column space, kept as reduced echelon rows. */
class Span {
public:
    explicit Span(int ambient) : n_(ambient) {}
    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    bool add(const VecF& v); // true when the dimension grew
    bool contains(const VecF& v) const;
    const std::vector<VecF>& basis() const { return rows_; }

private:
    int n_;
    std::vector<VecF> rows_;
    std::vector<int> pivots_;
};

} // namespace legode
