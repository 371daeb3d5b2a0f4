#include "legode/matf.hpp"

#include "legode/common.hpp"

#include <cassert>
#include <utility>

namespace legode {

MatF MatF::identity(int n) {
    MatF m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc(1);
    return m;
}

MatF MatF::from_rows(const std::vector<VecF>& rows) {
    if (rows.empty()) return MatF();
    MatF m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.r_; ++i) {
        assert(static_cast<int>(rows[static_cast<std::size_t>(i)].size()) == m.c_);
        for (int j = 0; j < m.c_; ++j)
            m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

MatF MatF::operator+(const MatF& o) const {
    assert(r_ == o.r_ && c_ == o.c_);
    MatF m(r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
    return m;
}

MatF MatF::operator-(const MatF& o) const {
    assert(r_ == o.r_ && c_ == o.c_);
    MatF m(r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
    return m;
}

MatF MatF::operator*(const MatF& o) const {
    assert(c_ == o.r_);
    MatF m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const RatFunc& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                m.at(i, j) += aik * o.at(k, j);
            }
        }
    return m;
}

MatF MatF::scaled(const RatFunc& s) const {
    MatF m(r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * s;
    return m;
}

MatF MatF::transpose() const {
    MatF m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
}

MatF MatF::pow(int e) const {
    assert(r_ == c_ && e >= 0);
    MatF acc = identity(r_);
    MatF base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

VecF MatF::apply(const VecF& v) const {
    assert(static_cast<int>(v.size()) == c_);
    VecF w(static_cast<std::size_t>(r_));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            if (at(i, j).is_zero() || v[static_cast<std::size_t>(j)].is_zero()) continue;
            w[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
        }
    return w;
}

RatFunc MatF::trace() const {
    assert(r_ == c_);
    RatFunc t;
    for (int i = 0; i < r_; ++i) t += at(i, i);
    return t;
}

bool MatF::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

/* Elimination on raw rationals; the generic routine drags full
 * rational-function arithmetic through every entry, which dominates the
 * larger prolongation systems even though they are purely numeric. */
RrefResult rref_const(const MatF& m) {
    const int nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(nr),
                                    std::vector<Rat>(static_cast<std::size_t>(nc)));
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j)
            if (!m.at(i, j).is_zero()) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j).as_rat();

    RrefResult res;
    int lead = 0;
    for (int col = 0; col < nc && lead < nr; ++col) {
        int p = -1;
        for (int i = lead; i < nr; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != lead) std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(lead)]);
        auto& lr = a[static_cast<std::size_t>(lead)];
        const Rat inv = Rat(1) / lr[static_cast<std::size_t>(col)];
        for (auto& e : lr)
            if (e != 0) e *= inv;
        for (int i = 0; i < nr; ++i) {
            if (i == lead) continue;
            auto& row = a[static_cast<std::size_t>(i)];
            const Rat f = row[static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = 0; j < nc; ++j)
                if (lr[static_cast<std::size_t>(j)] != 0)
                    row[static_cast<std::size_t>(j)] -= f * lr[static_cast<std::size_t>(j)];
        }
        res.pivots.push_back(col);
        ++lead;
    }
    res.mat = MatF(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                res.mat.at(i, j) = RatFunc(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    res.rank = static_cast<int>(res.pivots.size());
    return res;
}

bool all_constant(const MatF& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_constant()) return false;
    return true;
}

} // namespace

RrefResult rref(const MatF& m) {
    if (m.rows() > 0 && m.cols() > 0 && all_constant(m)) return rref_const(m);
    RrefResult res;
    res.mat = m;
    MatF& a = res.mat;
    int lead = 0;
    for (int col = 0; col < a.cols() && lead < a.rows(); ++col) {
        int p = -1;
        for (int i = lead; i < a.rows(); ++i)
            if (!a.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != lead)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(lead, j));
        RatFunc inv = a.at(lead, col).inverse();
        for (int j = 0; j < a.cols(); ++j) a.at(lead, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == lead || a.at(i, col).is_zero()) continue;
            RatFunc f = a.at(i, col);
            for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= f * a.at(lead, j);
        }
        res.pivots.push_back(col);
        ++lead;
    }
    res.rank = static_cast<int>(res.pivots.size());
    return res;
}

int rank(const MatF& m) { return rref(m).rank; }

std::vector<VecF> nullspace(const MatF& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<VecF> basis;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[static_cast<std::size_t>(j)]) continue;
        VecF v(static_cast<std::size_t>(m.cols()));
        v[static_cast<std::size_t>(j)] = RatFunc(1);
        for (int i = 0; i < r.rank; ++i)
            v[static_cast<std::size_t>(r.pivots[static_cast<std::size_t>(i)])] =
                -r.mat.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<VecF> solve_linear(const MatF& a, const VecF& b) {
    assert(static_cast<int>(b.size()) == a.rows());
    MatF aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[static_cast<std::size_t>(i)];
    }
    RrefResult r = rref(aug);
    for (int p : r.pivots)
        if (p == a.cols()) return std::nullopt;
    VecF x(static_cast<std::size_t>(a.cols()));
    for (int i = 0; i < r.rank; ++i)
        x[static_cast<std::size_t>(r.pivots[static_cast<std::size_t>(i)])] =
            r.mat.at(i, a.cols());
    return x;
}

MatF inverse(const MatF& m) {
    assert(m.rows() == m.cols());
    int n = m.rows();
    MatF aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = RatFunc(1);
    }
    RrefResult r = rref(aug);
    if (r.rank < n || r.pivots[static_cast<std::size_t>(n - 1)] >= n)
        throw calc_error("singular_matrix", "matrix is not invertible");
    MatF inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
    return inv;
}

void PolyInS::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

RatFunc PolyInS::evaluate(const RatFunc& s) const {
    RatFunc r;
    for (std::size_t k = c.size(); k-- > 0;) r = r * s + c[k];
    return r;
}

std::string PolyInS::str(const std::string& name) const {
    RatFunc s = RatFunc::variable(name);
    return rf_str(evaluate(s));
}

PolyInS charpoly(const MatF& a) {
    assert(a.rows() == a.cols());
    int n = a.rows();
    PolyInS p;
    p.c.assign(static_cast<std::size_t>(n) + 1, RatFunc());
    p.c[static_cast<std::size_t>(n)] = RatFunc(1);
    MatF m = MatF::identity(n);
    for (int k = 1; k <= n; ++k) {
        m = a * m;
        RatFunc ck = -(m.trace() / RatFunc(k));
        p.c[static_cast<std::size_t>(n - k)] = ck;
        for (int i = 0; i < n; ++i) m.at(i, i) += ck;
    }
    return p;
}

MatF eval_poly_mat(const PolyInS& p, const MatF& a) {
    assert(a.rows() == a.cols());
    int n = a.rows();
    MatF acc(n, n);
    for (std::size_t k = p.c.size(); k-- > 0;) {
        acc = acc * a;
        for (int i = 0; i < n; ++i) acc.at(i, i) += p.c[k];
    }
    return acc;
}

PolyInS minpoly(const MatF& a) {
    assert(a.rows() == a.cols());
    int n = a.rows();
    std::vector<MatF> powers;
    powers.push_back(MatF::identity(n));
    for (int k = 1; k <= n; ++k) {
        powers.push_back(powers.back() * a);
        MatF sys(n * n, k);
        VecF rhs(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int row = i * n + j;
                for (int m = 0; m < k; ++m)
                    sys.at(row, m) = powers[static_cast<std::size_t>(m)].at(i, j);
                rhs[static_cast<std::size_t>(row)] = powers[static_cast<std::size_t>(k)].at(i, j);
            }
        auto sol = solve_linear(sys, rhs);
        if (!sol) continue;
        PolyInS p;
        p.c.assign(static_cast<std::size_t>(k) + 1, RatFunc());
        p.c[static_cast<std::size_t>(k)] = RatFunc(1);
        for (int m = 0; m < k; ++m) p.c[static_cast<std::size_t>(m)] = -(*sol)[static_cast<std::size_t>(m)];
        return p;
    }
    /* Unreachable: the characteristic polynomial always annihilates. */
    throw calc_error("internal", "minimal polynomial search failed");
}

bool Span::add(const VecF& v) {
    assert(static_cast<int>(v.size()) == n_);
    VecF w = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        int p = pivots_[i];
        if (w[static_cast<std::size_t>(p)].is_zero()) continue;
        RatFunc f = w[static_cast<std::size_t>(p)];
        for (int j = 0; j < n_; ++j)
            w[static_cast<std::size_t>(j)] -= f * rows_[i][static_cast<std::size_t>(j)];
    }
    int p = -1;
    for (int j = 0; j < n_; ++j)
        if (!w[static_cast<std::size_t>(j)].is_zero()) {
            p = j;
            break;
        }
    if (p < 0) return false;
    RatFunc inv = w[static_cast<std::size_t>(p)].inverse();
    for (int j = 0; j < n_; ++j) w[static_cast<std::size_t>(j)] *= inv;
    /* Clear the new pivot from existing rows and insert keeping pivot order. */
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        RatFunc f = rows_[i][static_cast<std::size_t>(p)];
        if (f.is_zero()) continue;
        for (int j = 0; j < n_; ++j)
            rows_[i][static_cast<std::size_t>(j)] -= f * w[static_cast<std::size_t>(j)];
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(w));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), p);
    return true;
}

bool Span::contains(const VecF& v) const {
    assert(static_cast<int>(v.size()) == n_);
    VecF w = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        int p = pivots_[i];
        if (w[static_cast<std::size_t>(p)].is_zero()) continue;
        RatFunc f = w[static_cast<std::size_t>(p)];
        for (int j = 0; j < n_; ++j)
            w[static_cast<std::size_t>(j)] -= f * rows_[i][static_cast<std::size_t>(j)];
    }
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace legode
