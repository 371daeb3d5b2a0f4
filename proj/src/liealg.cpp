#include "legode/liealg.hpp"

#include "legode/common.hpp"

#include <algorithm>
#include <utility>

namespace legode {

namespace {

VecF unit_vec(int n, int k) {
    VecF v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(k)] = RatFunc(1);
    return v;
}

VecF flatten(const MatF& m) {
    VecF v;
    v.reserve(static_cast<std::size_t>(m.rows() * m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

/* sigma(x, y) = x1 y3 - x3 y1 + x2 y4 - x4 y2 on the horizontal slots. */
RatFunc darboux_pairing(const VecF& x, const VecF& y) {
    return x[0] * y[2] - x[2] * y[0] + x[1] * y[3] - x[3] * y[1];
}

} // namespace

FiltLieAlg FiltLieAlg::zero(std::vector<std::string> names, std::vector<int> degrees) {
    FiltLieAlg g;
    g.names = std::move(names);
    g.degrees = std::move(degrees);
    if (g.names.size() != g.degrees.size())
        throw calc_error("bad_input", "basis names and degrees differ in length");
    const auto n = g.names.size();
    g.table.assign(n, std::vector<VecF>(n, VecF(n)));
    return g;
}

void FiltLieAlg::set_bracket(int i, int j, const VecF& v) {
    if (v.size() != static_cast<std::size_t>(dim()))
        throw calc_error("bad_input", "bracket value has the wrong length");
    auto& fwd = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    auto& bwd = table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    fwd = v;
    bwd.clear();
    for (const auto& c : v) bwd.push_back(-c);
    if (i == j)
        for (const auto& c : v)
            if (!c.is_zero()) throw calc_error("bad_input", "bracket of an element with itself");
}

const VecF& FiltLieAlg::bracket(int i, int j) const {
    return table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

VecF FiltLieAlg::bracket_vec(const VecF& x, const VecF& y) const {
    const int n = dim();
    VecF out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (x[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (y[static_cast<std::size_t>(j)].is_zero()) continue;
            const RatFunc s = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
            const VecF& b = bracket(i, j);
            for (int k = 0; k < n; ++k)
                if (!b[static_cast<std::size_t>(k)].is_zero())
                    out[static_cast<std::size_t>(k)] += s * b[static_cast<std::size_t>(k)];
        }
    }
    return out;
}

bool jacobi_check(const FiltLieAlg& g) {
    const int n = g.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                VecF acc = g.bracket_vec(g.bracket(i, j), unit_vec(n, k));
                const VecF t2 = g.bracket_vec(g.bracket(j, k), unit_vec(n, i));
                const VecF t3 = g.bracket_vec(g.bracket(k, i), unit_vec(n, j));
                for (int c = 0; c < n; ++c) {
                    acc[static_cast<std::size_t>(c)] +=
                        t2[static_cast<std::size_t>(c)] + t3[static_cast<std::size_t>(c)];
                    if (!acc[static_cast<std::size_t>(c)].is_zero()) return false;
                }
            }
    return true;
}

FiltLieAlg heis_build(const MatF& sigma) {
    if (sigma.rows() != 4 || sigma.cols() != 4)
        throw calc_error("bad_input", "expected a 4x4 structure matrix");
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (sigma.at(i, j) != -sigma.at(j, i))
                throw calc_error("bad_input", "structure matrix must be skew");
    FiltLieAlg g = FiltLieAlg::zero({"x1", "x2", "x3", "x4", "z"}, {-1, -1, -1, -1, -2});
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            VecF v(5);
            v[4] = sigma.at(i, j);
            g.set_bracket(i, j, v);
        }
    return g;
}

VecF heis_product(const VecF& x, const VecF& y) {
    if (x.size() != 5 || y.size() != 5)
        throw calc_error("bad_input", "expected points with five coordinates");
    VecF out(5);
    for (int i = 0; i < 4; ++i)
        out[static_cast<std::size_t>(i)] =
            x[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(i)];
    out[4] = x[4] + y[4] + darboux_pairing(x, y) * RatFunc(Rat(1, 2));
    return out;
}

VecF heis_inverse(const VecF& x) {
    if (x.size() != 5) throw calc_error("bad_input", "expected points with five coordinates");
    VecF out;
    out.reserve(5);
    for (const auto& c : x) out.push_back(-c);
    return out;
}

VecF heis_contact_form_at(const VecF& x) {
    if (x.size() != 5) throw calc_error("bad_input", "expected points with five coordinates");
    return VecF{-x[2], -x[3], x[0], x[1], RatFunc(-2)};
}

std::vector<MatF> graded_derivations(const FiltLieAlg& g) {
    const int n = g.dim();
    // Grading-preserving unknown slots.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.degrees[static_cast<std::size_t>(i)] == g.degrees[static_cast<std::size_t>(j)])
                slots.emplace_back(i, j);
    const int m = static_cast<int>(slots.size());
    const auto slot_of = [&](int i, int j) -> int {
        for (int s = 0; s < m; ++s)
            if (slots[static_cast<std::size_t>(s)] == std::make_pair(i, j)) return s;
        return -1;
    };

    std::vector<VecF> rows;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            const VecF& c = g.bracket(p, q);
            for (int k = 0; k < n; ++k) {
                VecF row(static_cast<std::size_t>(m));
                bool nz = false;
                const auto put = [&](int i, int j, const RatFunc& val) {
                    const int s = slot_of(i, j);
                    if (s < 0 || val.is_zero()) return;
                    row[static_cast<std::size_t>(s)] += val;
                    nz = true;
                };
                for (int l = 0; l < n; ++l) put(k, l, c[static_cast<std::size_t>(l)]);
                for (int i = 0; i < n; ++i) {
                    put(i, p, -g.bracket(i, q)[static_cast<std::size_t>(k)]);
                    put(i, q, -g.bracket(p, i)[static_cast<std::size_t>(k)]);
                }
                if (nz) rows.push_back(std::move(row));
            }
        }

    std::vector<VecF> sols;
    if (rows.empty()) {
        for (int s = 0; s < m; ++s) sols.push_back(unit_vec(m, s));
    } else {
        sols = nullspace(MatF::from_rows(rows));
    }

    std::vector<MatF> out;
    out.reserve(sols.size());
    for (const auto& v : sols) {
        MatF d(n, n);
        for (int s = 0; s < m; ++s)
            d.at(slots[static_cast<std::size_t>(s)].first,
                 slots[static_cast<std::size_t>(s)].second) = v[static_cast<std::size_t>(s)];
        out.push_back(std::move(d));
    }
    return out;
}

MatF sym3_embed(const MatF& m) {
    if (m.rows() != 2 || m.cols() != 2)
        throw calc_error("bad_input", "expected a 2x2 matrix");
    const RatFunc &a = m.at(0, 0), &b = m.at(0, 1), &c = m.at(1, 0), &d = m.at(1, 1);
    const RatFunc two(2), three(3);
    MatF out(4, 4);
    out.at(0, 0) = three * a;
    out.at(0, 1) = three * b;
    out.at(1, 0) = c;
    out.at(1, 1) = two * a + d;
    out.at(1, 2) = two * b;
    out.at(2, 1) = two * c;
    out.at(2, 2) = a + two * d;
    out.at(2, 3) = b;
    out.at(3, 2) = three * c;
    out.at(3, 3) = three * d;
    return out;
}

MatF heis_derivation_from_csp(const MatF& m, const MatF& sigma) {
    if (m.rows() != 4 || m.cols() != 4)
        throw calc_error("bad_input", "expected a 4x4 matrix");
    const MatF e = m.transpose() * sigma + sigma * m;
    RatFunc factor;
    bool found = false;
    for (int i = 0; i < 4 && !found; ++i)
        for (int j = 0; j < 4 && !found; ++j)
            if (!sigma.at(i, j).is_zero()) {
                factor = e.at(i, j) / sigma.at(i, j);
                found = true;
            }
    if (!found || e != sigma.scaled(factor))
        throw calc_error("bad_input", "matrix is not conformally symplectic");
    MatF out(5, 5);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.at(i, j) = m.at(i, j);
    out.at(4, 4) = factor;
    return out;
}

namespace {

struct ProlongState {
    const FiltLieAlg* m = nullptr;
    std::vector<int> idx1, idx2; // basis positions of degrees -1 and -2
    int n1 = 0, n2 = 0;
    std::vector<MatF> g0;
    std::vector<std::vector<VecF>> levels; // flat bases of levels 1, 2, ...

    int dim_of(int j) const {
        if (j == -2) return n2;
        if (j == -1) return n1;
        if (j == 0) return static_cast<int>(g0.size());
        return static_cast<int>(levels[static_cast<std::size_t>(j - 1)].size());
    }

    int flat_len(int k) const { return dim_of(k - 1) * n1 + dim_of(k - 2) * n2; }

    /* Action of a level-j basis element on the degree -1 slot x, written in
     * the level j-1 basis. */
    MatF apply1_mat(int j, int x) const {
        MatF out(dim_of(j - 1), dim_of(j));
        if (j >= 1) {
            const auto& base = levels[static_cast<std::size_t>(j - 1)];
            for (int s = 0; s < out.cols(); ++s)
                for (int t = 0; t < out.rows(); ++t)
                    out.at(t, s) = base[static_cast<std::size_t>(s)]
                                       [static_cast<std::size_t>(t * n1 + x)];
        } else if (j == 0) {
            for (int s = 0; s < out.cols(); ++s)
                for (int t = 0; t < out.rows(); ++t)
                    out.at(t, s) = g0[static_cast<std::size_t>(s)].at(
                        idx1[static_cast<std::size_t>(t)], idx1[static_cast<std::size_t>(x)]);
        } else if (j == -1) {
            for (int s = 0; s < out.cols(); ++s) {
                const VecF& b = m->bracket(idx1[static_cast<std::size_t>(s)],
                                           idx1[static_cast<std::size_t>(x)]);
                for (int t = 0; t < out.rows(); ++t)
                    out.at(t, s) = b[static_cast<std::size_t>(idx2[static_cast<std::size_t>(t)])];
            }
        }
        return out; // j == -2 maps into degree -3, which is zero
    }

    /* Action of a level-j basis element on the degree -2 slot z. */
    MatF apply2_mat(int j, int z) const {
        MatF out(dim_of(j - 2), dim_of(j));
        if (j >= 1) {
            const int off = dim_of(j - 1) * n1;
            const auto& base = levels[static_cast<std::size_t>(j - 1)];
            for (int s = 0; s < out.cols(); ++s)
                for (int t = 0; t < out.rows(); ++t)
                    out.at(t, s) = base[static_cast<std::size_t>(s)]
                                       [static_cast<std::size_t>(off + t * n2 + z)];
        } else if (j == 0) {
            for (int s = 0; s < out.cols(); ++s)
                for (int t = 0; t < out.rows(); ++t)
                    out.at(t, s) = g0[static_cast<std::size_t>(s)].at(
                        idx2[static_cast<std::size_t>(t)], idx2[static_cast<std::size_t>(z)]);
        }
        return out;
    }

    MatF extract1_mat(int k, int x) const {
        MatF out(dim_of(k - 1), flat_len(k));
        for (int r = 0; r < out.rows(); ++r) out.at(r, r * n1 + x) = RatFunc(1);
        return out;
    }

    MatF extract2_mat(int k, int z) const {
        const int off = dim_of(k - 1) * n1;
        MatF out(dim_of(k - 2), flat_len(k));
        for (int r = 0; r < out.rows(); ++r) out.at(r, off + r * n2 + z) = RatFunc(1);
        return out;
    }
};

void validate_symbol(const FiltLieAlg& m, ProlongState& st) {
    const int n = m.dim();
    for (int i = 0; i < n; ++i) {
        const int d = m.degrees[static_cast<std::size_t>(i)];
        if (d == -1)
            st.idx1.push_back(i);
        else if (d == -2)
            st.idx2.push_back(i);
        else
            throw calc_error("unsupported_depth", "unsupported depth");
    }
    st.n1 = static_cast<int>(st.idx1.size());
    st.n2 = static_cast<int>(st.idx2.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int target = m.degrees[static_cast<std::size_t>(i)] +
                               m.degrees[static_cast<std::size_t>(j)];
            const VecF& b = m.bracket(i, j);
            for (int k = 0; k < n; ++k) {
                if (b[static_cast<std::size_t>(k)].is_zero()) continue;
                if (target < -2) throw calc_error("unsupported_depth", "unsupported depth");
                if (m.degrees[static_cast<std::size_t>(k)] != target)
                    throw calc_error("bad_input", "bracket table is not graded");
            }
        }
    if (!jacobi_check(m))
        throw calc_error("bad_input", "bracket table violates the Jacobi identity");
}

void validate_g0(const FiltLieAlg& m, const std::vector<MatF>& g0) {
    const int n = m.dim();
    Span span(n * n);
    for (const auto& g : g0) {
        if (g.rows() != n || g.cols() != n)
            throw calc_error("bad_input", "level-zero matrix has the wrong size");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m.degrees[static_cast<std::size_t>(i)] !=
                        m.degrees[static_cast<std::size_t>(j)] &&
                    !g.at(i, j).is_zero())
                    throw calc_error("bad_g0", "level-zero part must preserve the grading");
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                VecF colp(static_cast<std::size_t>(n)), colq(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) {
                    colp[static_cast<std::size_t>(i)] = g.at(i, p);
                    colq[static_cast<std::size_t>(i)] = g.at(i, q);
                }
                VecF want = g.apply(m.bracket(p, q));
                const VecF t1 = m.bracket_vec(colp, unit_vec(n, q));
                const VecF t2 = m.bracket_vec(unit_vec(n, p), colq);
                for (int k = 0; k < n; ++k)
                    want[static_cast<std::size_t>(k)] -= t1[static_cast<std::size_t>(k)] +
                                                         t2[static_cast<std::size_t>(k)];
                for (const auto& c : want)
                    if (!c.is_zero())
                        throw calc_error("bad_g0", "level-zero part must act by derivations");
            }
        if (!span.add(flatten(g)))
            throw calc_error("bad_g0", "level-zero generators are linearly dependent");
    }
    for (std::size_t a = 0; a < g0.size(); ++a)
        for (std::size_t b = a + 1; b < g0.size(); ++b) {
            const MatF comm = g0[a] * g0[b] - g0[b] * g0[a];
            if (!span.contains(flatten(comm)))
                throw calc_error("bad_g0", "level-zero part is not closed under bracket");
        }
}

} // namespace

ProlongResult tanaka_prolong(const FiltLieAlg& m, const std::vector<MatF>& g0,
                             int max_level, bool continue_past_zero) {
    if (max_level < 1 || max_level > 8)
        throw calc_error("bad_input", "level bound must be between 1 and 8");
    ProlongState st;
    st.m = &m;
    validate_symbol(m, st);
    validate_g0(m, g0);
    st.g0 = g0;

    ProlongResult res;
    for (int k = 1; k <= max_level; ++k) {
        const int len = st.flat_len(k);
        std::vector<VecF> basis;
        if (len > 0) {
            std::vector<VecF> rows;
            const auto push_block = [&](const MatF& block) {
                for (int r = 0; r < block.rows(); ++r) {
                    VecF row(static_cast<std::size_t>(len));
                    bool nz = false;
                    for (int ccol = 0; ccol < len; ++ccol) {
                        row[static_cast<std::size_t>(ccol)] = block.at(r, ccol);
                        nz = nz || !block.at(r, ccol).is_zero();
                    }
                    if (nz) rows.push_back(std::move(row));
                }
            };
            for (int x = 0; x < st.n1; ++x)
                for (int y = x + 1; y < st.n1; ++y) {
                    const VecF& c = m.bracket(st.idx1[static_cast<std::size_t>(x)],
                                              st.idx1[static_cast<std::size_t>(y)]);
                    MatF block = st.apply1_mat(k - 1, x) * st.extract1_mat(k, y) -
                                 st.apply1_mat(k - 1, y) * st.extract1_mat(k, x);
                    for (int z = 0; z < st.n2; ++z) {
                        const RatFunc& cz =
                            c[static_cast<std::size_t>(st.idx2[static_cast<std::size_t>(z)])];
                        if (!cz.is_zero()) block = block + st.extract2_mat(k, z).scaled(cz);
                    }
                    push_block(block);
                }
            if (st.dim_of(k - 3) > 0)
                for (int x = 0; x < st.n1; ++x)
                    for (int z = 0; z < st.n2; ++z)
                        push_block(st.apply2_mat(k - 1, z) * st.extract1_mat(k, x) -
                                   st.apply1_mat(k - 2, x) * st.extract2_mat(k, z));

            if (rows.empty()) {
                for (int s = 0; s < len; ++s) basis.push_back(unit_vec(len, s));
            } else {
                basis = nullspace(MatF::from_rows(rows));
            }
        }
        res.dims.push_back(static_cast<int>(basis.size()));
        st.levels.push_back(std::move(basis));
        if (res.dims.back() == 0 && !continue_past_zero) {
            while (static_cast<int>(res.dims.size()) < max_level) res.dims.push_back(0);
            break;
        }
    }

    res.total = m.dim() + static_cast<int>(g0.size());
    for (int d : res.dims) res.total += d;
    return res;
}

int delta_kernel(const MatF& sigma, const std::vector<MatF>& g0) {
    if (sigma.rows() != 4 || sigma.cols() != 4)
        throw calc_error("bad_input", "expected a 4x4 structure matrix");
    const int n0 = static_cast<int>(g0.size());
    const MatF sinv = inverse(sigma.transpose());
    std::vector<RatFunc> traces;
    traces.reserve(g0.size());
    for (const auto& g : g0) {
        if (g.rows() != 4 || g.cols() != 4)
            throw calc_error("bad_input", "expected 4x4 level-zero actions");
        traces.push_back(g.trace());
    }

    std::vector<VecF> rows;
    for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y)
            for (int comp = 0; comp < 4; ++comp) {
                VecF row(static_cast<std::size_t>(4 * n0));
                bool nz = false;
                const auto put = [&](int slotx, int s, const RatFunc& v) {
                    if (v.is_zero()) return;
                    row[static_cast<std::size_t>(slotx * n0 + s)] += v;
                    nz = true;
                };
                for (int s = 0; s < n0; ++s) {
                    put(x, s, g0[static_cast<std::size_t>(s)].at(comp, y));
                    put(y, s, -g0[static_cast<std::size_t>(s)].at(comp, x));
                    if (!sigma.at(x, y).is_zero())
                        for (int d = 0; d < 4; ++d)
                            put(d, s,
                                -sigma.at(x, y) * sinv.at(comp, d) *
                                    traces[static_cast<std::size_t>(s)] * RatFunc(Rat(1, 2)));
                }
                if (nz) rows.push_back(std::move(row));
            }

    if (rows.empty()) return 4 * n0;
    return static_cast<int>(nullspace(MatF::from_rows(rows)).size());
}

} // namespace legode
