#include "torfacet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace torfacet {

IntMatrix IntMatrix::from_sign(const SignMatrix& s) {
    IntMatrix m(s.rows, s.cols);
    for (auto& e : s.entries) m.at(e.row, e.col) = e.sign;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (long r = 0; r < rows_; ++r)
        for (long c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix out(rows_, o.cols_);
    for (long r = 0; r < rows_; ++r)
        for (long k = 0; k < cols_; ++k) {
            const Int& v = at(r, k);
            if (v == 0) continue;
            for (long c = 0; c < o.cols_; ++c) out.at(r, c) += v * o.at(k, c);
        }
    return out;
}

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

long SNFResult::rank() const {
    long r = 0;
    for (const Int& d : diagonal)
        if (d != 0) ++r;
    return r;
}

std::vector<Int> SNFResult::nontrivial_divisors() const {
    std::vector<Int> out;
    for (const Int& d : diagonal)
        if (d > 1) out.push_back(d);
    return out;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

/// Dense SNF with optional transform tracking. Pivot = minimal |entry|.
SNFResult snf_dense(IntMatrix A, bool with_transforms) {
    long rows = A.rows(), cols = A.cols();
    IntMatrix U, V;
    if (with_transforms) {
        U = IntMatrix::identity(rows);
        V = IntMatrix::identity(cols);
    }
    auto swap_rows = [&](long a, long b) {
        if (a == b) return;
        for (long c = 0; c < cols; ++c) std::swap(A.at(a, c), A.at(b, c));
        if (with_transforms)
            for (long c = 0; c < rows; ++c) std::swap(U.at(a, c), U.at(b, c));
    };
    auto swap_cols = [&](long a, long b) {
        if (a == b) return;
        for (long r = 0; r < rows; ++r) std::swap(A.at(r, a), A.at(r, b));
        if (with_transforms)
            for (long r = 0; r < cols; ++r) std::swap(V.at(r, a), V.at(r, b));
    };
    auto add_row = [&](long dst, long src, const Int& q) {  // row_dst += q * row_src
        if (q == 0) return;
        for (long c = 0; c < cols; ++c) A.at(dst, c) += q * A.at(src, c);
        if (with_transforms)
            for (long c = 0; c < rows; ++c) U.at(dst, c) += q * U.at(src, c);
    };
    auto add_col = [&](long dst, long src, const Int& q) {
        if (q == 0) return;
        for (long r = 0; r < rows; ++r) A.at(r, dst) += q * A.at(r, src);
        if (with_transforms)
            for (long r = 0; r < cols; ++r) V.at(r, dst) += q * V.at(r, src);
    };
    auto negate_row = [&](long r) {
        for (long c = 0; c < cols; ++c) A.at(r, c) = -A.at(r, c);
        if (with_transforms)
            for (long c = 0; c < rows; ++c) U.at(r, c) = -U.at(r, c);
    };

    long t = 0;
    long steps = std::min(rows, cols);
    for (; t < steps; ++t) {
        // minimal |nonzero| pivot in the working submatrix
        long pr = -1, pc = -1;
        Int best;
        for (long r = t; r < rows; ++r)
            for (long c = t; c < cols; ++c) {
                const Int& v = A.at(r, c);
                if (v == 0) continue;
                Int av = abs_int(v);
                if (pr < 0 || av < best) {
                    pr = r; pc = c; best = av;
                    if (best == 1) goto found;
                }
            }
        if (pr < 0) break;  // submatrix is zero
    found:
        swap_rows(t, pr);
        swap_cols(t, pc);

        for (;;) {
            bool restart = false;
            // clear column t
            for (long r = t + 1; r < rows && !restart; ++r) {
                if (A.at(r, t) == 0) continue;
                Int q = A.at(r, t) / A.at(t, t);  // truncating
                add_row(r, t, -q);
                if (A.at(r, t) != 0) {
                    swap_rows(r, t);  // strictly smaller pivot
                    restart = true;
                }
            }
            if (restart) continue;
            // clear row t
            for (long c = t + 1; c < cols && !restart; ++c) {
                if (A.at(t, c) == 0) continue;
                Int q = A.at(t, c) / A.at(t, t);
                add_col(c, t, -q);
                if (A.at(t, c) != 0) {
                    swap_cols(c, t);
                    restart = true;
                }
            }
            if (restart) continue;
            // enforce divisibility of the remaining block by the pivot
            bool fixed = false;
            for (long r = t + 1; r < rows && !fixed; ++r)
                for (long c = t + 1; c < cols && !fixed; ++c)
                    if (A.at(r, c) % A.at(t, t) != 0) {
                        add_row(t, r, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (A.at(t, t) < 0) negate_row(t);
    }

    SNFResult res;
    res.diagonal.resize(std::min(rows, cols));
    for (long i = 0; i < std::min(rows, cols); ++i) res.diagonal[i] = A.at(i, i);
    if (with_transforms) {
        res.left = std::move(U);
        res.right = std::move(V);
    }
    return res;
}

/// Eliminates ±1 pivots on a sparse map-of-maps representation; each such
/// pivot contributes a diagonal 1. Returns the dense leftover core.
IntMatrix sparse_unit_prereduce(const SignMatrix& S, long& ones) {
    std::map<long, std::map<long, Int>> row;  // row -> col -> value
    for (auto& e : S.entries) {
        if (e.sign == 0) continue;
        Int& v = row[e.row][e.col];
        v += e.sign;
        if (v == 0) row[e.row].erase(e.col);
    }
    for (auto it = row.begin(); it != row.end();) {
        if (it->second.empty()) it = row.erase(it); else ++it;
    }
    ones = 0;
    for (;;) {
        // find a ±1 entry in the sparsest available row
        long pr = -1, pc = -1;
        std::size_t best_len = 0;
        for (auto& [r, cols] : row) {
            long unit_col = -1;
            for (auto& [c, v] : cols)
                if (v == 1 || v == -1) { unit_col = c; break; }
            if (unit_col >= 0 && (pr < 0 || cols.size() < best_len)) {
                pr = r;
                pc = unit_col;
                best_len = cols.size();
            }
        }
        if (pr < 0) break;
        Int pivot = row[pr][pc];
        std::map<long, Int> prow = row[pr];
        row.erase(pr);
        for (auto it = row.begin(); it != row.end();) {
            auto& cols = it->second;
            auto hit = cols.find(pc);
            if (hit != cols.end()) {
                Int factor = hit->second * pivot;  // pivot = ±1 so pivot^-1 = pivot
                for (auto& [c, v] : prow) {
                    if (c == pc) continue;
                    Int& dst = cols[c];
                    dst -= factor * v;
                    if (dst == 0) cols.erase(c);
                }
                cols.erase(pc);
            }
            if (cols.empty()) it = row.erase(it); else ++it;
        }
        ++ones;
    }
    // compress the leftover into a dense core
    std::map<long, long> rmap, cmap;
    for (auto& [r, cols] : row) {
        if (!rmap.count(r)) rmap[r] = static_cast<long>(rmap.size());
        for (auto& [c, v] : cols)
            if (!cmap.count(c)) cmap[c] = static_cast<long>(cmap.size());
    }
    IntMatrix core(static_cast<long>(rmap.size()), static_cast<long>(cmap.size()));
    for (auto& [r, cols] : row)
        for (auto& [c, v] : cols) core.at(rmap[r], cmap[c]) = v;
    return core;
}

constexpr long long kDenseLimit = 20000;  // rows*cols threshold for sparse paths

}  // namespace

SNFResult smith_normal_form(const IntMatrix& A, bool with_transforms) {
    return snf_dense(A, with_transforms);
}

SNFResult smith_normal_form(const SignMatrix& S, bool with_transforms) {
    if (with_transforms) return snf_dense(IntMatrix::from_sign(S), true);
    long ones = 0;
    IntMatrix core = sparse_unit_prereduce(S, ones);
    SNFResult inner = snf_dense(core, false);
    SNFResult res;
    res.diagonal.assign(std::min(S.rows, S.cols), Int(0));
    long k = 0;
    for (long i = 0; i < ones; ++i) res.diagonal[k++] = 1;
    for (const Int& d : inner.diagonal)
        if (d != 0) res.diagonal[k++] = d;
    return res;
}

long rank_over_q_dense(const IntMatrix& A) {
    // fraction-free Bareiss elimination
    IntMatrix M = A;
    long rows = M.rows(), cols = M.cols();
    Int prev = 1;
    long rank = 0;
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long pivot = -1;
        for (long i = r; i < rows; ++i)
            if (M.at(i, c) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (long j = 0; j < cols; ++j) std::swap(M.at(pivot, j), M.at(r, j));
        for (long i = r + 1; i < rows; ++i) {
            for (long j = c + 1; j < cols; ++j)
                M.at(i, j) = (M.at(r, c) * M.at(i, j) - M.at(i, c) * M.at(r, j)) / prev;
            M.at(i, c) = 0;
        }
        prev = M.at(r, c);
        ++r;
        ++rank;
    }
    return rank;
}

long rank_over_q_sparse(const SignMatrix& S) {
    long ones = 0;
    IntMatrix core = sparse_unit_prereduce(S, ones);
    return ones + rank_over_q_dense(core);
}

long rank_over_q(const SignMatrix& S) {
    if (static_cast<long long>(S.rows) * S.cols > kDenseLimit) return rank_over_q_sparse(S);
    return rank_over_q_dense(IntMatrix::from_sign(S));
}

FpCtx::value FpCtx::inv(value a) const {
    // extended Euclid
    value t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        value q = r / new_r;
        t -= q * new_t; std::swap(t, new_t);
        r -= q * new_r; std::swap(r, new_r);
    }
    if (r != 1) throw std::domain_error("FpCtx::inv: not invertible");
    return t < 0 ? t + p : t;
}

long rank_over_fp_dense(const SignMatrix& S, std::int64_t p) {
    FpCtx ctx{p};
    Mat<FpCtx> M = Mat<FpCtx>::from_sign(S, ctx);
    long rows = M.rows, cols = M.cols;
    long rank = 0, r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long pivot = -1;
        for (long i = r; i < rows; ++i)
            if (M.at(i, c) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (long j = c; j < cols; ++j) std::swap(M.at(pivot, j), M.at(r, j));
        std::int64_t inv = ctx.inv(M.at(r, c));
        for (long i = r + 1; i < rows; ++i) {
            if (M.at(i, c) == 0) continue;
            std::int64_t f = ctx.mul(M.at(i, c), inv);
            for (long j = c; j < cols; ++j)
                M.at(i, j) = ctx.sub(M.at(i, j), ctx.mul(f, M.at(r, j)));
        }
        ++r;
        ++rank;
    }
    return rank;
}

long rank_over_fp_sparse(const SignMatrix& S, std::int64_t p) {
    // left-to-right column reduction on the lowest nonzero row index
    FpCtx ctx{p};
    std::vector<std::vector<std::pair<long, std::int64_t>>> col(S.cols);
    for (auto& e : S.entries) col[e.col].push_back({e.row, ctx.from_int(e.sign)});
    for (auto& c : col) {
        std::sort(c.begin(), c.end());
        // combine duplicates
        std::vector<std::pair<long, std::int64_t>> out;
        for (auto& [r, v] : c) {
            if (!out.empty() && out.back().first == r)
                out.back().second = ctx.add(out.back().second, v);
            else
                out.push_back({r, v});
        }
        std::erase_if(out, [](auto& e) { return e.second == 0; });
        c = std::move(out);
    }
    auto low = [](const std::vector<std::pair<long, std::int64_t>>& c) { return c.back().first; };
    std::map<long, long> low_to_col;
    long rank = 0;
    for (long j = 0; j < S.cols; ++j) {
        while (!col[j].empty()) {
            auto it = low_to_col.find(low(col[j]));
            if (it == low_to_col.end()) break;
            const auto& other = col[it->second];
            std::int64_t f = ctx.div(col[j].back().second, other.back().second);
            // col[j] -= f * other
            std::vector<std::pair<long, std::int64_t>> merged;
            std::size_t a = 0, b = 0;
            while (a < col[j].size() || b < other.size()) {
                if (b == other.size() || (a < col[j].size() && col[j][a].first < other[b].first)) {
                    merged.push_back(col[j][a++]);
                } else if (a == col[j].size() || other[b].first < col[j][a].first) {
                    merged.push_back({other[b].first, ctx.neg(ctx.mul(f, other[b].second))});
                    ++b;
                } else {
                    std::int64_t v = ctx.sub(col[j][a].second, ctx.mul(f, other[b].second));
                    if (v != 0) merged.push_back({col[j][a].first, v});
                    ++a; ++b;
                }
            }
            col[j] = std::move(merged);
        }
        if (!col[j].empty()) {
            low_to_col[low(col[j])] = j;
            ++rank;
        }
    }
    return rank;
}

long rank_over_fp(const SignMatrix& S, std::int64_t p) {
    if (static_cast<long long>(S.rows) * S.cols > kDenseLimit) return rank_over_fp_sparse(S, p);
    return rank_over_fp_dense(S, p);
}

template <class Ctx>
std::vector<long> rref(const Ctx& ctx, Mat<Ctx>& M, const std::vector<long>& col_order) {
    std::vector<long> order;
    if (col_order.empty()) {
        order.resize(M.cols);
        for (long c = 0; c < M.cols; ++c) order[c] = c;
    } else {
        order = col_order;
    }
    std::vector<long> pivots;
    long r = 0;
    for (long oc = 0; oc < static_cast<long>(order.size()) && r < M.rows; ++oc) {
        long c = order[oc];
        long pivot = -1;
        for (long i = r; i < M.rows; ++i)
            if (!ctx.is_zero(M.at(i, c))) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (long j = 0; j < M.cols; ++j) std::swap(M.at(pivot, j), M.at(r, j));
        auto inv = ctx.inv(M.at(r, c));
        for (long j = 0; j < M.cols; ++j) M.at(r, j) = ctx.mul(M.at(r, j), inv);
        for (long i = 0; i < M.rows; ++i) {
            if (i == r || ctx.is_zero(M.at(i, c))) continue;
            auto f = M.at(i, c);
            for (long j = 0; j < M.cols; ++j)
                M.at(i, j) = ctx.sub(M.at(i, j), ctx.mul(f, M.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class Ctx>
LinearSolution<Ctx> solve_linear(const Ctx& ctx, const Mat<Ctx>& A,
                                 const std::vector<typename Ctx::value>& b,
                                 const std::vector<long>& col_order) {
    using value = typename Ctx::value;
    if (static_cast<long>(b.size()) != A.rows)
        throw std::invalid_argument("solve_linear: dimension mismatch");
    Mat<Ctx> aug(A.rows, A.cols + 1);
    for (long r = 0; r < A.rows; ++r) {
        for (long c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, A.cols) = b[r];
    }
    std::vector<long> order;
    if (col_order.empty()) {
        order.resize(A.cols);
        for (long c = 0; c < A.cols; ++c) order[c] = c;
    } else {
        order = col_order;
    }
    order.push_back(A.cols);  // augmented column last; a pivot there means inconsistency
    std::vector<long> pivots = rref(ctx, aug, order);

    LinearSolution<Ctx> out;
    std::vector<long> pivot_row_of_col(A.cols, -1);
    bool consistent = true;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == A.cols) { consistent = false; break; }
        pivot_row_of_col[pivots[i]] = static_cast<long>(i);
    }
    if (consistent) {
        std::vector<value> x(A.cols, ctx.from_int(0));
        for (long c = 0; c < A.cols; ++c)
            if (pivot_row_of_col[c] >= 0) x[c] = aug.at(pivot_row_of_col[c], A.cols);
        out.solution = std::move(x);
    }
    // kernel basis: one vector per free column, in the traversal order
    for (long oc = 0; oc < static_cast<long>(order.size()); ++oc) {
        long c = order[oc];
        if (c == A.cols || pivot_row_of_col[c] >= 0) continue;
        std::vector<value> k(A.cols, ctx.from_int(0));
        k[c] = ctx.from_int(1);
        for (long pc = 0; pc < A.cols; ++pc)
            if (pivot_row_of_col[pc] >= 0)
                k[pc] = ctx.neg(aug.at(pivot_row_of_col[pc], c));
        out.kernel.push_back(std::move(k));
    }
    return out;
}

template std::vector<long> rref<FpCtx>(const FpCtx&, Mat<FpCtx>&, const std::vector<long>&);
template std::vector<long> rref<RatCtx>(const RatCtx&, Mat<RatCtx>&, const std::vector<long>&);
template LinearSolution<FpCtx> solve_linear<FpCtx>(const FpCtx&, const Mat<FpCtx>&,
                                                   const std::vector<FpCtx::value>&,
                                                   const std::vector<long>&);
template LinearSolution<RatCtx> solve_linear<RatCtx>(const RatCtx&, const Mat<RatCtx>&,
                                                     const std::vector<RatCtx::value>&,
                                                     const std::vector<long>&);

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace torfacet
