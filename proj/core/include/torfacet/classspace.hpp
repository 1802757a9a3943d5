#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "torfacet/linalg.hpp"

namespace torfacet {

/// Deterministic class-level operations on a finite cochain complex over a
/// field: cocycle tests, cohomology bases with lifted representatives, class
/// coordinates, and solving d e = z. d[k] maps degree lo+k to lo+k+1.
/// Representatives and coordinates come from first-echelon eliminations, so
/// every answer is independent of evaluation order.
template <class Ctx>
class ClassSpace {
public:
    using value = typename Ctx::value;

    ClassSpace(Ctx ctx, int lo, std::vector<long> dims, std::vector<SignMatrix> d)
        : ctx_(ctx), lo_(lo), dims_(std::move(dims)), d_(std::move(d)) {}

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    long dim(int deg) const {
        return in_range(deg) ? dims_[deg - lo_] : 0;
    }

    bool is_cocycle(int deg, const std::vector<value>& z) const {
        if (!in_range(deg)) return true;
        const SignMatrix* out = outgoing(deg);
        if (!out) return true;
        std::vector<value> img(out->rows, ctx_.from_int(0));
        for (auto& e : out->entries)
            img[e.row] = ctx_.add(img[e.row], ctx_.mul(ctx_.from_int(e.sign), z[e.col]));
        for (auto& v : img)
            if (!ctx_.is_zero(v)) return false;
        return true;
    }

    /// Cohomology representatives in the given degree, as coefficient vectors.
    const std::vector<std::vector<value>>& class_reps(int deg) {
        return block(deg).reps;
    }

    /// Coordinates of a cocycle's class w.r.t. class_reps(deg); nullopt when
    /// z is not a cocycle.
    std::optional<std::vector<value>> class_coords(int deg, const std::vector<value>& z) {
        if (!is_cocycle(deg, z)) return std::nullopt;
        Block& b = block(deg);
        if (b.reps.empty() && b.image_rank == 0) {
            // zero cohomology and zero image: z itself must be zero
            return std::vector<value>{};
        }
        long n = dim(deg);
        long cols = static_cast<long>(b.reps.size()) + b.image_rank;
        Mat<Ctx> M(n, cols);
        for (std::size_t c = 0; c < b.reps.size(); ++c)
            for (long r = 0; r < n; ++r) M.at(r, static_cast<long>(c)) = b.reps[c][r];
        for (long c = 0; c < b.image_rank; ++c)
            for (long r = 0; r < n; ++r)
                M.at(r, static_cast<long>(b.reps.size()) + c) = b.image_basis[c][r];
        auto sol = solve_linear(ctx_, M, z);
        if (!sol.solution) throw std::logic_error("ClassSpace: cocycle outside rep+image span");
        std::vector<value> coords(sol.solution->begin(), sol.solution->begin() + b.reps.size());
        return coords;
    }

    bool is_coboundary(int deg, const std::vector<value>& z) {
        auto coords = class_coords(deg, z);
        if (!coords) return false;
        for (auto& v : *coords)
            if (!ctx_.is_zero(v)) return false;
        return true;
    }

    /// Solves d e = z with e in degree deg_z - 1 (first echelon solution);
    /// nullopt when z is not a coboundary. col_order permutes the solver's
    /// variable ordering (used to exercise pivot-independence).
    std::optional<std::vector<value>> solve_d(int deg_z, const std::vector<value>& z,
                                              const std::vector<long>& col_order = {}) {
        const SignMatrix* in = incoming(deg_z);
        if (!in) {
            for (auto& v : z)
                if (!ctx_.is_zero(v)) return std::nullopt;
            return std::vector<value>(dim(deg_z - 1), ctx_.from_int(0));
        }
        Mat<Ctx> M = Mat<Ctx>::from_sign(*in, ctx_);
        auto sol = solve_linear(ctx_, M, z, col_order);
        if (!sol.solution) return std::nullopt;
        return sol.solution;
    }

private:
    struct Block {
        long image_rank = 0;
        std::vector<std::vector<value>> image_basis;  ///< echelon basis of im(incoming)
        std::vector<std::vector<value>> reps;         ///< class representatives
    };

    bool in_range(int deg) const { return deg >= lo_ && deg <= hi(); }
    /// d out of `deg`, or null at the top.
    const SignMatrix* outgoing(int deg) const {
        long k = deg - lo_;
        return k < static_cast<long>(d_.size()) ? &d_[k] : nullptr;
    }
    /// d into `deg`, or null at the bottom.
    const SignMatrix* incoming(int deg) const {
        long k = deg - lo_ - 1;
        return (k >= 0 && k < static_cast<long>(d_.size())) ? &d_[k] : nullptr;
    }

    Block& block(int deg) {
        auto it = blocks_.find(deg);
        if (it != blocks_.end()) return it->second;
        Block b;
        long n = dim(deg);
        if (n > 0) {
            // echelon of the image of the incoming differential
            const SignMatrix* in = incoming(deg);
            std::vector<std::vector<value>> echelon;   // rows in echelon form
            std::vector<long> pivot_col;
            auto insert_vec = [&](std::vector<value> v) -> bool {
                for (std::size_t i = 0; i < echelon.size(); ++i) {
                    if (ctx_.is_zero(v[pivot_col[i]])) continue;
                    value f = v[pivot_col[i]];
                    for (long c = 0; c < n; ++c)
                        v[c] = ctx_.sub(v[c], ctx_.mul(f, echelon[i][c]));
                }
                long p = -1;
                for (long c = 0; c < n; ++c)
                    if (!ctx_.is_zero(v[c])) { p = c; break; }
                if (p < 0) return false;
                value inv = ctx_.inv(v[p]);
                for (long c = 0; c < n; ++c) v[c] = ctx_.mul(v[c], inv);
                echelon.push_back(std::move(v));
                pivot_col.push_back(p);
                return true;
            };
            if (in) {
                Mat<Ctx> M = Mat<Ctx>::from_sign(*in, ctx_);
                for (long c = 0; c < M.cols; ++c) {
                    std::vector<value> col(n);
                    for (long r = 0; r < n; ++r) col[r] = M.at(r, c);
                    std::vector<value> raw = col;
                    if (insert_vec(std::move(col))) {
                        b.image_basis.push_back(std::move(raw));
                        ++b.image_rank;
                    }
                }
            }
            // kernel of the outgoing differential; vectors extending the image
            // echelon become class representatives
            const SignMatrix* out = outgoing(deg);
            std::vector<std::vector<value>> kernel;
            if (out) {
                Mat<Ctx> M = Mat<Ctx>::from_sign(*out, ctx_);
                std::vector<value> zero(out->rows, ctx_.from_int(0));
                kernel = solve_linear(ctx_, M, zero).kernel;
            } else {
                for (long c = 0; c < n; ++c) {
                    std::vector<value> e(n, ctx_.from_int(0));
                    e[c] = ctx_.from_int(1);
                    kernel.push_back(std::move(e));
                }
            }
            for (auto& k : kernel) {
                std::vector<value> raw = k;
                if (insert_vec(std::move(k))) b.reps.push_back(std::move(raw));
            }
        }
        return blocks_.emplace(deg, std::move(b)).first->second;
    }

    Ctx ctx_;
    int lo_;
    std::vector<long> dims_;
    std::vector<SignMatrix> d_;
    std::map<int, Block> blocks_;
};

}  // namespace torfacet
