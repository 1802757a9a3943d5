#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "torfacet/betti.hpp"
#include "torfacet/classspace.hpp"
#include "torfacet/complex.hpp"
#include "torfacet/koszul.hpp"

namespace torfacet {

/// Betti table through Hochster's formula (computation path B): for every
/// ω ⊆ [m] the reduced cohomology of the full subcomplex K_ω lands in the
/// cells (-(|ω|-p-1), 2|ω|). Full subcomplexes that are cones contribute
/// nothing and are skipped when prune is set (asserted separately in tests).
BettiTable betti_table_hochster(const SimplicialComplex& K, const Coefficients& coeff,
                                int threads = 1, bool prune = true);

/// A multidegree ω together with a degree-p reduced cochain representative on
/// K_ω (faces kept in global labels). Under the degree dictionary this
/// represents a class in H^{p+1-|ω|, 2ω}(Z_K).
template <class Ctx>
struct MultigradedClass {
    Subset omega;
    int degree = -1;                                    ///< p >= -1
    std::map<Subset, typename Ctx::value> cochain;      ///< σ ⊆ ω, σ ∈ K, |σ| = p+1

    bool zero() const { return cochain.empty(); }
    void add_term(const Ctx& ctx, Subset sigma, typename Ctx::value coeff) {
        auto it = cochain.find(sigma);
        if (it == cochain.end()) {
            if (!ctx.is_zero(coeff)) cochain.emplace(sigma, std::move(coeff));
        } else {
            it->second = ctx.add(it->second, coeff);
            if (ctx.is_zero(it->second)) cochain.erase(it);
        }
    }
};

using RatMultigradedClass = MultigradedClass<RatCtx>;

/// Baskakov product: zero when the multidegrees meet; otherwise the join
/// cochain f(a⊗b) restricted along K_{ω1∪ω2} ↪ K_{ω1} * K_{ω2}. The term
/// sign is the shuffle parity of (σ1, σ2) times a per-block factor fixed so
/// that gamma_iso is multiplicative for this library's sign conventions.
template <class Ctx>
MultigradedClass<Ctx> baskakov_product(const Ctx& ctx, const SimplicialComplex& K,
                                       const MultigradedClass<Ctx>& a,
                                       const MultigradedClass<Ctx>& b) {
    MultigradedClass<Ctx> out{a.omega | b.omega, a.degree + b.degree + 1, {}};
    if (a.omega.intersects(b.omega)) return out;
    int block = a.omega.inversions_with(b.omega) + (b.degree + 1) * a.omega.size();
    for (auto& [s1, c1] : a.cochain)
        for (auto& [s2, c2] : b.cochain) {
            Subset tau = s1 | s2;
            if (!K.is_face(tau)) continue;
            auto c = ctx.mul(c1, c2);
            if ((s1.inversions_with(s2) + block) % 2 != 0) c = ctx.neg(c);
            out.add_term(ctx, tau, c);
        }
    return out;
}

/// γ: σ* ↦ ± u_{ω∖σ} v_σ, the cochain-level map inducing Baskakov's ring
/// isomorphism ⊕_ω H̃*(K_ω) ≅ H*(Z_K). The sign makes it a chain map for the
/// simplicial coboundary and Koszul differential used here.
template <class Ctx>
KoszulElement<Ctx> gamma_iso(const Ctx& ctx, const MultigradedClass<Ctx>& a) {
    KoszulElement<Ctx> out;
    for (auto& [sigma, coeff] : a.cochain) {
        int s = sigma.size();
        int exp = sigma.inversions_with(a.omega - sigma) + s * (s - 1) / 2;
        out.add_term(ctx, {a.omega - sigma, sigma}, exp % 2 != 0 ? ctx.neg(coeff) : coeff);
    }
    return out;
}

/// Class-level workspace on the Hochster side: per-ω reduced cochain
/// complexes of K_ω with deterministic representatives. Not thread-safe.
template <class Ctx>
class HochsterWorkspace {
public:
    HochsterWorkspace(SimplicialComplex K, Ctx ctx) : K_(std::move(K)), ctx_(ctx) {}

    const SimplicialComplex& complex() const { return K_; }

    bool is_cocycle(const MultigradedClass<Ctx>& a);
    /// Basis of H̃^p(K_ω) with lifted representatives.
    std::vector<MultigradedClass<Ctx>> classes(Subset omega, int p);
    /// Coordinates w.r.t. classes(ω, p); nullopt when not a cocycle.
    std::optional<std::vector<typename Ctx::value>> class_coords(const MultigradedClass<Ctx>& a);
    bool is_zero_class(const MultigradedClass<Ctx>& a);
    long rank(Subset omega, int p);

private:
    struct BlockData {
        std::vector<std::vector<Subset>> faces;  ///< faces[s]: size-s faces of K_ω, sorted
        std::unique_ptr<ClassSpace<Ctx>> space;  ///< degrees -1..dim K_ω
        long index_of(int p, Subset sigma) const;
    };
    BlockData& block(Subset omega);

    SimplicialComplex K_;
    Ctx ctx_;
    std::map<Subset, BlockData> blocks_;
};

struct GolodScreenResult {
    bool products_vanish = true;
    // witness pair, serialized descriptors of the two classes
    std::string witness_a, witness_b;
};

/// Necessary-condition screen for Golodness: all pairwise Baskakov products
/// of positive-degree multigraded classes vanish in cohomology. Field
/// coefficients only; returns the first nonvanishing pair as witness.
GolodScreenResult golod_product_screen(const SimplicialComplex& K, const Coefficients& coeff);

// ---- template definitions --------------------------------------------------

template <class Ctx>
long HochsterWorkspace<Ctx>::BlockData::index_of(int p, Subset sigma) const {
    int s = p + 1;
    if (s < 0 || s >= static_cast<int>(faces.size())) return -1;
    auto& level = faces[s];
    auto it = std::lower_bound(level.begin(), level.end(), sigma);
    if (it == level.end() || *it != sigma) return -1;
    return static_cast<long>(it - level.begin());
}

template <class Ctx>
typename HochsterWorkspace<Ctx>::BlockData& HochsterWorkspace<Ctx>::block(Subset omega) {
    auto it = blocks_.find(omega);
    if (it != blocks_.end()) return it->second;
    BlockData data;
    SimplicialComplex restricted = full_subcomplex_global(K_, omega);
    int top = restricted.dim() + 1;
    data.faces.assign(top + 1, {});
    for (Subset f : restricted.all_faces()) data.faces[f.size()].push_back(f);
    for (auto& level : data.faces) std::sort(level.begin(), level.end());

    std::vector<long> dims;
    for (int s = 0; s <= top; ++s) dims.push_back(static_cast<long>(data.faces[s].size()));
    std::vector<SignMatrix> d;
    for (int s = 0; s + 1 <= top; ++s) {
        SignMatrix M;
        M.rows = static_cast<long>(data.faces[s + 1].size());
        M.cols = static_cast<long>(data.faces[s].size());
        for (std::size_t col = 0; col < data.faces[s].size(); ++col) {
            Subset sigma = data.faces[s][col];
            for (int k : (omega - sigma).vertices()) {
                Subset tau = sigma.with(k);
                long row = data.index_of(s, tau);  // s = |tau| - 1
                if (row >= 0) M.add(row, static_cast<long>(col), tau.position_of(k) % 2 == 0 ? 1 : -1);
            }
        }
        d.push_back(std::move(M));
    }
    data.space = std::make_unique<ClassSpace<Ctx>>(ctx_, -1, std::move(dims), std::move(d));
    return blocks_.emplace(omega, std::move(data)).first->second;
}

template <class Ctx>
bool HochsterWorkspace<Ctx>::is_cocycle(const MultigradedClass<Ctx>& a) {
    BlockData& b = block(a.omega);
    std::vector<typename Ctx::value> vec(b.faces[a.degree + 1].size(), ctx_.from_int(0));
    for (auto& [sigma, coeff] : a.cochain) {
        long idx = b.index_of(a.degree, sigma);
        if (idx < 0) throw std::invalid_argument("MultigradedClass: cochain term is not a face of K_ω");
        vec[idx] = coeff;
    }
    return b.space->is_cocycle(a.degree, vec);
}

template <class Ctx>
std::vector<MultigradedClass<Ctx>> HochsterWorkspace<Ctx>::classes(Subset omega, int p) {
    BlockData& b = block(omega);
    std::vector<MultigradedClass<Ctx>> out;
    if (p + 1 < 0 || p + 1 >= static_cast<int>(b.faces.size())) return out;
    for (auto& rep : b.space->class_reps(p)) {
        MultigradedClass<Ctx> cls{omega, p, {}};
        for (std::size_t r = 0; r < rep.size(); ++r)
            if (!ctx_.is_zero(rep[r])) cls.add_term(ctx_, b.faces[p + 1][r], rep[r]);
        out.push_back(std::move(cls));
    }
    return out;
}

template <class Ctx>
std::optional<std::vector<typename Ctx::value>> HochsterWorkspace<Ctx>::class_coords(
    const MultigradedClass<Ctx>& a) {
    BlockData& b = block(a.omega);
    int s = a.degree + 1;
    if (s < 0 || s >= static_cast<int>(b.faces.size())) {
        // no faces in this degree: the zero cochain, zero class
        if (!a.cochain.empty()) throw std::invalid_argument("MultigradedClass: term outside K_ω");
        return std::vector<typename Ctx::value>{};
    }
    std::vector<typename Ctx::value> vec(b.faces[s].size(), ctx_.from_int(0));
    for (auto& [sigma, coeff] : a.cochain) {
        long idx = b.index_of(a.degree, sigma);
        if (idx < 0) throw std::invalid_argument("MultigradedClass: cochain term is not a face of K_ω");
        vec[idx] = coeff;
    }
    return b.space->class_coords(a.degree, vec);
}

template <class Ctx>
bool HochsterWorkspace<Ctx>::is_zero_class(const MultigradedClass<Ctx>& a) {
    auto coords = class_coords(a);
    if (!coords) throw std::invalid_argument("is_zero_class: not a cocycle");
    for (auto& v : *coords)
        if (!ctx_.is_zero(v)) return false;
    return true;
}

template <class Ctx>
long HochsterWorkspace<Ctx>::rank(Subset omega, int p) {
    BlockData& b = block(omega);
    if (p + 1 < 0 || p + 1 >= static_cast<int>(b.faces.size())) return 0;
    return static_cast<long>(b.space->class_reps(p).size());
}

}  // namespace torfacet
