#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "torfacet/betti.hpp"
#include "torfacet/classspace.hpp"
#include "torfacet/complex.hpp"
#include "torfacet/homology.hpp"
#include "torfacet/serialize.hpp"

namespace torfacet {

/// Basis monomial u_ω v_σ of R*(K) = Λ[u_1..u_m] ⊗ k[K] / (v_i² = u_i v_i = 0):
/// ω and σ disjoint, σ a face of K.
/// bideg = (-|ω|, 2|ω|+2|σ|), multidegree ω ∪ σ.
struct KoszulMonomial {
    Subset omega;
    Subset sigma;

    int i() const { return omega.size(); }
    int j2() const { return 2 * (omega.size() + sigma.size()); }
    int total_degree() const { return j2() - i(); }
    Subset multidegree() const { return omega | sigma; }
    bool admissible(const SimplicialComplex& K) const {
        return !omega.intersects(sigma) && K.is_face(sigma);
    }

    auto operator<=>(const KoszulMonomial&) const = default;
    std::string str() const;
};

/// Exact-coefficient linear combination of admissible monomials; the term map
/// is canonical (no zero coefficients).
template <class Ctx>
struct KoszulElement {
    std::map<KoszulMonomial, typename Ctx::value> terms;

    bool zero() const { return terms.empty(); }
    void add_term(const Ctx& ctx, const KoszulMonomial& mono, typename Ctx::value coeff) {
        auto it = terms.find(mono);
        if (it == terms.end()) {
            if (!ctx.is_zero(coeff)) terms.emplace(mono, std::move(coeff));
        } else {
            it->second = ctx.add(it->second, coeff);
            if (ctx.is_zero(it->second)) terms.erase(it);
        }
    }
    /// All terms have one bidegree (checked by callers where required).
    std::optional<std::pair<int, int>> bidegree() const {
        std::optional<std::pair<int, int>> bd;
        for (auto& [mono, c] : terms) {
            std::pair<int, int> here{mono.i(), mono.j2()};
            if (!bd) bd = here;
            else if (*bd != here) return std::nullopt;
        }
        return bd;
    }
    std::string str() const;
};

using RatKoszulElement = KoszulElement<RatCtx>;

/// d(u_ω v_σ) = Σ_{k∈ω, σ∪k ∈ K} (-1)^{pos_ω(k)} u_{ω∖k} v_{σ∪k};
/// terms whose v-part leaves K are dropped (they lie in the ideal).
template <class Ctx>
KoszulElement<Ctx> differential(const Ctx& ctx, const SimplicialComplex& K, const KoszulElement<Ctx>& x);

template <class Ctx>
bool is_cocycle(const Ctx& ctx, const SimplicialComplex& K, const KoszulElement<Ctx>& x) {
    return differential(ctx, K, x).zero();
}

/// Product of basis monomials; zero on any relation (shared u-indices, shared
/// v-indices, u_i v_i across factors, or a v-support outside K). The sign is
/// the shuffle parity of the two exterior parts.
std::optional<std::pair<KoszulMonomial, int>> monomial_product(const SimplicialComplex& K,
                                                               const KoszulMonomial& a,
                                                               const KoszulMonomial& b);

/// Bilinear extension of the monomial product. Inputs must be cocycles
/// (checked); the result is then a cocycle representing the cup product.
template <class Ctx>
KoszulElement<Ctx> cup_product(const Ctx& ctx, const SimplicialComplex& K,
                               const KoszulElement<Ctx>& x, const KoszulElement<Ctx>& y);

/// Cochain-level product without the cocycle requirement (used internally for
/// Massey expressions like a·f with f an arbitrary cochain).
template <class Ctx>
KoszulElement<Ctx> chain_product(const Ctx& ctx, const SimplicialComplex& K,
                                 const KoszulElement<Ctx>& x, const KoszulElement<Ctx>& y);

/// The multidegree-ω component of R*(K): basis[i] lists the faces σ ⊆ ω with
/// |ω∖σ| = i (so the monomial is u_{ω∖σ} v_σ), and diff[i] is the
/// differential C^{-(i+1)} -> C^{-i}.
struct MultidegreeBlock {
    Subset omega;
    std::vector<std::vector<Subset>> basis;
    std::vector<SignMatrix> diff;

    long index_of(int i, Subset sigma) const;  ///< -1 when absent
};

MultidegreeBlock multidegree_complex(const SimplicialComplex& K, Subset omega);

/// Cohomology H^{-i,2ω} of one multidegree component.
std::map<int, HomologyGroup> multidegree_cohomology(const SimplicialComplex& K, Subset omega,
                                                    const Coefficients& coeff);

/// Betti table from the 2^m multidegree components (computation path A).
BettiTable betti_table_koszul(const SimplicialComplex& K, const Coefficients& coeff, int threads = 1);

/// Small-m oracle: assembles all of R*(K) per column degree 2j without the
/// multidegree splitting. Must agree with betti_table_koszul (no multigraded
/// refinement is produced).
BettiTable betti_table_koszul_monolithic(const SimplicialComplex& K, const Coefficients& coeff);

/// Field-coefficient workspace for class-level work in R*(K): cocycle checks,
/// cohomology bases with deterministic representatives, class coordinates,
/// and solving d e = z. Caches per-multidegree eliminations; not thread-safe.
template <class Ctx>
class KoszulWorkspace {
public:
    KoszulWorkspace(SimplicialComplex K, Ctx ctx) : K_(std::move(K)), ctx_(ctx) {}

    const SimplicialComplex& complex() const { return K_; }
    const Ctx& ctx() const { return ctx_; }

    bool is_cocycle(const KoszulElement<Ctx>& x) { return torfacet::is_cocycle(ctx_, K_, x); }

    /// Class coordinates per (ω, i) component; nullopt if not a cocycle.
    std::optional<std::map<std::pair<Subset, int>, std::vector<typename Ctx::value>>> class_coords(
        const KoszulElement<Ctx>& x);

    bool is_zero_class(const KoszulElement<Ctx>& x);

    /// Representatives of a basis of H^{-i,2ω}.
    std::vector<KoszulElement<Ctx>> block_classes(Subset omega, int i);

    /// Basis of H^deg(Z_K) across all multidegrees, ascending ω.
    std::vector<KoszulElement<Ctx>> cohomology_basis_total_degree(int deg);

    /// First-echelon e with d e = z; nullopt when z is not a coboundary.
    /// reverse_pivots flips the solver's variable order (determinism checks).
    std::optional<KoszulElement<Ctx>> solve_differential(const KoszulElement<Ctx>& z,
                                                         bool reverse_pivots = false);

    const MultidegreeBlock& block_structure(Subset omega);

private:
    struct BlockData {
        MultidegreeBlock structure;
        std::unique_ptr<ClassSpace<Ctx>> space;  ///< degrees -|ω|..0
    };
    BlockData& block(Subset omega);
    std::vector<typename Ctx::value> component_vector(const BlockData& b, int i,
                                                      const KoszulElement<Ctx>& x) const;

    SimplicialComplex K_;
    Ctx ctx_;
    std::map<Subset, BlockData> blocks_;
};

// ---- serialization ---------------------------------------------------------

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

Json koszul_element_to_json(const RatKoszulElement& x);
RatKoszulElement koszul_element_from_json(const Json& j, const SimplicialComplex& K);

// ---- template definitions --------------------------------------------------

template <class Ctx>
KoszulElement<Ctx> differential(const Ctx& ctx, const SimplicialComplex& K, const KoszulElement<Ctx>& x) {
    KoszulElement<Ctx> out;
    for (auto& [mono, coeff] : x.terms) {
        int pos = 0;
        for (int k : mono.omega.vertices()) {
            Subset sigma = mono.sigma.with(k);
            if (K.is_face(sigma)) {
                auto c = (pos % 2 == 0) ? coeff : ctx.neg(coeff);
                out.add_term(ctx, {mono.omega.without(k), sigma}, c);
            }
            ++pos;
        }
    }
    return out;
}

template <class Ctx>
KoszulElement<Ctx> chain_product(const Ctx& ctx, const SimplicialComplex& K,
                                 const KoszulElement<Ctx>& x, const KoszulElement<Ctx>& y) {
    KoszulElement<Ctx> out;
    for (auto& [ma, ca] : x.terms)
        for (auto& [mb, cb] : y.terms) {
            auto prod = monomial_product(K, ma, mb);
            if (!prod) continue;
            auto c = ctx.mul(ca, cb);
            if (prod->second < 0) c = ctx.neg(c);
            out.add_term(ctx, prod->first, c);
        }
    return out;
}

template <class Ctx>
KoszulElement<Ctx> cup_product(const Ctx& ctx, const SimplicialComplex& K,
                               const KoszulElement<Ctx>& x, const KoszulElement<Ctx>& y) {
    if (!is_cocycle(ctx, K, x) || !is_cocycle(ctx, K, y))
        throw std::invalid_argument("cup_product: inputs must be cocycles");
    return chain_product(ctx, K, x, y);
}

inline std::string coeff_str(const Rat& r) { return rat_to_string(r); }
inline std::string coeff_str(std::int64_t v) { return std::to_string(v); }

template <class Ctx>
std::string KoszulElement<Ctx>::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (auto& [mono, coeff] : terms) {
        std::string c = coeff_str(coeff);
        bool negative = !c.empty() && c[0] == '-';
        if (negative) c = c.substr(1);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (c != "1") out += c + "*";
        out += mono.str();
    }
    return out;
}

template <class Ctx>
typename KoszulWorkspace<Ctx>::BlockData& KoszulWorkspace<Ctx>::block(Subset omega) {
    auto it = blocks_.find(omega);
    if (it != blocks_.end()) return it->second;
    BlockData data;
    data.structure = multidegree_complex(K_, omega);
    int w = omega.size();
    std::vector<long> dims;
    std::vector<SignMatrix> d;
    for (int k = 0; k <= w; ++k) dims.push_back(static_cast<long>(data.structure.basis[w - k].size()));
    for (int k = 0; k + 1 <= w; ++k) d.push_back(data.structure.diff[w - k - 1]);
    data.space = std::make_unique<ClassSpace<Ctx>>(ctx_, -w, std::move(dims), std::move(d));
    return blocks_.emplace(omega, std::move(data)).first->second;
}

template <class Ctx>
const MultidegreeBlock& KoszulWorkspace<Ctx>::block_structure(Subset omega) {
    return block(omega).structure;
}

template <class Ctx>
std::vector<typename Ctx::value> KoszulWorkspace<Ctx>::component_vector(
    const BlockData& b, int i, const KoszulElement<Ctx>& x) const {
    std::vector<typename Ctx::value> vec(b.structure.basis[i].size(), ctx_.from_int(0));
    for (auto& [mono, coeff] : x.terms) {
        if (mono.multidegree() != b.structure.omega || mono.i() != i) continue;
        long idx = b.structure.index_of(i, mono.sigma);
        if (idx < 0) throw std::logic_error("KoszulWorkspace: monomial outside block basis");
        vec[idx] = coeff;
    }
    return vec;
}

template <class Ctx>
std::optional<std::map<std::pair<Subset, int>, std::vector<typename Ctx::value>>>
KoszulWorkspace<Ctx>::class_coords(const KoszulElement<Ctx>& x) {
    if (!is_cocycle(x)) return std::nullopt;
    std::map<std::pair<Subset, int>, bool> components;
    for (auto& [mono, c] : x.terms) components[{mono.multidegree(), mono.i()}] = true;
    std::map<std::pair<Subset, int>, std::vector<typename Ctx::value>> out;
    for (auto& [key, unused] : components) {
        BlockData& b = block(key.first);
        auto vec = component_vector(b, key.second, x);
        auto coords = b.space->class_coords(-key.second, vec);
        if (!coords) throw std::logic_error("KoszulWorkspace: component not a cocycle");
        out[key] = std::move(*coords);
    }
    return out;
}

template <class Ctx>
bool KoszulWorkspace<Ctx>::is_zero_class(const KoszulElement<Ctx>& x) {
    auto coords = class_coords(x);
    if (!coords) throw std::invalid_argument("is_zero_class: not a cocycle");
    for (auto& [key, vec] : *coords)
        for (auto& v : vec)
            if (!ctx_.is_zero(v)) return false;
    return true;
}

template <class Ctx>
std::vector<KoszulElement<Ctx>> KoszulWorkspace<Ctx>::block_classes(Subset omega, int i) {
    BlockData& b = block(omega);
    std::vector<KoszulElement<Ctx>> out;
    if (i < 0 || i > omega.size()) return out;
    for (auto& rep : b.space->class_reps(-i)) {
        KoszulElement<Ctx> x;
        for (std::size_t r = 0; r < rep.size(); ++r)
            if (!ctx_.is_zero(rep[r]))
                x.add_term(ctx_, {omega - b.structure.basis[i][r], b.structure.basis[i][r]}, rep[r]);
        out.push_back(std::move(x));
    }
    return out;
}

template <class Ctx>
std::vector<KoszulElement<Ctx>> KoszulWorkspace<Ctx>::cohomology_basis_total_degree(int deg) {
    std::vector<KoszulElement<Ctx>> out;
    for (Subset omega : SubsetRange(K_.vertex_count())) {
        int i = 2 * omega.size() - deg;
        if (i < 0 || i > omega.size()) continue;
        // cones contribute nothing; skip them without building the block
        if (!omega.empty()) {
            SimplicialComplex restricted = full_subcomplex_global(K_, omega);
            if (restricted.cone_apex()) continue;
        }
        for (auto& cls : block_classes(omega, i)) out.push_back(std::move(cls));
    }
    return out;
}

template <class Ctx>
std::optional<KoszulElement<Ctx>> KoszulWorkspace<Ctx>::solve_differential(
    const KoszulElement<Ctx>& z, bool reverse_pivots) {
    std::map<std::pair<Subset, int>, bool> components;
    for (auto& [mono, c] : z.terms) components[{mono.multidegree(), mono.i()}] = true;
    KoszulElement<Ctx> e;
    for (auto& [key, unused] : components) {
        auto [omega, i] = key;
        BlockData& b = block(omega);
        auto vec = component_vector(b, i, z);
        std::vector<long> order;
        if (reverse_pivots) {
            long n = static_cast<long>(i + 1 <= omega.size() ? b.structure.basis[i + 1].size() : 0);
            for (long c = n - 1; c >= 0; --c) order.push_back(c);
        }
        auto sol = b.space->solve_d(-i, vec, order);
        if (!sol) return std::nullopt;
        for (std::size_t r = 0; r < sol->size(); ++r)
            if (!ctx_.is_zero((*sol)[r]))
                e.add_term(ctx_, {omega - b.structure.basis[i + 1][r], b.structure.basis[i + 1][r]}, (*sol)[r]);
    }
    return e;
}

}  // namespace torfacet
