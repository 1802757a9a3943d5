#include "torfacet/massey.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace torfacet {

namespace {

int homogeneous_total_degree(const RatKoszulElement& x, const char* who) {
    if (x.zero()) return 0;
    int deg = x.terms.begin()->first.total_degree();
    for (auto& [mono, c] : x.terms)
        if (mono.total_degree() != deg)
            throw std::invalid_argument(std::string(who) + ": representative must be homogeneous in total degree");
    return deg;
}

/// Stacked class coordinates of cocycles in a common total degree: every
/// (ω,i) component appearing in any of the elements contributes a block of
/// coordinates, in ascending (ω,i) order.
std::vector<std::vector<Rat>> stacked_coords(KoszulWorkspace<RatCtx>& ws,
                                             const std::vector<const RatKoszulElement*>& elems) {
    std::set<std::pair<Subset, int>> components;
    for (auto* e : elems)
        for (auto& [mono, c] : e->terms) components.insert({mono.multidegree(), mono.i()});
    std::vector<std::vector<Rat>> out(elems.size());
    for (auto& key : components) {
        // coords of each element in this block (zero vector when absent)
        long width = -1;
        for (std::size_t k = 0; k < elems.size(); ++k) {
            RatKoszulElement component;
            RatCtx ctx;
            for (auto& [mono, c] : elems[k]->terms)
                if (mono.multidegree() == key.first && mono.i() == key.second)
                    component.add_term(ctx, mono, c);
            auto coords = ws.class_coords(component);
            if (!coords) throw std::logic_error("stacked_coords: component is not a cocycle");
            std::vector<Rat> block;
            auto it = coords->find(key);
            if (it != coords->end()) block = it->second;
            if (width < 0) {
                // all elements see the same block dimension; probe it
                width = static_cast<long>(ws.block_classes(key.first, key.second).size());
            }
            block.resize(width, Rat(0));
            out[k].insert(out[k].end(), block.begin(), block.end());
        }
    }
    return out;
}

}  // namespace

MasseyResult triple_massey(const MasseyProblem& problem, const MasseyOptions& options) {
    RatCtx ctx;
    const SimplicialComplex& K = problem.K;
    KoszulWorkspace<RatCtx> ws(K, ctx);

    for (auto* a : {&problem.a1, &problem.a2, &problem.a3})
        if (!is_cocycle(ctx, K, *a))
            throw std::invalid_argument("triple_massey: representatives must be cocycles");

    int d1 = homogeneous_total_degree(problem.a1, "a1");
    int d2 = homogeneous_total_degree(problem.a2, "a2");
    int d3 = homogeneous_total_degree(problem.a3, "a3");

    RatKoszulElement z12 = chain_product(ctx, K, problem.a1, problem.a2);
    RatKoszulElement z23 = chain_product(ctx, K, problem.a2, problem.a3);

    auto e = ws.solve_differential(z12, options.reverse_pivots);
    if (!e) throw MasseyUndefined("a1*a2");
    auto f = ws.solve_differential(z23, options.reverse_pivots);
    if (!f) throw MasseyUndefined("a2*a3");

    // w = (-1)^{deg a1 + 1} a1 f + e a3
    RatKoszulElement w = chain_product(ctx, K, problem.a1, *f);
    if ((d1 + 1) % 2 != 0) {
        RatKoszulElement neg;
        for (auto& [mono, c] : w.terms) neg.add_term(ctx, mono, ctx.neg(c));
        w = std::move(neg);
    }
    for (auto& [mono, c] : chain_product(ctx, K, *e, problem.a3).terms) w.add_term(ctx, mono, c);

    if (!is_cocycle(ctx, K, w)) throw std::logic_error("triple_massey: dw != 0");

    // indeterminacy: α1·H^{d2+d3-1} + α3·H^{d1+d2-1}
    std::vector<RatKoszulElement> spanning;
    for (auto& h : ws.cohomology_basis_total_degree(d2 + d3 - 1)) {
        auto prod = chain_product(ctx, K, problem.a1, h);
        if (!prod.zero()) spanning.push_back(std::move(prod));
    }
    for (auto& h : ws.cohomology_basis_total_degree(d1 + d2 - 1)) {
        auto prod = chain_product(ctx, K, problem.a3, h);
        if (!prod.zero()) spanning.push_back(std::move(prod));
    }

    MasseyResult result;
    result.e = std::move(*e);
    result.f = std::move(*f);

    // coset test in stacked class coordinates
    std::vector<const RatKoszulElement*> all;
    all.push_back(&w);
    for (auto& s : spanning) all.push_back(&s);
    auto coords = stacked_coords(ws, all);
    long n = coords.empty() || coords[0].empty() ? 0 : static_cast<long>(coords[0].size());

    // echelon-reduce the spanning classes to an independent basis
    std::vector<std::vector<Rat>> echelon;
    std::vector<long> pivots;
    std::vector<std::size_t> kept;
    for (std::size_t s = 1; s < coords.size(); ++s) {
        std::vector<Rat> v = coords[s];
        for (std::size_t i = 0; i < echelon.size(); ++i) {
            if (v[pivots[i]] == 0) continue;
            Rat fct = v[pivots[i]];
            for (long c = 0; c < n; ++c) v[c] -= fct * echelon[i][c];
        }
        long p = -1;
        for (long c = 0; c < n; ++c)
            if (v[c] != 0) { p = c; break; }
        if (p < 0) continue;
        Rat inv = 1 / v[p];
        for (long c = 0; c < n; ++c) v[c] *= inv;
        echelon.push_back(std::move(v));
        pivots.push_back(p);
        kept.push_back(s);
    }
    for (std::size_t s : kept) result.indeterminacy_basis.push_back(spanning[s - 1]);

    // reduce [w] against the indeterminacy span
    std::vector<Rat> v = coords.empty() ? std::vector<Rat>{} : coords[0];
    for (std::size_t i = 0; i < echelon.size(); ++i) {
        if (n == 0) break;
        if (v[pivots[i]] == 0) continue;
        Rat fct = v[pivots[i]];
        for (long c = 0; c < n; ++c) v[c] -= fct * echelon[i][c];
    }
    result.trivial = std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
    result.representative = std::move(w);
    return result;
}

NtmasComplex build_ntmas_complex(const SimplicialComplex& K1, const SimplicialComplex& K2,
                                 const SimplicialComplex& K3, Subset sigma1, Subset sigma2a,
                                 Subset sigma2b, Subset sigma3) {
    auto is_facet = [](const SimplicialComplex& K, Subset s) {
        return std::find(K.facets().begin(), K.facets().end(), s) != K.facets().end();
    };
    if (!is_facet(K1, sigma1)) throw std::invalid_argument("build_ntmas_complex: σ1 must be a facet of K1");
    if (!is_facet(K2, sigma2a) || !is_facet(K2, sigma2b))
        throw std::invalid_argument("build_ntmas_complex: σ2', σ2'' must be facets of K2");
    if (sigma2a.intersects(sigma2b) || sigma2a == sigma2b)
        throw std::invalid_argument("build_ntmas_complex: σ2' and σ2'' must be disjoint");
    if (!is_facet(K3, sigma3)) throw std::invalid_argument("build_ntmas_complex: σ3 must be a facet of K3");

    int m1 = K1.vertex_count(), m2 = K2.vertex_count(), m3 = K3.vertex_count();
    SimplicialComplex K = join(join(K1, K2), K3);
    auto shift = [](Subset s, int by) { return Subset(s.bits() << by); };
    Subset s2a = shift(sigma2a, m1), s2b = shift(sigma2b, m1), s3 = shift(sigma3, m1 + m2);

    SimplicialComplex inner = stellar_subdivision(K, s2b | s3);      // adds vertex m+1
    SimplicialComplex outer = stellar_subdivision(inner, sigma1 | s2a);  // adds vertex m+2

    NtmasComplex out{outer, {}, {}, {}};
    for (int v = 1; v <= m1; ++v) out.V1.insert(v);
    for (int v = m1 + 1; v <= m1 + m2; ++v) out.V2.insert(v);
    for (int v = m1 + m2 + 1; v <= m1 + m2 + m3; ++v) out.V3.insert(v);
    return out;
}

NtmasClasses ntmas_classes(const NtmasComplex& nt) {
    RatCtx ctx;
    const SimplicialComplex& K = nt.complex;
    HochsterWorkspace<RatCtx> hws(K, ctx);
    KoszulWorkspace<RatCtx> kws(K, ctx);

    auto generator = [&](Subset V) -> RatKoszulElement {
        SimplicialComplex KV = full_subcomplex_global(K, V);
        int n = KV.dim() + 1;
        auto classes = hws.classes(V, n - 1);
        if (classes.size() != 1)
            throw std::invalid_argument("ntmas_classes: H̃^{n-1}(K_V) must have rank 1, got " +
                                        std::to_string(classes.size()));
        return gamma_iso(ctx, classes[0]);
    };
    NtmasClasses out{generator(nt.V1), generator(nt.V2), generator(nt.V3)};

    for (auto* a : {&out.a1, &out.a2, &out.a3})
        if (!is_cocycle(ctx, K, *a) || a->zero())
            throw std::logic_error("ntmas_classes: generator is not a nonzero cocycle");
    if (!kws.is_zero_class(chain_product(ctx, K, out.a1, out.a2)))
        throw std::logic_error("ntmas_classes: α1α2 does not vanish");
    if (!kws.is_zero_class(chain_product(ctx, K, out.a2, out.a3)))
        throw std::logic_error("ntmas_classes: α2α3 does not vanish");
    return out;
}

MasseyProblem massey_demo_p3() {
    RatCtx ctx;
    MasseyProblem p{cut_cube_dual(), {}, {}, {}};
    p.a1.add_term(ctx, {Subset({2}), Subset({1})}, Rat(1));  // v1 u2
    p.a2.add_term(ctx, {Subset({4}), Subset({3})}, Rat(1));  // v3 u4
    p.a3.add_term(ctx, {Subset({6}), Subset({5})}, Rat(1));  // v5 u6
    return p;
}

}  // namespace torfacet
