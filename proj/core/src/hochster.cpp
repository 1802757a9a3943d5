#include "torfacet/hochster.hpp"

#include "torfacet/parallel.hpp"

namespace torfacet {

BettiTable betti_table_hochster(const SimplicialComplex& K, const Coefficients& coeff,
                                int threads, bool prune) {
    int m = K.vertex_count();
    std::vector<std::map<int, HomologyGroup>> results(1u << m);
    parallel_for(1L << m, threads, [&](long w) {
        Subset omega(static_cast<std::uint32_t>(w));
        SimplicialComplex restricted = full_subcomplex_global(K, omega);
        if (prune && restricted.cone_apex()) return;  // contractible: contributes nothing
        results[w] = reduced_cohomology(restricted, coeff);
    });
    BettiTable table(coeff);
    for (std::uint32_t w = 0; w < (1u << m); ++w) {
        Subset omega(w);
        int j = omega.size();
        for (auto& [p, g] : results[w]) {
            int i = j - p - 1;
            table.add(i, 2 * j, g.rank, g.torsion);
            table.add_multigraded(i, omega, g.rank);
        }
    }
    return table;
}

namespace {

template <class Ctx>
GolodScreenResult golod_screen_impl(const SimplicialComplex& K, Ctx ctx) {
    HochsterWorkspace<Ctx> ws(K, ctx);
    struct Entry {
        MultigradedClass<Ctx> cls;
    };
    std::vector<Entry> positive;
    int m = K.vertex_count();
    for (Subset omega : SubsetRange(m)) {
        SimplicialComplex restricted = full_subcomplex_global(K, omega);
        if (restricted.cone_apex()) continue;
        for (int p = -1; p <= restricted.dim(); ++p) {
            if (omega.empty() && p == -1) continue;  // the unit class
            for (auto& cls : ws.classes(omega, p)) positive.push_back({cls});
        }
    }
    for (std::size_t a = 0; a < positive.size(); ++a)
        for (std::size_t b = a; b < positive.size(); ++b) {
            const auto& x = positive[a].cls;
            const auto& y = positive[b].cls;
            if (x.omega.intersects(y.omega)) continue;
            auto prod = baskakov_product(ctx, K, x, y);
            if (prod.zero()) continue;
            if (!ws.is_zero_class(prod)) {
                GolodScreenResult res;
                res.products_vanish = false;
                res.witness_a = "omega=" + x.omega.str() + " p=" + std::to_string(x.degree);
                res.witness_b = "omega=" + y.omega.str() + " p=" + std::to_string(y.degree);
                return res;
            }
        }
    return {};
}

}  // namespace

GolodScreenResult golod_product_screen(const SimplicialComplex& K, const Coefficients& coeff) {
    if (!coeff.is_field()) throw std::invalid_argument("golod_product_screen: field coefficients required");
    if (coeff.kind == Coefficients::Kind::PrimeField) return golod_screen_impl(K, FpCtx{coeff.p});
    return golod_screen_impl(K, RatCtx{});
}

}  // namespace torfacet
