#include "torfacet/arrangements.hpp"

#include <algorithm>

#include "torfacet/hochster.hpp"

namespace torfacet {

ArrangementReport uk_homology_via_subcomplexes(const SimplicialComplex& K, const Coefficients& coeff) {
    int m = K.vertex_count();
    ArrangementReport report;
    for (Subset tau : SubsetRange(m)) {
        if (K.is_face(tau)) continue;  // faces give contractible K_τ (or the ∅ term dropped in reduced homology)
        SimplicialComplex restricted = full_subcomplex_global(K, tau);
        if (restricted.cone_apex()) continue;
        for (auto& [d, g] : reduced_homology(restricted, coeff)) {
            int p = d + tau.size() + 1;
            auto& dst = report.groups[p];
            dst.rank += g.rank;
            dst.torsion.insert(dst.torsion.end(), g.torsion.begin(), g.torsion.end());
            std::sort(dst.torsion.begin(), dst.torsion.end());
            report.items.push_back({tau, p, g});
        }
    }
    return report;
}

ArrangementReport uk_homology_via_dual_links(const SimplicialComplex& K, const Coefficients& coeff) {
    int m = K.vertex_count();
    SimplicialComplex dual = dual_complex(K);  // rejects Δ^{m-1}
    ArrangementReport report;
    for (Subset sigma : dual.all_faces()) {
        SimplicialComplex lk = link(dual, sigma);
        for (auto& [d, g] : reduced_cohomology(lk, coeff)) {
            int p = 2 * m - 2 * sigma.size() - d - 2;
            auto& dst = report.groups[p];
            dst.rank += g.rank;
            dst.torsion.insert(dst.torsion.end(), g.torsion.begin(), g.torsion.end());
            std::sort(dst.torsion.begin(), dst.torsion.end());
            report.items.push_back({sigma, p, g});
        }
    }
    return report;
}

AlexanderCheckResult alexander_duality_check(const SimplicialComplex& K, const Coefficients& coeff) {
    int m = K.vertex_count();
    SimplicialComplex dual = dual_complex(K);
    Subset full = Subset::full(m);
    for (Subset sigma : SubsetRange(m)) {
        if (K.is_face(sigma)) continue;
        Subset sigma_hat = full - sigma;
        auto lhs = reduced_homology(full_subcomplex_global(K, sigma), coeff);
        auto rhs_raw = reduced_cohomology(link(dual, sigma_hat), coeff);
        // reindex: H̃^{|σ|-3-j} compared against H̃_j
        std::map<int, HomologyGroup> rhs;
        for (auto& [d, g] : rhs_raw) rhs[sigma.size() - 3 - d] = g;
        for (int j = -1; j <= m; ++j) {
            HomologyGroup l = lhs.count(j) ? lhs[j] : HomologyGroup{};
            HomologyGroup r = rhs.count(j) ? rhs[j] : HomologyGroup{};
            if (!(l == r)) {
                AlexanderCheckResult res;
                res.pass = false;
                res.witness_sigma = sigma;
                res.witness_degree = j;
                res.detail = "H̃_" + std::to_string(j) + "(K_σ) has rank " + std::to_string(l.rank) +
                             ", dual side rank " + std::to_string(r.rank);
                return res;
            }
        }
    }
    return {};
}

ToralRankReport toral_rank_check(const SimplicialComplex& K) {
    ToralRankReport report;
    int m = K.vertex_count();
    report.n = K.dim() + 1;
    report.pure = true;
    for (Subset f : K.facets())
        if (f.size() != report.n) report.pure = false;

    BettiTable table = betti_table_hochster(K, Coefficients::q());
    report.lhs = table.total_dim();
    report.rhs = 1LL << (m - report.n);
    report.margin = report.lhs - report.rhs;
    report.holds = report.margin >= 0;
    return report;
}

}  // namespace torfacet
