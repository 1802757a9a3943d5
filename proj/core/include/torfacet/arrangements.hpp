#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torfacet/betti.hpp"
#include "torfacet/complex.hpp"
#include "torfacet/homology.hpp"

namespace torfacet {

/// Reduced homology of the coordinate subspace arrangement complement U(K),
/// with the contributing pieces itemized per non-face τ (subcomplex route) or
/// per dual face σ (dual-link route).
struct ArrangementReport {
    std::map<int, HomologyGroup> groups;  ///< degree -> H̃_degree(U(K))
    struct Item {
        Subset piece;        ///< τ ∉ K, or σ ∈ K̂
        int degree;          ///< target degree in H̃_*(U(K))
        HomologyGroup group;
    };
    std::vector<Item> items;

    bool same_groups(const ArrangementReport& o) const { return groups == o.groups; }
};

/// H̃_p(U(K)) = ⊕_{τ∉K} H̃_{p-|τ|-1}(K_τ); faces are pruned (contractible
/// full subcomplexes contribute nothing).
ArrangementReport uk_homology_via_subcomplexes(const SimplicialComplex& K, const Coefficients& coeff);

/// Goresky-MacPherson form: H̃_i(U(K)) = ⊕_{σ∈K̂} H̃^{2m-2|σ|-i-2}(link_{K̂} σ).
/// Requires K ≠ Δ^{m-1}.
ArrangementReport uk_homology_via_dual_links(const SimplicialComplex& K, const Coefficients& coeff);

struct AlexanderCheckResult {
    bool pass = true;
    Subset witness_sigma;
    int witness_degree = 0;
    std::string detail;
};

/// Combinatorial Alexander duality: H̃_j(K_σ) ≅ H̃^{|σ|-3-j}(link_{K̂} σ̂) for
/// every non-face σ (over Z: ranks and torsion). First mismatch wins.
AlexanderCheckResult alexander_duality_check(const SimplicialComplex& K, const Coefficients& coeff);

struct ToralRankReport {
    long long lhs = 0;       ///< dim ⊕_ω H̃*(K_ω;Q) = dim H*(Z_K;Q)
    long long rhs = 0;       ///< 2^{m-n}
    long long margin = 0;    ///< lhs - rhs
    bool holds = false;
    bool pure = true;        ///< n read off max facet size; non-pure flagged
    int n = 0;
};

/// Checks dim ⊕_ω H̃*(K_ω;Q) >= 2^{m-n}. Violations are reported, never
/// treated as disproofs (conjecture status).
ToralRankReport toral_rank_check(const SimplicialComplex& K);

}  // namespace torfacet
