#pragma once

#include <optional>
#include <vector>

#include "torfacet/complex.hpp"
#include "torfacet/homology.hpp"
#include "torfacet/linalg.hpp"

namespace torfacet {

/// The face ring k[K] = k[v_1..v_m]/I_K as a monomial-quotient object;
/// deg v_i = 2. The ideal generators are the minimal non-faces of K.
struct FaceRing {
    SimplicialComplex complex;
    std::vector<Subset> ideal_generators;

    static FaceRing of(const SimplicialComplex& K) { return {K, minimal_nonfaces(K)}; }
};

/// true iff the monomial with the given exponent vector lies in I_K,
/// i.e. its support is a non-face.
bool monomial_in_ideal(const FaceRing& R, const std::vector<int>& exponents);

/// φ* : k[K2] -> k[K1], w_j ↦ Σ_{i ∈ φ^{-1}(j)} v_i, together with the
/// checker that expands φ* on each ideal generator of K2 and verifies every
/// term lies in I_{K1}.
struct InducedHom {
    SimplicialMap map;
    std::vector<Subset> generator_images;  ///< generator_images[j-1] = φ^{-1}(j)

    struct Violation {
        Subset target_nonface;  ///< generator w_τ of I_{K2} whose image escapes
        Subset term_support;    ///< offending square-free term of the expansion
    };
    /// nullopt = φ*(I_{K2}) ⊆ I_{K1} holds term by term.
    std::optional<Violation> check() const;
};

InducedHom induced_hom(const SimplicialMap& phi);

/// n×m integer matrix Λ of lsop/characteristic data; t_i = Σ_j λ_{ij} v_j.
struct CharMatrix {
    int n = 0;
    std::vector<std::vector<long long>> rows;  ///< n rows of length m

    int cols() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
};

struct LsopResult {
    bool pass = false;
    Subset witness_facet;  ///< first facet (size-lex order) whose minor fails
    Int witness_det;
};

/// Integer lsop criterion: det Λ_σ = ±1 for every facet σ. Requires a pure
/// complex with facet size n = dim K + 1; anything else is a shape error.
LsopResult lsop_check_integer(const SimplicialComplex& K, const CharMatrix& L);

/// Field variant: every facet minor invertible over the field (det ≠ 0 in k).
LsopResult lsop_check_field(const SimplicialComplex& K, const CharMatrix& L, const Coefficients& coeff);

struct ReisnerResult {
    bool cohen_macaulay = false;
    Subset witness_sigma;
    int witness_degree = 0;
};

/// Reisner's criterion over a field: H̃_i(link_K σ; k) = 0 for every face σ
/// (including ∅) and every i < dim link_K σ. Faces are scanned by (size, lex)
/// and the first violation is reported.
ReisnerResult reisner_cm_test(const SimplicialComplex& K, const Coefficients& coeff);

/// Exact determinant of the integer matrix (fraction-free elimination).
Int determinant(const IntMatrix& A);

}  // namespace torfacet
