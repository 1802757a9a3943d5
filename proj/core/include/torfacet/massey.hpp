#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "torfacet/hochster.hpp"
#include "torfacet/koszul.hpp"

namespace torfacet {

/// Thrown when a triple product is not defined; carries which pairwise
/// product obstructs ("a1*a2" or "a2*a3").
class MasseyUndefined : public std::runtime_error {
public:
    explicit MasseyUndefined(std::string which)
        : std::runtime_error("triple Massey product undefined: [" + which + "] is not a coboundary"),
          obstruction_(std::move(which)) {}
    const std::string& obstruction() const { return obstruction_; }

private:
    std::string obstruction_;
};

/// ⟨α1,α2,α3⟩ over Q: the classes are given by cocycle representatives in
/// R*(K); definedness (α1α2 = α2α3 = 0) is verified, not assumed.
struct MasseyProblem {
    SimplicialComplex K;
    RatKoszulElement a1, a2, a3;
};

struct MasseyResult {
    RatKoszulElement representative;  ///< w = (-1)^{deg a1 + 1} a1 f + e a3, dw = 0
    RatKoszulElement e, f;            ///< de = a1 a2, df = a2 a3 (first echelon solutions)
    std::vector<RatKoszulElement> indeterminacy_basis;  ///< basis of α1·H + α3·H in the target degree
    bool trivial = false;             ///< [w] lies in the indeterminacy span
};

struct MasseyOptions {
    bool reverse_pivots = false;  ///< alternative solver pivot order (coset must not change)
};

MasseyResult triple_massey(const MasseyProblem& problem, const MasseyOptions& options = {});

/// K̃ = ζ_{σ1∪σ2'}(ζ_{σ2''∪σ3}(K1*K2*K3)) together with the vertex-set
/// partition of the three sphere factors. The σ's must be facets of their
/// factors and σ2' ∩ σ2'' = ∅; the two cone vertices get labels m+1, m+2.
struct NtmasComplex {
    SimplicialComplex complex;
    Subset V1, V2, V3;
};

NtmasComplex build_ntmas_complex(const SimplicialComplex& K1, const SimplicialComplex& K2,
                                 const SimplicialComplex& K3, Subset sigma1, Subset sigma2a,
                                 Subset sigma2b, Subset sigma3);

/// Generators β_i of H̃^{n_i-1}(K̃_{V_i}) pulled through gamma_iso; verifies
/// the ranks are 1 and that α1α2 and α2α3 vanish in cohomology.
struct NtmasClasses {
    RatKoszulElement a1, a2, a3;
};
NtmasClasses ntmas_classes(const NtmasComplex& nt);

/// The worked example: cut_cube_dual() with a = v1u2, b = v3u4, c = v5u6.
MasseyProblem massey_demo_p3();

}  // namespace torfacet
