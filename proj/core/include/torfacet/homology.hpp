#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "torfacet/complex.hpp"
#include "torfacet/linalg.hpp"

namespace torfacet {

/// Coefficient system: Q, F_p (p prime, checked) or Z.
struct Coefficients {
    enum class Kind { Rationals, PrimeField, Integers };
    Kind kind = Kind::Rationals;
    std::int64_t p = 0;

    static Coefficients q() { return {Kind::Rationals, 0}; }
    static Coefficients z() { return {Kind::Integers, 0}; }
    static Coefficients fp(std::int64_t p);
    static Coefficients parse(const std::string& spec);  // "q" | "z" | "fp:<p>"

    bool is_field() const { return kind != Kind::Integers; }
    std::string str() const;
    bool operator==(const Coefficients&) const = default;
};

/// Rank plus torsion coefficients (normalized prime powers, sorted). Torsion
/// is empty whenever the coefficients form a field.
struct HomologyGroup {
    long rank = 0;
    std::vector<long long> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup&) const = default;
};

/// Splits divisibility-chain entries > 1 into prime powers and sorts.
std::vector<long long> normalize_torsion(const std::vector<Int>& divisors);

/// rank of a {-1,0,1} matrix over the coefficient field, plus the nontrivial
/// elementary divisors when computing over Z.
struct MatrixRankData {
    long rank = 0;
    std::vector<Int> divisors;
};
MatrixRankData matrix_rank_data(const SignMatrix& M, const Coefficients& coeff);

/// A finite cochain complex: d[k] maps degree (lo+k) to (lo+k+1); the last
/// map out of the top degree is implicitly zero.
struct GradedComplex {
    int lo = 0;
    std::vector<long> dims;
    std::vector<SignMatrix> d;  ///< size dims.size()-1 (or empty when one degree)
};

/// Cohomology of a GradedComplex in every degree; over Z the torsion of H^k
/// comes from the incoming differential d[k-1].
std::map<int, HomologyGroup> cohomology_groups(const GradedComplex& C, const Coefficients& coeff);

/// Reduced simplicial chain data of K: bases[k] are the (k-1)-element faces
/// (so index 0 holds ∅) and boundary[k] : C_{k-1} -> C_{k-2} in reduced
/// degrees. Ordered-simplex signs: face i of an ascending simplex gets (-1)^i.
struct ReducedChainData {
    std::vector<std::vector<Subset>> bases;   ///< bases[k]: faces of size k
    std::vector<SignMatrix> boundary;         ///< boundary[k]: C(size k+1) -> C(size k)
};
ReducedChainData reduced_chain_data(const SimplicialComplex& K);

/// Reduced homology H̃_i for -1 <= i <= dim K. Conventions:
/// H̃_{-1}({∅}) = k and H̃_{-1}(K) = 0 for nonempty K.
std::map<int, HomologyGroup> reduced_homology(const SimplicialComplex& K, const Coefficients& coeff);

/// Reduced cohomology, computed directly from the coboundary matrices (over Z
/// this places torsion per the universal-coefficient convention: H̃^i carries
/// the free rank of H̃_i and the torsion of H̃_{i-1}).
std::map<int, HomologyGroup> reduced_cohomology(const SimplicialComplex& K, const Coefficients& coeff);

inline long long total_dimension(const std::map<int, HomologyGroup>& groups) {
    long long t = 0;
    for (auto& [d, g] : groups) t += g.rank;
    return t;
}

}  // namespace torfacet
