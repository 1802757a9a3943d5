#pragma once

#include <optional>
#include <vector>

#include "torfacet/subset.hpp"

namespace torfacet {

/// Abstract simplicial complex on the vertex set [m], represented by its
/// facets (inclusion-maximal faces). Downward closure is implicit: a set is
/// a face iff it is contained in some facet, and the empty set is always a
/// face. Vertices i with {i} not a face ("ghost" vertices) are permitted.
/// Values are immutable after construction.
class SimplicialComplex {
public:
    /// The complex {∅} on zero vertices.
    SimplicialComplex() = default;

    /// Normalizes the facet list: validates vertex ranges, removes dominated
    /// sets and duplicates, sorts lexicographically.
    static SimplicialComplex from_facets(int m, std::vector<Subset> facets);

    /// The complex on [m] whose faces are exactly the sets containing no
    /// member of `nonfaces`. The given sets must be the inclusion-minimal
    /// non-faces for the round trip with minimal_nonfaces() to be exact.
    static SimplicialComplex from_minimal_nonfaces(int m, const std::vector<Subset>& nonfaces);

    int vertex_count() const { return m_; }
    const std::vector<Subset>& facets() const { return facets_; }
    /// max facet size - 1; -1 for the complex {∅}.
    int dim() const { return dim_; }

    bool is_face(Subset sigma) const;
    bool is_ghost_vertex(int v) const { return !is_face(Subset::single(v)); }

    /// All faces including ∅, ordered by (size, lex). Exponential output.
    std::vector<Subset> all_faces() const;
    /// Faces with exactly k vertices, lex-ordered. k = 0 gives {∅}.
    std::vector<Subset> faces_of_size(int k) const;
    long long face_count() const;

    /// A vertex lying in every facet, if one exists (the complex is then a
    /// cone with that apex, hence contractible). Requires at least one facet.
    std::optional<int> cone_apex() const;

    bool operator==(const SimplicialComplex& o) const {
        return m_ == o.m_ && facets_ == o.facets_;
    }

private:
    SimplicialComplex(int m, std::vector<Subset> facets, int dim)
        : m_(m), facets_(std::move(facets)), dim_(dim) {}

    int m_ = 0;
    std::vector<Subset> facets_;
    int dim_ = -1;
};

/// A vertex map [m1] -> [m2] with φ(σ) a face of the target for every face σ
/// of the source; validated at construction.
class SimplicialMap {
public:
    SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::vector<int> vertex_map);

    const SimplicialComplex& source() const { return source_; }
    const SimplicialComplex& target() const { return target_; }
    int apply(int v) const { return vertex_map_.at(v - 1); }
    Subset apply(Subset sigma) const;
    /// φ^{-1}(j) as a subset of [m1].
    Subset fiber(int j) const;

private:
    SimplicialComplex source_;
    SimplicialComplex target_;
    std::vector<int> vertex_map_;
};

struct Restriction {
    SimplicialComplex complex;       ///< on vertex set 1..|ω|
    std::vector<int> global_vertex;  ///< global_vertex[i-1] = original label of local vertex i
};

/// Full subcomplex K_ω = {σ ∈ K : σ ⊆ ω}, re-indexed to 1..|ω| with the
/// order-preserving relabeling recorded.
Restriction full_subcomplex(const SimplicialComplex& K, Subset omega);

/// Facets of K_ω kept in global labels (no re-indexing); vertices of [m]
/// outside ω become ghosts.
SimplicialComplex full_subcomplex_global(const SimplicialComplex& K, Subset omega);

/// link_K σ = {τ : σ∪τ ∈ K, σ∩τ = ∅}, on [m]. Throws if σ is not a face.
SimplicialComplex link(const SimplicialComplex& K, Subset sigma);
/// star_K σ = {τ : σ∪τ ∈ K}, on [m]. Throws if σ is not a face.
SimplicialComplex star(const SimplicialComplex& K, Subset sigma);

/// Join on [m1+m2]; the second factor's vertices are shifted by m1.
SimplicialComplex join(const SimplicialComplex& K1, const SimplicialComplex& K2);

/// Stellar subdivision at a nonempty face σ: the star of σ is replaced by the
/// cone (apex m+1) over its boundary. Result lives on [m+1].
SimplicialComplex stellar_subdivision(const SimplicialComplex& K, Subset sigma);

/// Dual complex K̂ = {ω : [m]∖ω ∉ K}. Rejects K = Δ^{m-1} (the dual would
/// contain no faces at all, not even ∅).
SimplicialComplex dual_complex(const SimplicialComplex& K);

/// Inclusion-minimal non-faces; the minimal monomial generators of the
/// Stanley-Reisner ideal. Lex-ordered by (size, lex).
std::vector<Subset> minimal_nonfaces(const SimplicialComplex& K);

// Named generators. Vertex labelings are documented per generator.
SimplicialComplex simplex(int m);            ///< Δ^{m-1} on [m]
SimplicialComplex boundary_simplex(int m);   ///< ∂Δ^{m-1} on [m]
SimplicialComplex mgon(int m);               ///< boundary of the m-gon, edges {i,i+1} and {1,m}; m >= 3
SimplicialComplex cross_polytope(int n);     ///< ∂ of the n-dim cross polytope on [2n]; {2k-1,2k} antipodal
SimplicialComplex points(int m);             ///< m disjoint points
/// The 8-vertex 2-sphere dual to the cube with two non-adjacent edges cut;
/// labels v1..v6,w1,w2 -> 1..8. Its Stanley-Reisner ideal is exactly
/// (v1v2, v3v4, v5v6, w1w2, v1v3, v4v5, w1v3, w1v6, w2v2, w2v4).
SimplicialComplex cut_cube_dual();

/// Vertex bijection making two complexes equal, if any (backtracking on the
/// facet sets). Intended for desk-scale certification, not large inputs.
std::optional<std::vector<int>> find_isomorphism(const SimplicialComplex& A,
                                                 const SimplicialComplex& B);

}  // namespace torfacet
