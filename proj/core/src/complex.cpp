#include "torfacet/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace torfacet {

namespace {

void check_vertex_range(int m, Subset s, const char* what) {
    if (!s.subset_of(Subset::full(m)))
        throw std::invalid_argument(std::string(what) + ": vertex index out of range 1.." + std::to_string(m));
}

void sort_lex(std::vector<Subset>& sets) {
    std::sort(sets.begin(), sets.end(), lex_less);
}

bool size_lex_less(Subset a, Subset b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int m, std::vector<Subset> facets) {
    if (m < 0 || m > 31) throw std::invalid_argument("SimplicialComplex: m out of range 0..31");
    for (Subset f : facets) check_vertex_range(m, f, "facet");
    // drop ∅ (implicit) and dominated sets
    std::vector<Subset> maximal;
    for (Subset f : facets) {
        if (f.empty()) continue;
        bool dominated = false;
        for (Subset g : facets)
            if (f != g && f.subset_of(g)) { dominated = true; break; }
        if (!dominated && std::find(maximal.begin(), maximal.end(), f) == maximal.end())
            maximal.push_back(f);
    }
    sort_lex(maximal);
    int dim = -1;
    for (Subset f : maximal) dim = std::max(dim, f.size() - 1);
    return SimplicialComplex(m, std::move(maximal), dim);
}

SimplicialComplex SimplicialComplex::from_minimal_nonfaces(int m, const std::vector<Subset>& nonfaces) {
    for (Subset s : nonfaces) check_vertex_range(m, s, "nonface");
    // faces = sets containing no nonface; facets = maximal ones
    std::vector<Subset> facets;
    for (Subset s : SubsetRange(m)) {
        bool face = true;
        for (Subset nf : nonfaces)
            if (nf.subset_of(s)) { face = false; break; }
        if (!face) continue;
        bool maximal = true;
        for (int v = 1; v <= m && maximal; ++v) {
            if (s.contains(v)) continue;
            Subset bigger = s.with(v);
            bool bigger_face = true;
            for (Subset nf : nonfaces)
                if (nf.subset_of(bigger)) { bigger_face = false; break; }
            if (bigger_face) maximal = false;
        }
        if (maximal && !s.empty()) facets.push_back(s);
    }
    return from_facets(m, std::move(facets));
}

bool SimplicialComplex::is_face(Subset sigma) const {
    check_vertex_range(m_, sigma, "is_face");
    if (sigma.empty()) return true;
    for (Subset f : facets_)
        if (sigma.subset_of(f)) return true;
    return false;
}

std::vector<Subset> SimplicialComplex::all_faces() const {
    std::set<Subset> seen;
    seen.insert(Subset());
    for (Subset f : facets_) {
        // enumerate subsets of the facet
        std::uint32_t fb = f.bits();
        for (std::uint32_t sub = fb;; sub = (sub - 1) & fb) {
            seen.insert(Subset(sub));
            if (sub == 0) break;
        }
    }
    std::vector<Subset> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

std::vector<Subset> SimplicialComplex::faces_of_size(int k) const {
    std::vector<Subset> out;
    for (Subset s : all_faces())
        if (s.size() == k) out.push_back(s);
    return out;
}

long long SimplicialComplex::face_count() const {
    return static_cast<long long>(all_faces().size());
}

std::optional<int> SimplicialComplex::cone_apex() const {
    if (facets_.empty()) return std::nullopt;
    Subset common = facets_[0];
    for (Subset f : facets_) common = common & f;
    if (common.empty()) return std::nullopt;
    return common.min_vertex();
}

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::vector<int> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), vertex_map_(std::move(vertex_map)) {
    if (static_cast<int>(vertex_map_.size()) != source_.vertex_count())
        throw std::invalid_argument("SimplicialMap: vertex_map must have m1 entries");
    for (int img : vertex_map_)
        if (img < 1 || img > target_.vertex_count())
            throw std::invalid_argument("SimplicialMap: image vertex out of range");
    for (Subset f : source_.facets())
        if (!target_.is_face(apply(f)))
            throw std::invalid_argument("SimplicialMap: image of face " + f.str() + " is not a face of the target");
}

Subset SimplicialMap::apply(Subset sigma) const {
    Subset out;
    for (int v : sigma.vertices()) out.insert(apply(v));
    return out;
}

Subset SimplicialMap::fiber(int j) const {
    Subset out;
    for (int v = 1; v <= source_.vertex_count(); ++v)
        if (vertex_map_[v - 1] == j) out.insert(v);
    return out;
}

SimplicialComplex full_subcomplex_global(const SimplicialComplex& K, Subset omega) {
    check_vertex_range(K.vertex_count(), omega, "full_subcomplex");
    std::vector<Subset> restricted;
    for (Subset f : K.facets()) restricted.push_back(f & omega);
    return SimplicialComplex::from_facets(K.vertex_count(), std::move(restricted));
}

Restriction full_subcomplex(const SimplicialComplex& K, Subset omega) {
    SimplicialComplex g = full_subcomplex_global(K, omega);
    std::vector<int> global = omega.vertices();
    std::map<int, int> local;  // global label -> 1..|ω|
    for (std::size_t i = 0; i < global.size(); ++i) local[global[i]] = static_cast<int>(i) + 1;
    std::vector<Subset> facets;
    for (Subset f : g.facets()) {
        Subset r;
        for (int v : f.vertices()) r.insert(local.at(v));
        facets.push_back(r);
    }
    return Restriction{SimplicialComplex::from_facets(omega.size(), std::move(facets)), std::move(global)};
}

SimplicialComplex link(const SimplicialComplex& K, Subset sigma) {
    if (!K.is_face(sigma)) throw std::invalid_argument("link: σ is not a face");
    std::vector<Subset> facets;
    for (Subset f : K.facets())
        if (sigma.subset_of(f)) facets.push_back(f - sigma);
    return SimplicialComplex::from_facets(K.vertex_count(), std::move(facets));
}

SimplicialComplex star(const SimplicialComplex& K, Subset sigma) {
    if (!K.is_face(sigma)) throw std::invalid_argument("star: σ is not a face");
    std::vector<Subset> facets;
    for (Subset f : K.facets())
        if (sigma.subset_of(f)) facets.push_back(f);
    return SimplicialComplex::from_facets(K.vertex_count(), std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& K1, const SimplicialComplex& K2) {
    int m1 = K1.vertex_count(), m2 = K2.vertex_count();
    if (m1 + m2 > 31) throw std::invalid_argument("join: combined vertex count too large");
    auto shift = [m1](Subset s) { return Subset(s.bits() << m1); };
    std::vector<Subset> facets;
    if (K1.facets().empty() && K2.facets().empty()) {
        // join of two ∅-complexes is the ∅-complex
    } else if (K1.facets().empty()) {
        for (Subset f2 : K2.facets()) facets.push_back(shift(f2));
    } else if (K2.facets().empty()) {
        facets = K1.facets();
    } else {
        for (Subset f1 : K1.facets())
            for (Subset f2 : K2.facets()) facets.push_back(f1 | shift(f2));
    }
    return SimplicialComplex::from_facets(m1 + m2, std::move(facets));
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& K, Subset sigma) {
    if (sigma.empty()) throw std::invalid_argument("stellar_subdivision: σ must be nonempty");
    if (!K.is_face(sigma)) throw std::invalid_argument("stellar_subdivision: σ is not a face");
    int m = K.vertex_count();
    if (m + 1 > 31) throw std::invalid_argument("stellar_subdivision: vertex count too large");
    int apex = m + 1;
    std::vector<Subset> facets;
    for (Subset f : K.facets()) {
        if (!sigma.subset_of(f)) {
            facets.push_back(f);
        } else {
            // star facet: replaced by the cone facets apex ∪ (f ∖ {j}), j ∈ σ
            for (int j : sigma.vertices()) facets.push_back(f.without(j).with(apex));
        }
    }
    return SimplicialComplex::from_facets(m + 1, std::move(facets));
}

std::vector<Subset> minimal_nonfaces(const SimplicialComplex& K) {
    int m = K.vertex_count();
    if (m > 20) throw std::invalid_argument("minimal_nonfaces: enumeration bound m <= 20 exceeded");
    std::vector<Subset> out;
    for (Subset s : SubsetRange(m)) {
        if (s.empty() || K.is_face(s)) continue;
        bool minimal = true;
        for (int v : s.vertices())
            if (!K.is_face(s.without(v))) { minimal = false; break; }
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

SimplicialComplex dual_complex(const SimplicialComplex& K) {
    int m = K.vertex_count();
    auto nonfaces = minimal_nonfaces(K);
    if (nonfaces.empty())
        throw std::invalid_argument("dual_complex: K = Δ^{m-1} has no dual (void complex)");
    // facets of K̂ are the complements of the minimal non-faces
    Subset full = Subset::full(m);
    std::vector<Subset> facets;
    for (Subset nf : nonfaces) facets.push_back(full - nf);
    return SimplicialComplex::from_facets(m, std::move(facets));
}

SimplicialComplex simplex(int m) {
    if (m < 1) throw std::invalid_argument("simplex: m >= 1 required");
    return SimplicialComplex::from_facets(m, {Subset::full(m)});
}

SimplicialComplex boundary_simplex(int m) {
    if (m < 1) throw std::invalid_argument("boundary_simplex: m >= 1 required");
    std::vector<Subset> facets;
    for (int v = 1; v <= m; ++v) facets.push_back(Subset::full(m).without(v));
    return SimplicialComplex::from_facets(m, std::move(facets));
}

SimplicialComplex mgon(int m) {
    if (m < 3) throw std::invalid_argument("mgon: m >= 3 required");
    std::vector<Subset> facets;
    for (int v = 1; v < m; ++v) facets.push_back(Subset({v, v + 1}));
    facets.push_back(Subset({1, m}));
    return SimplicialComplex::from_facets(m, std::move(facets));
}

SimplicialComplex cross_polytope(int n) {
    if (n < 1) throw std::invalid_argument("cross_polytope: n >= 1 required");
    if (2 * n > 31) throw std::invalid_argument("cross_polytope: n too large");
    std::vector<Subset> nonfaces;
    for (int k = 1; k <= n; ++k) nonfaces.push_back(Subset({2 * k - 1, 2 * k}));
    return SimplicialComplex::from_minimal_nonfaces(2 * n, nonfaces);
}

SimplicialComplex points(int m) {
    if (m < 1) throw std::invalid_argument("points: m >= 1 required");
    std::vector<Subset> facets;
    for (int v = 1; v <= m; ++v) facets.push_back(Subset::single(v));
    return SimplicialComplex::from_facets(m, std::move(facets));
}

SimplicialComplex cut_cube_dual() {
    // v1..v6 -> 1..6, w1 -> 7, w2 -> 8
    std::vector<Subset> nonfaces = {
        {1, 2}, {3, 4}, {5, 6}, {7, 8}, {1, 3},
        {4, 5}, {7, 3}, {7, 6}, {8, 2}, {8, 4},
    };
    return SimplicialComplex::from_minimal_nonfaces(8, nonfaces);
}

std::optional<std::vector<int>> find_isomorphism(const SimplicialComplex& A, const SimplicialComplex& B) {
    int m = A.vertex_count();
    if (m != B.vertex_count() || A.facets().size() != B.facets().size() || A.dim() != B.dim())
        return std::nullopt;

    // per-vertex facet-size profile as a cheap invariant
    auto profile = [m](const SimplicialComplex& K) {
        std::vector<std::multiset<int>> prof(m + 1);
        for (Subset f : K.facets())
            for (int v : f.vertices()) prof[v].insert(f.size());
        return prof;
    };
    auto pa = profile(A), pb = profile(B);

    std::set<Subset> bfacets(B.facets().begin(), B.facets().end());
    std::vector<int> perm(m, 0);        // perm[v-1] = image of v
    std::vector<bool> used(m + 1, false);

    std::function<bool(int)> extend = [&](int v) -> bool {
        if (v > m) {
            for (Subset f : A.facets()) {
                Subset img;
                for (int x : f.vertices()) img.insert(perm[x - 1]);
                if (!bfacets.count(img)) return false;
            }
            return true;
        }
        for (int w = 1; w <= m; ++w) {
            if (used[w] || pa[v] != pb[w]) continue;
            perm[v - 1] = w;
            used[w] = true;
            // partial check: facets fully mapped so far must land in B
            bool ok = true;
            for (Subset f : A.facets()) {
                if (f.subset_of(Subset::full(v)) == false) continue;
                Subset img;
                for (int x : f.vertices()) img.insert(perm[x - 1]);
                if (!bfacets.count(img)) { ok = false; break; }
            }
            if (ok && extend(v + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    if (extend(1)) return perm;
    return std::nullopt;
}

}  // namespace torfacet
