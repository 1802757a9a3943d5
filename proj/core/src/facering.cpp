#include "torfacet/facering.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace torfacet {

bool monomial_in_ideal(const FaceRing& R, const std::vector<int>& exponents) {
    if (static_cast<int>(exponents.size()) != R.complex.vertex_count())
        throw std::invalid_argument("monomial_in_ideal: exponent vector must have m entries");
    Subset support;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0) throw std::invalid_argument("monomial_in_ideal: negative exponent");
        if (exponents[i] > 0) support.insert(static_cast<int>(i) + 1);
    }
    return !R.complex.is_face(support);
}

InducedHom induced_hom(const SimplicialMap& phi) {
    InducedHom h{phi, {}};
    for (int j = 1; j <= phi.target().vertex_count(); ++j)
        h.generator_images.push_back(phi.fiber(j));
    return h;
}

std::optional<InducedHom::Violation> InducedHom::check() const {
    const SimplicialComplex& K1 = map.source();
    // expand φ*(w_{j1} ⋯ w_{js}) = Σ v_{i1} ⋯ v_{is} over the fibers; every
    // term must lie in I_{K1}, i.e. have non-face support
    for (Subset tau : minimal_nonfaces(map.target())) {
        std::vector<Subset> fibers;
        for (int j : tau.vertices()) fibers.push_back(generator_images[j - 1]);
        std::optional<Violation> bad;
        std::function<bool(std::size_t, Subset)> expand = [&](std::size_t k, Subset support) {
            if (k == fibers.size()) {
                if (K1.is_face(support)) {
                    bad = Violation{tau, support};
                    return false;
                }
                return true;
            }
            for (int i : fibers[k].vertices())
                if (!expand(k + 1, support.with(i))) return false;
            return true;  // empty fiber: the expansion is the zero polynomial
        };
        if (!expand(0, Subset())) return bad;
    }
    return std::nullopt;
}

Int determinant(const IntMatrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("determinant: square matrix required");
    long n = A.rows();
    if (n == 0) return 1;
    IntMatrix M = A;
    Int prev = 1;
    int sign = 1;
    for (long c = 0; c < n; ++c) {
        long pivot = -1;
        for (long r = c; r < n; ++r)
            if (M.at(r, c) != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != c) {
            for (long j = 0; j < n; ++j) std::swap(M.at(pivot, j), M.at(c, j));
            sign = -sign;
        }
        for (long r = c + 1; r < n; ++r) {
            for (long j = c + 1; j < n; ++j)
                M.at(r, j) = (M.at(c, c) * M.at(r, j) - M.at(r, c) * M.at(c, j)) / prev;
            M.at(r, c) = 0;
        }
        prev = M.at(c, c);
    }
    return sign > 0 ? M.at(n - 1, n - 1) : Int(-M.at(n - 1, n - 1));
}

namespace {

/// Facet minors Λ_σ with shape validation shared by both lsop checks.
std::vector<std::pair<Subset, Int>> facet_minor_dets(const SimplicialComplex& K, const CharMatrix& L) {
    int n = L.n;
    if (n != K.dim() + 1)
        throw std::invalid_argument("lsop check: matrix shape mismatch (n must equal dim K + 1)");
    if (static_cast<int>(L.rows.size()) != n || L.cols() != K.vertex_count())
        throw std::invalid_argument("lsop check: matrix shape mismatch (Λ must be n×m)");
    std::vector<Subset> facets = K.facets();
    std::sort(facets.begin(), facets.end(), [](Subset a, Subset b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return lex_less(a, b);
    });
    std::vector<std::pair<Subset, Int>> out;
    for (Subset f : facets) {
        if (f.size() != n)
            throw std::invalid_argument("lsop check: matrix shape mismatch (non-pure complex; facet " +
                                        f.str() + " has size " + std::to_string(f.size()) + ")");
        IntMatrix minor(n, n);
        auto cols = f.vertices();
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) minor.at(r, c) = L.rows[r][cols[c] - 1];
        out.push_back({f, determinant(minor)});
    }
    return out;
}

}  // namespace

LsopResult lsop_check_integer(const SimplicialComplex& K, const CharMatrix& L) {
    for (auto& [facet, det] : facet_minor_dets(K, L))
        if (det != 1 && det != -1) return {false, facet, det};
    return {true, {}, 0};
}

LsopResult lsop_check_field(const SimplicialComplex& K, const CharMatrix& L, const Coefficients& coeff) {
    if (!coeff.is_field()) throw std::invalid_argument("lsop_check_field: field coefficients required");
    for (auto& [facet, det] : facet_minor_dets(K, L)) {
        Int reduced = coeff.kind == Coefficients::Kind::PrimeField ? Int(det % coeff.p) : det;
        if (reduced == 0) return {false, facet, det};
    }
    return {true, {}, 0};
}

ReisnerResult reisner_cm_test(const SimplicialComplex& K, const Coefficients& coeff) {
    if (!coeff.is_field()) throw std::invalid_argument("reisner_cm_test: field coefficients required");
    for (Subset sigma : K.all_faces()) {  // (size, lex) order
        SimplicialComplex lk = link(K, sigma);
        auto groups = reduced_homology(lk, coeff);
        for (auto& [i, g] : groups)
            if (i < lk.dim() && !g.trivial()) return {false, sigma, i};
    }
    return {true, {}, 0};
}

}  // namespace torfacet
