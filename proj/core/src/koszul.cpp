#include "torfacet/koszul.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "torfacet/parallel.hpp"

namespace torfacet {

std::string KoszulMonomial::str() const {
    if (omega.empty() && sigma.empty()) return "1";
    std::string s;
    for (int v : sigma.vertices()) s += "v" + std::to_string(v);
    if (!sigma.empty() && !omega.empty()) s += " ";
    for (int v : omega.vertices()) s += "u" + std::to_string(v);
    return s;
}

std::optional<std::pair<KoszulMonomial, int>> monomial_product(const SimplicialComplex& K,
                                                               const KoszulMonomial& a,
                                                               const KoszulMonomial& b) {
    if (a.omega.intersects(b.omega)) return std::nullopt;   // u_i^2 = 0
    if (a.sigma.intersects(b.sigma)) return std::nullopt;   // v_i^2 = 0
    Subset omega = a.omega | b.omega;
    Subset sigma = a.sigma | b.sigma;
    if (sigma.intersects(omega)) return std::nullopt;       // u_i v_i = 0
    if (!K.is_face(sigma)) return std::nullopt;             // v-support in the ideal
    int sign = a.omega.inversions_with(b.omega) % 2 == 0 ? 1 : -1;
    return std::make_pair(KoszulMonomial{omega, sigma}, sign);
}

long MultidegreeBlock::index_of(int i, Subset sigma) const {
    if (i < 0 || i >= static_cast<int>(basis.size())) return -1;
    auto& level = basis[i];
    auto it = std::lower_bound(level.begin(), level.end(), sigma);
    if (it == level.end() || *it != sigma) return -1;
    return static_cast<long>(it - level.begin());
}

MultidegreeBlock multidegree_complex(const SimplicialComplex& K, Subset omega) {
    if (!omega.subset_of(Subset::full(K.vertex_count())))
        throw std::invalid_argument("multidegree_complex: ω out of range");
    int w = omega.size();
    MultidegreeBlock block;
    block.omega = omega;
    block.basis.assign(w + 1, {});

    // faces of K_ω via downward closure of the restricted facets
    std::set<Subset> faces;
    faces.insert(Subset());
    for (Subset f : K.facets()) {
        std::uint32_t fb = (f & omega).bits();
        for (std::uint32_t sub = fb;; sub = (sub - 1) & fb) {
            faces.insert(Subset(sub));
            if (sub == 0) break;
        }
    }
    for (Subset sigma : faces) block.basis[w - sigma.size()].push_back(sigma);
    // std::set iterates in bitmask order, so each level is already sorted

    block.diff.resize(w);
    for (int i = 0; i + 1 <= w; ++i) {
        SignMatrix& M = block.diff[i];
        M.rows = static_cast<long>(block.basis[i].size());
        M.cols = static_cast<long>(block.basis[i + 1].size());
        for (std::size_t col = 0; col < block.basis[i + 1].size(); ++col) {
            Subset sigma = block.basis[i + 1][col];
            Subset rho = omega - sigma;
            int pos = 0;
            for (int k : rho.vertices()) {
                Subset tau = sigma.with(k);
                long row = block.index_of(i, tau);
                if (row >= 0) M.add(row, static_cast<long>(col), pos % 2 == 0 ? 1 : -1);
                ++pos;
            }
        }
    }
    return block;
}

namespace {

GradedComplex block_to_graded(const MultidegreeBlock& block) {
    int w = static_cast<int>(block.basis.size()) - 1;
    GradedComplex C;
    C.lo = -w;
    for (int k = 0; k <= w; ++k) C.dims.push_back(static_cast<long>(block.basis[w - k].size()));
    for (int k = 0; k + 1 <= w; ++k) C.d.push_back(block.diff[w - k - 1]);
    return C;
}

}  // namespace

std::map<int, HomologyGroup> multidegree_cohomology(const SimplicialComplex& K, Subset omega,
                                                    const Coefficients& coeff) {
    return cohomology_groups(block_to_graded(multidegree_complex(K, omega)), coeff);
}

BettiTable betti_table_koszul(const SimplicialComplex& K, const Coefficients& coeff, int threads) {
    int m = K.vertex_count();
    std::vector<std::map<int, HomologyGroup>> results(1u << m);
    parallel_for(1L << m, threads, [&](long w) {
        results[w] = multidegree_cohomology(K, Subset(static_cast<std::uint32_t>(w)), coeff);
    });
    BettiTable table(coeff);
    for (std::uint32_t w = 0; w < (1u << m); ++w) {
        Subset omega(w);
        for (auto& [deg, g] : results[w]) {
            int i = -deg;
            table.add(i, 2 * omega.size(), g.rank, g.torsion);
            table.add_multigraded(i, omega, g.rank);
        }
    }
    return table;
}

BettiTable betti_table_koszul_monolithic(const SimplicialComplex& K, const Coefficients& coeff) {
    int m = K.vertex_count();
    // bases[j][i] = admissible monomials with |ω| = i, |ω| + |σ| = j
    std::vector<std::vector<std::vector<KoszulMonomial>>> bases(m + 1);
    for (int j = 0; j <= m; ++j) bases[j].assign(j + 1, {});
    for (Subset sigma : K.all_faces()) {
        std::uint32_t free_bits = (Subset::full(m) - sigma).bits();
        for (std::uint32_t sub = free_bits;; sub = (sub - 1) & free_bits) {
            Subset omega(sub);
            int j = omega.size() + sigma.size();
            if (j <= m) bases[j][omega.size()].push_back({omega, sigma});
            if (sub == 0) break;
        }
    }
    BettiTable table(coeff);
    for (int j = 0; j <= m; ++j) {
        int top_i = j;
        for (auto& level : bases[j]) std::sort(level.begin(), level.end());
        std::vector<std::map<KoszulMonomial, long>> index(top_i + 1);
        for (int i = 0; i <= top_i; ++i)
            for (std::size_t a = 0; a < bases[j][i].size(); ++a) index[i][bases[j][i][a]] = static_cast<long>(a);
        GradedComplex C;
        C.lo = -top_i;
        for (int k = 0; k <= top_i; ++k) C.dims.push_back(static_cast<long>(bases[j][top_i - k].size()));
        for (int k = 0; k + 1 <= top_i; ++k) {
            int i = top_i - k;  // source exterior degree
            SignMatrix M;
            M.rows = static_cast<long>(bases[j][i - 1].size());
            M.cols = static_cast<long>(bases[j][i].size());
            for (std::size_t col = 0; col < bases[j][i].size(); ++col) {
                const KoszulMonomial& mono = bases[j][i][col];
                int pos = 0;
                for (int k2 : mono.omega.vertices()) {
                    Subset tau = mono.sigma.with(k2);
                    if (K.is_face(tau)) {
                        auto it = index[i - 1].find({mono.omega.without(k2), tau});
                        if (it != index[i - 1].end())
                            M.add(it->second, static_cast<long>(col), pos % 2 == 0 ? 1 : -1);
                    }
                    ++pos;
                }
            }
            C.d.push_back(std::move(M));
        }
        for (auto& [deg, g] : cohomology_groups(C, coeff))
            table.add(-deg, 2 * j, g.rank, g.torsion);
    }
    return table;
}

std::string rat_to_string(const Rat& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash))) / Rat(Int(s.substr(slash + 1)));
}

Json koszul_element_to_json(const RatKoszulElement& x) {
    Json terms = Json::array();
    for (auto& [mono, coeff] : x.terms) {
        Json t;
        t["omega"] = mono.omega.vertices();
        t["sigma"] = mono.sigma.vertices();
        t["coeff"] = rat_to_string(coeff);
        terms.push_back(std::move(t));
    }
    return terms;
}

RatKoszulElement koszul_element_from_json(const Json& j, const SimplicialComplex& K) {
    RatCtx ctx;
    RatKoszulElement x;
    if (!j.is_array()) throw std::invalid_argument("cocycle JSON must be a list of {omega,sigma,coeff}");
    for (const auto& t : j) {
        KoszulMonomial mono{subset_from_json(t.at("omega")), subset_from_json(t.at("sigma"))};
        if (!mono.admissible(K))
            throw std::invalid_argument("koszul monomial " + mono.str() + " is not admissible for this complex");
        Rat coeff = t.at("coeff").is_string() ? rat_from_string(t.at("coeff").get<std::string>())
                                              : Rat(t.at("coeff").get<long long>());
        x.add_term(ctx, mono, coeff);
    }
    return x;
}

}  // namespace torfacet
