#include "torfacet/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include "torfacet/arrangements.hpp"
#include "torfacet/hochster.hpp"
#include "torfacet/koszul.hpp"
#include "torfacet/massey.hpp"
#include "torfacet/facering.hpp"

namespace torfacet {

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

Json betti_cells_json(std::initializer_list<std::tuple<int, int, long>> cells) {
    Json out = Json::array();
    for (auto& [i, j2, rank] : cells) out.push_back({{"i", i}, {"j2", j2}, {"rank", rank}});
    return out;
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> entries;

    {
        CorpusEntry e{"square", mgon(4), "face-ring resolution example", {}};
        e.expected["betti_q_entries"] = betti_cells_json({{0, 0, 1}, {-1, 4, 2}, {-2, 8, 1}});
        e.expected["sphere_n"] = 2;
        entries.push_back(std::move(e));
    }
    for (int m = 2; m <= 6; ++m) {
        CorpusEntry e{"boundary-simplex-" + std::to_string(m), boundary_simplex(m),
                      "fundamental class u1 v2..vm of the (2m-1)-sphere", {}};
        e.expected["betti_q_entries"] = betti_cells_json({{0, 0, 1}, {-1, 2 * m, 1L}});
        e.expected["sphere_n"] = m - 1;
        entries.push_back(std::move(e));
    }
    for (int m = 3; m <= 8; ++m) {
        CorpusEntry e{"points-" + std::to_string(m), points(m),
                      "wedge-of-spheres ranks (k-1) C(m,k), trivial products", {}};
        Json degrees;
        degrees["0"] = 1;
        for (int k = 2; k <= m; ++k)
            degrees[std::to_string(k + 1)] = (k - 1) * binomial(m, k);
        e.expected["total_by_degree"] = std::move(degrees);
        e.expected["golod_products_vanish"] = true;
        entries.push_back(std::move(e));
    }
    for (int m = 5; m <= 10; ++m) {
        CorpusEntry e{"mgon-" + std::to_string(m), mgon(m),
                      "dim H*(Z_K) = (m-4) 2^{m-2} + 4 for the m-gon", {}};
        e.expected["total_dim"] = (static_cast<long long>(m) - 4) * (1LL << (m - 2)) + 4;
        e.expected["sphere_n"] = 2;
        entries.push_back(std::move(e));
    }
    for (int n = 2; n <= 4; ++n) {
        CorpusEntry e{"cross-polytope-" + std::to_string(n), cross_polytope(n),
                      "join of n copies of S^0; Z_K = (S^3)^n so dim H* = 2^n", {}};
        e.expected["sphere_n"] = n;
        e.expected["total_dim"] = 1LL << n;
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e{"cut-cube-dual", cut_cube_dual(),
                      "8-vertex sphere dual to the cube with two edges cut", {}};
        Json nf = Json::array();
        for (Subset s : std::vector<Subset>{{1, 2}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {7, 8},
                                            {3, 7}, {6, 7}, {2, 8}, {4, 8}})
            nf.push_back(s.vertices());
        e.expected["minimal_nonfaces"] = std::move(nf);
        e.expected["sphere_n"] = 3;
        e.expected["massey_demo_nontrivial"] = true;
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e{"figure1", SimplicialComplex::from_minimal_nonfaces(
                                     5, {{1, 5}, {3, 4}, {1, 2, 3}, {2, 4, 5}}),
                      "five-vertex complex with I_K = (v1v5, v3v4, v1v2v3, v2v4v5)", {}};
        Json nf = Json::array();
        for (Subset s : std::vector<Subset>{{1, 5}, {3, 4}, {1, 2, 3}, {2, 4, 5}})
            nf.push_back(s.vertices());
        e.expected["minimal_nonfaces"] = std::move(nf);
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e{"rp2-6",
                      SimplicialComplex::from_facets(6, {{1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6},
                                                         {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 4, 6},
                                                         {3, 5, 6}, {4, 5, 6}}),
                      "minimal 6-vertex triangulation of RP^2", {}};
        e.expected["homology_z"] = Json{{"1", {{"rank", 0}, {"torsion", {2}}}}};
        Json reisner = Json::array();
        reisner.push_back({{"coeff", "q"}, {"verdict", "cm"}});
        reisner.push_back({{"coeff", "fp:2"}, {"verdict", "fail"}, {"sigma", Json::array()}, {"degree", 1}});
        e.expected["reisner"] = std::move(reisner);
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e{"two-disjoint-edges", SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}}),
                      "Reisner failure witness (∅, 0)", {}};
        Json reisner = Json::array();
        reisner.push_back({{"coeff", "q"}, {"verdict", "fail"}, {"sigma", Json::array()}, {"degree", 0}});
        e.expected["reisner"] = std::move(reisner);
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e{"simplex-3", simplex(3), "free face ring, Tor in degree 0 only", {}};
        e.expected["betti_q_entries"] = betti_cells_json({{0, 0, 1}});
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = build_corpus();
    return entries;
}

SimplicialComplex random_complex(int m, const Rat& density, std::uint64_t seed) {
    if (m < 1 || m > 16) throw std::invalid_argument("random_complex: 1 <= m <= 16 required");
    if (density < 0 || density > 1) throw std::invalid_argument("random_complex: density in [0,1]");
    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(m) << 32));
    std::vector<Subset> candidates;
    const Rat two64 = Rat(Int(1) << 64);
    for (std::uint32_t bits = 1; bits < (1u << m); ++bits) {
        std::uint64_t u = rng();
        Subset s(bits);
        Rat threshold = 1;
        for (int k = 0; k < s.size(); ++k) threshold *= density;
        if (Rat(Int(u)) / two64 < threshold) candidates.push_back(s);
    }
    return SimplicialComplex::from_facets(m, std::move(candidates));
}

bool SuiteReport::all_pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

long SuiteReport::failures() const {
    return static_cast<long>(std::count_if(cases.begin(), cases.end(),
                                           [](const CaseResult& c) { return !c.pass; }));
}

Json SuiteReport::to_json() const {
    Json j;
    j["suite"] = suite;
    j["total"] = cases.size();
    j["failures"] = failures();
    Json failed = Json::array();
    for (auto& c : cases)
        if (!c.pass) failed.push_back({{"case", c.name}, {"detail", c.detail}});
    j["failed_cases"] = std::move(failed);
    return j;
}

namespace {

void check(SuiteReport& report, const std::string& name, bool pass, const std::string& detail = "") {
    report.cases.push_back({name, pass, pass ? "" : detail});
}

std::vector<std::pair<std::string, SimplicialComplex>> random_pool(int count, int max_m,
                                                                   std::uint64_t seed_base) {
    std::vector<std::pair<std::string, SimplicialComplex>> out;
    const char* densities[] = {"1/5", "2/5", "3/5", "4/5"};
    for (int idx = 0; idx < count; ++idx) {
        int m = 1 + idx % max_m;
        Rat density = rat_from_string(densities[idx % 4]);
        std::uint64_t seed = seed_base + idx;
        out.push_back({"random(m=" + std::to_string(m) + ",seed=" + std::to_string(seed) + ")",
                       random_complex(m, density, seed)});
    }
    return out;
}

std::string table_diff(const BettiTable& a, const BettiTable& b) {
    for (auto& [key, cell] : a.cells()) {
        auto other = b.cell(key.first, key.second);
        if (!(cell == other))
            return "cell (-" + std::to_string(key.first) + "," + std::to_string(key.second) +
                   "): rank " + std::to_string(cell.rank) + " vs " + std::to_string(other.rank);
    }
    for (auto& [key, cell] : b.cells())
        if (!a.cells().count(key))
            return "cell (-" + std::to_string(key.first) + "," + std::to_string(key.second) +
                   ") only on one side";
    return "multigraded refinement differs";
}

SuiteReport suite_paper_goldens(std::vector<Coefficients> coeffs, int, int threads) {
    SuiteReport report{"paper-goldens", {}};
    for (const CorpusEntry& e : corpus()) {
        if (e.expected.contains("betti_q_entries")) {
            BettiTable table = betti_table_hochster(e.complex, Coefficients::q(), threads);
            bool ok = true;
            std::string detail;
            std::size_t expected_cells = e.expected["betti_q_entries"].size();
            if (table.cells().size() != expected_cells) {
                ok = false;
                detail = "cell count " + std::to_string(table.cells().size());
            }
            for (const auto& cell : e.expected["betti_q_entries"]) {
                long rank = table.rank(-cell["i"].get<int>(), cell["j2"].get<int>());
                if (rank != cell["rank"].get<long>()) {
                    ok = false;
                    detail = "rank at (" + cell["i"].dump() + "," + cell["j2"].dump() + ") = " +
                             std::to_string(rank);
                }
            }
            check(report, e.name + ":betti_q", ok, detail);
        }
        if (e.expected.contains("total_by_degree")) {
            BettiTable table = betti_table_hochster(e.complex, Coefficients::q(), threads);
            auto degrees = table.total_by_degree();
            bool ok = true;
            std::string detail;
            long long listed = 0;
            for (auto& [deg, dim] : e.expected["total_by_degree"].items()) {
                long long got = degrees.count(std::stoi(deg)) ? degrees[std::stoi(deg)] : 0;
                listed += dim.get<long long>();
                if (got != dim.get<long long>()) {
                    ok = false;
                    detail = "degree " + deg + ": " + std::to_string(got) + " vs " + dim.dump();
                }
            }
            if (listed != table.total_dim()) {
                ok = false;
                detail = "unexpected extra classes (total " + std::to_string(table.total_dim()) + ")";
            }
            check(report, e.name + ":degrees", ok, detail);
        }
        if (e.expected.contains("total_dim")) {
            BettiTable table = betti_table_hochster(e.complex, Coefficients::q(), threads);
            long long got = table.total_dim();
            check(report, e.name + ":total_dim", got == e.expected["total_dim"].get<long long>(),
                  "total dim " + std::to_string(got));
        }
        if (e.expected.contains("minimal_nonfaces")) {
            Json got = Json::array();
            for (Subset s : minimal_nonfaces(e.complex)) got.push_back(s.vertices());
            Json want = e.expected["minimal_nonfaces"];
            auto norm = [](Json j) {
                std::vector<std::vector<int>> v;
                for (auto& s : j) v.push_back(s.get<std::vector<int>>());
                std::sort(v.begin(), v.end());
                return v;
            };
            check(report, e.name + ":minimal_nonfaces", norm(got) == norm(want), got.dump());
        }
        if (e.expected.contains("homology_z")) {
            auto groups = reduced_homology(e.complex, Coefficients::z());
            bool ok = true;
            std::string detail;
            for (auto& [deg, want] : e.expected["homology_z"].items()) {
                HomologyGroup g = groups.count(std::stoi(deg)) ? groups[std::stoi(deg)] : HomologyGroup{};
                std::vector<long long> torsion;
                for (auto& t : want["torsion"]) torsion.push_back(t.get<long long>());
                if (g.rank != want["rank"].get<long>() || g.torsion != torsion) {
                    ok = false;
                    detail = "H_" + deg + " mismatch";
                }
            }
            check(report, e.name + ":homology_z", ok, detail);
        }
        if (e.expected.contains("reisner")) {
            for (const auto& want : e.expected["reisner"]) {
                Coefficients c = Coefficients::parse(want["coeff"].get<std::string>());
                ReisnerResult r = reisner_cm_test(e.complex, c);
                bool ok;
                std::string detail;
                if (want["verdict"] == "cm") {
                    ok = r.cohen_macaulay;
                    detail = "expected CM";
                } else {
                    Subset sigma = subset_from_json(want["sigma"]);
                    ok = !r.cohen_macaulay && r.witness_sigma == sigma &&
                         r.witness_degree == want["degree"].get<int>();
                    detail = "witness (" + r.witness_sigma.str() + "," +
                             std::to_string(r.witness_degree) + ")";
                }
                check(report, e.name + ":reisner:" + c.str(), ok, detail);
            }
        }
        if (e.expected.contains("golod_products_vanish")) {
            GolodScreenResult g = golod_product_screen(e.complex, Coefficients::q());
            check(report, e.name + ":golod", g.products_vanish == e.expected["golod_products_vanish"].get<bool>(),
                  g.witness_a + " * " + g.witness_b);
        }
        if (e.expected.contains("massey_demo_nontrivial")) {
            MasseyResult r = triple_massey(massey_demo_p3());
            check(report, e.name + ":massey_demo", !r.trivial,
                  "representative " + r.representative.str());
        }
    }
    (void)coeffs;
    return report;
}

SuiteReport suite_hochster_vs_koszul(std::vector<Coefficients> coeffs, int random_cases, int threads) {
    SuiteReport report{"hochster-vs-koszul", {}};
    if (coeffs.empty())
        coeffs = {Coefficients::q(), Coefficients::fp(2), Coefficients::fp(3), Coefficients::z()};
    auto run = [&](const std::string& name, const SimplicialComplex& K) {
        if (K.vertex_count() > 12) return;  // exhaustive enumeration guard for the suite
        for (const Coefficients& c : coeffs) {
            BettiTable h = betti_table_hochster(K, c, threads);
            BettiTable k = betti_table_koszul(K, c, threads);
            check(report, name + ":" + c.str(), h == k, table_diff(h, k));
        }
    };
    for (const CorpusEntry& e : corpus()) run(e.name, e.complex);
    for (auto& [name, K] : random_pool(random_cases, 8, 1000)) run(name, K);
    return report;
}

SuiteReport suite_poincare_duality(std::vector<Coefficients>, int, int threads) {
    SuiteReport report{"poincare-duality", {}};
    for (const CorpusEntry& e : corpus()) {
        if (!e.expected.contains("sphere_n")) continue;
        int n = e.expected["sphere_n"].get<int>();
        int m = e.complex.vertex_count();
        BettiTable table = betti_table_hochster(e.complex, Coefficients::q(), threads);
        auto degrees = table.total_by_degree();
        bool ok = true;
        std::string detail;
        for (int k = 0; k <= m + n; ++k) {
            long long a = degrees.count(k) ? degrees[k] : 0;
            long long b = degrees.count(m + n - k) ? degrees[m + n - k] : 0;
            if (a != b) {
                ok = false;
                detail = "b^" + std::to_string(k) + " = " + std::to_string(a) + " but b^" +
                         std::to_string(m + n - k) + " = " + std::to_string(b);
            }
        }
        check(report, e.name, ok, detail);
    }
    return report;
}

SuiteReport suite_route_equality(std::vector<Coefficients> coeffs, int random_cases, int) {
    SuiteReport report{"route-equality", {}};
    if (coeffs.empty()) coeffs = {Coefficients::q(), Coefficients::z()};
    auto run = [&](const std::string& name, const SimplicialComplex& K) {
        if (K.vertex_count() > 8 || minimal_nonfaces(K).empty()) return;
        for (const Coefficients& c : coeffs) {
            ArrangementReport a = uk_homology_via_subcomplexes(K, c);
            ArrangementReport b = uk_homology_via_dual_links(K, c);
            check(report, name + ":" + c.str(), a.same_groups(b), "route groups differ");
        }
    };
    for (const CorpusEntry& e : corpus()) run(e.name, e.complex);
    for (auto& [name, K] : random_pool(random_cases, 7, 2000)) run(name, K);
    return report;
}

SuiteReport suite_alexander(std::vector<Coefficients> coeffs, int random_cases, int) {
    SuiteReport report{"alexander", {}};
    if (coeffs.empty()) coeffs = {Coefficients::q(), Coefficients::z()};
    auto run = [&](const std::string& name, const SimplicialComplex& K) {
        if (K.vertex_count() > 8 || minimal_nonfaces(K).empty()) return;
        for (const Coefficients& c : coeffs) {
            AlexanderCheckResult r = alexander_duality_check(K, c);
            check(report, name + ":" + c.str(), r.pass,
                  "witness σ=" + r.witness_sigma.str() + " j=" + std::to_string(r.witness_degree));
        }
    };
    for (const CorpusEntry& e : corpus()) run(e.name, e.complex);
    for (auto& [name, K] : random_pool(random_cases, 7, 3000)) run(name, K);
    return report;
}

SuiteReport suite_toral_rank(std::vector<Coefficients>, int random_cases, int) {
    SuiteReport report{"toral-rank", {}};
    auto run = [&](const std::string& name, const SimplicialComplex& K) {
        if (K.vertex_count() > 8) return;
        ToralRankReport r = toral_rank_check(K);
        check(report, name, r.holds,
              "VIOLATION lhs=" + std::to_string(r.lhs) + " rhs=" + std::to_string(r.rhs));
    };
    for (const CorpusEntry& e : corpus()) run(e.name, e.complex);
    for (auto& [name, K] : random_pool(random_cases, 8, 4000)) run(name, K);
    return report;
}

SuiteReport suite_subdivision_invariance(std::vector<Coefficients> coeffs, int random_cases, int) {
    SuiteReport report{"subdivision-invariance", {}};
    if (coeffs.empty()) coeffs = {Coefficients::q(), Coefficients::z()};
    std::mt19937_64 rng(99);
    for (auto& [name, K] : random_pool(random_cases, 6, 5000)) {
        auto faces = K.all_faces();
        std::vector<Subset> nonempty(faces.begin() + 1, faces.end());
        if (nonempty.empty()) continue;
        Subset sigma = nonempty[rng() % nonempty.size()];
        SimplicialComplex sub = stellar_subdivision(K, sigma);
        for (const Coefficients& c : coeffs)
            check(report, name + ":" + c.str(), reduced_homology(K, c) == reduced_homology(sub, c),
                  "homology changed under stellar subdivision at " + sigma.str());
    }
    return report;
}

SuiteReport suite_massey_ntmas(std::vector<Coefficients>, int, int) {
    SuiteReport report{"massey-ntmas", {}};
    std::vector<SimplicialComplex> factors = {boundary_simplex(2), boundary_simplex(3)};
    for (const SimplicialComplex& K1 : factors)
        for (const SimplicialComplex& K2 : factors)
            for (const SimplicialComplex& K3 : factors)
                for (Subset s1 : K1.facets())
                    for (Subset s2a : K2.facets())
                        for (Subset s2b : K2.facets()) {
                            if (s2a == s2b || s2a.intersects(s2b)) continue;
                            for (Subset s3 : K3.facets()) {
                                NtmasComplex nt = build_ntmas_complex(K1, K2, K3, s1, s2a, s2b, s3);
                                NtmasClasses cls = ntmas_classes(nt);
                                MasseyResult r = triple_massey({nt.complex, cls.a1, cls.a2, cls.a3});
                                std::string name = "ntmas(m1=" + std::to_string(K1.vertex_count()) +
                                                   ",m2=" + std::to_string(K2.vertex_count()) +
                                                   ",m3=" + std::to_string(K3.vertex_count()) +
                                                   ",s1=" + s1.str() + ",s2'=" + s2a.str() +
                                                   ",s2''=" + s2b.str() + ",s3=" + s3.str() + ")";
                                check(report, name, !r.trivial, "Massey product trivial");
                            }
                        }
    return report;
}

SuiteReport suite_golod_screen(std::vector<Coefficients> coeffs, int, int) {
    SuiteReport report{"golod-screen", {}};
    if (coeffs.empty()) coeffs = {Coefficients::q()};
    for (const Coefficients& c : coeffs) {
        for (int m = 3; m <= 6; ++m) {
            GolodScreenResult g = golod_product_screen(points(m), c);
            check(report, "points-" + std::to_string(m) + ":" + c.str(), g.products_vanish,
                  g.witness_a + " * " + g.witness_b);
        }
        GolodScreenResult sphere = golod_product_screen(mgon(5), c);
        check(report, "mgon-5-witness:" + c.str(), !sphere.products_vanish,
              "sphere with m > n must have a nonvanishing product");
        GolodScreenResult full = golod_product_screen(simplex(4), c);
        check(report, "simplex-4:" + c.str(), full.products_vanish, "no positive classes expected");
    }
    return report;
}

SuiteReport suite_koszul_monolithic(std::vector<Coefficients> coeffs, int random_cases, int threads) {
    SuiteReport report{"koszul-monolithic", {}};
    if (coeffs.empty()) coeffs = {Coefficients::q(), Coefficients::z()};
    auto run = [&](const std::string& name, const SimplicialComplex& K) {
        if (K.vertex_count() > 5) return;
        for (const Coefficients& c : coeffs) {
            BettiTable split = betti_table_koszul(K, c, threads);
            BettiTable mono = betti_table_koszul_monolithic(K, c);
            check(report, name + ":" + c.str(), split.same_cells(mono), table_diff(split, mono));
        }
    };
    for (const CorpusEntry& e : corpus()) run(e.name, e.complex);
    for (auto& [name, K] : random_pool(random_cases, 5, 6000)) run(name, K);
    return report;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"paper-goldens",    "hochster-vs-koszul",      "poincare-duality",
            "route-equality",   "alexander",               "toral-rank",
            "subdivision-invariance", "massey-ntmas",      "golod-screen",
            "koszul-monolithic"};
}

SuiteReport run_suite(const std::string& name, std::vector<Coefficients> coeffs, int random_cases,
                      int threads) {
    if (name == "paper-goldens") return suite_paper_goldens(coeffs, random_cases, threads);
    if (name == "hochster-vs-koszul") return suite_hochster_vs_koszul(coeffs, random_cases, threads);
    if (name == "poincare-duality") return suite_poincare_duality(coeffs, random_cases, threads);
    if (name == "route-equality") return suite_route_equality(coeffs, random_cases, threads);
    if (name == "alexander") return suite_alexander(coeffs, random_cases, threads);
    if (name == "toral-rank") return suite_toral_rank(coeffs, random_cases, threads);
    if (name == "subdivision-invariance") return suite_subdivision_invariance(coeffs, random_cases, threads);
    if (name == "massey-ntmas") return suite_massey_ntmas(coeffs, random_cases, threads);
    if (name == "golod-screen") return suite_golod_screen(coeffs, random_cases, threads);
    if (name == "koszul-monolithic") return suite_koszul_monolithic(coeffs, random_cases, threads);
    throw std::invalid_argument("unknown suite: " + name);
}

Json corpus_entry_to_json(const CorpusEntry& e) {
    Json j;
    j["name"] = e.name;
    j["provenance"] = e.provenance;
    j["complex"] = complex_to_json(e.complex);
    j["expected"] = e.expected;
    return j;
}

void write_corpus_dir(const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const CorpusEntry& e : corpus()) {
        std::ofstream out(dir + "/" + e.name + ".json", std::ios::binary);
        if (!out) throw std::runtime_error("cannot write corpus file for " + e.name);
        out << canonical_dump(corpus_entry_to_json(e)) << "\n";
    }
}

SuiteReport verify_corpus_dir(const std::string& dir) {
    SuiteReport report{"corpus-goldens-stable", {}};
    for (const CorpusEntry& e : corpus()) {
        std::ifstream in(dir + "/" + e.name + ".json", std::ios::binary);
        if (!in) {
            check(report, e.name, false, "golden file missing");
            continue;
        }
        std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        check(report, e.name, body == canonical_dump(corpus_entry_to_json(e)) + "\n",
              "golden file differs from regeneration");
    }
    return report;
}

}  // namespace torfacet
