// torfacet: exact computation of the bigraded Tor-algebra of face rings and
// the cohomology of moment-angle complexes, with cup products, triple Massey
// products, Cohen-Macaulay and lsop certification, Alexander duality, and
// coordinate subspace arrangement complement homology.
//
// Exit codes: 0 success/pass, 1 mathematical fail with witness, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "torfacet/arrangements.hpp"
#include "torfacet/corpus.hpp"
#include "torfacet/facering.hpp"
#include "torfacet/hochster.hpp"
#include "torfacet/koszul.hpp"
#include "torfacet/massey.hpp"
#include "torfacet/parallel.hpp"
#include "torfacet/serialize.hpp"

using namespace torfacet;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string complex_path;
    std::string generator;
    std::string coeff = "q";
    int threads = 0;
    bool json = false;
};

void add_input_flags(CLI::App* cmd, CommonOpts& opts, bool with_coeff = true) {
    cmd->add_option("--complex,-c", opts.complex_path, "complex JSON file ('-' for stdin)");
    cmd->add_option("--gen,-g", opts.generator,
                    "named generator, e.g. mgon:6, simplex:3, boundary-simplex:4, "
                    "cross-polytope:3, points:5, cut-cube-dual, random:m:density:seed");
    if (with_coeff)
        cmd->add_option("--coeff", opts.coeff, "coefficients: q | z | fp:<p>")->capture_default_str();
    cmd->add_option("--threads", opts.threads,
                    "worker threads (0 = hardware; env TORFACET_THREADS as fallback)");
    cmd->add_flag("--json", opts.json, "machine-readable JSON on stdout");
}

Rat parse_density(const std::string& s) {
    if (s.find('/') != std::string::npos) return rat_from_string(s);
    auto dot = s.find('.');
    if (dot == std::string::npos) return rat_from_string(s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    Rat denom = 1;
    for (std::size_t k = 0; k < s.size() - dot - 1; ++k) denom *= 10;
    return Rat(Int(digits)) / denom;
}

SimplicialComplex generator_by_name(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw std::invalid_argument("empty generator spec");
    const std::string& name = parts[0];
    auto int_arg = [&](std::size_t idx) {
        if (parts.size() <= idx) throw std::invalid_argument("generator " + name + ": missing parameter");
        return std::stoi(parts[idx]);
    };
    if (name == "simplex") return simplex(int_arg(1));
    if (name == "boundary-simplex" || name == "boundary_simplex") return boundary_simplex(int_arg(1));
    if (name == "mgon") return mgon(int_arg(1));
    if (name == "cross-polytope" || name == "cross_polytope") return cross_polytope(int_arg(1));
    if (name == "points") return points(int_arg(1));
    if (name == "cut-cube-dual" || name == "cut_cube_dual") return cut_cube_dual();
    if (name == "random") {
        if (parts.size() < 4) throw std::invalid_argument("random generator needs m:density:seed");
        return random_complex(int_arg(1), parse_density(parts[2]), std::stoull(parts[3]));
    }
    throw std::invalid_argument("unknown generator: " + name);
}

SimplicialComplex resolve_complex(const CommonOpts& opts) {
    if (opts.complex_path.empty() == opts.generator.empty())
        throw CLI::ValidationError("input", "exactly one of --complex or --gen is required");
    if (!opts.generator.empty()) return generator_by_name(opts.generator);
    if (opts.complex_path == "-") {
        Json j;
        std::cin >> j;
        return complex_from_json(j);
    }
    return load_complex(opts.complex_path);
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("TORFACET_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return hardware_threads();
}

void emit(const CommonOpts& opts, const Json& machine, const std::string& human) {
    if (opts.json)
        std::cout << canonical_dump(machine) << "\n";
    else
        std::cout << human;
}

std::string render_table(const BettiTable& t) {
    std::ostringstream out;
    out << "bigraded Betti numbers (" << t.coeff().str() << "):\n";
    for (auto& [key, cell] : t.cells()) {
        out << "  beta^(" << -key.first << "," << key.second << ") = " << cell.rank;
        if (!cell.torsion.empty()) {
            out << "  torsion:";
            for (long long v : cell.torsion) out << " Z/" << v;
        }
        out << "\n";
    }
    out << "  total dim = " << t.total_dim() << "\n";
    return out.str();
}

Json groups_to_json(const std::map<int, HomologyGroup>& groups) {
    Json out = Json::array();
    for (auto& [deg, g] : groups) {
        Json e;
        e["degree"] = deg;
        e["rank"] = g.rank;
        e["torsion"] = g.torsion;
        out.push_back(std::move(e));
    }
    return out;
}

// ---- subcommands -----------------------------------------------------------

int cmd_betti(const CommonOpts& opts, const std::string& method, bool multigraded) {
    SimplicialComplex K = resolve_complex(opts);
    Coefficients coeff = Coefficients::parse(opts.coeff);
    int threads = resolve_threads(opts.threads);
    Json out;
    std::ostringstream human;
    bool mismatch = false;
    if (method == "hochster" || method == "both") {
        BettiTable t = betti_table_hochster(K, coeff, threads);
        out["hochster"] = t.to_json(multigraded);
        human << "[hochster]\n" << render_table(t);
        if (method == "both") {
            BettiTable k = betti_table_koszul(K, coeff, threads);
            out["koszul"] = k.to_json(multigraded);
            human << "[koszul]\n" << render_table(k);
            mismatch = !(t == k);
            out["match"] = !mismatch;
            human << (mismatch ? "METHOD MISMATCH\n" : "methods agree\n");
        }
    } else if (method == "koszul") {
        BettiTable t = betti_table_koszul(K, coeff, threads);
        out["koszul"] = t.to_json(multigraded);
        human << "[koszul]\n" << render_table(t);
    } else {
        throw CLI::ValidationError("--method", "must be hochster | koszul | both");
    }
    emit(opts, method == "both" ? out : (out.begin().value()), human.str());
    return mismatch ? kExitFail : kExitPass;
}

int cmd_cm_test(const CommonOpts& opts) {
    SimplicialComplex K = resolve_complex(opts);
    ReisnerResult r = reisner_cm_test(K, Coefficients::parse(opts.coeff));
    Json out;
    out["verdict"] = r.cohen_macaulay ? "cohen_macaulay" : "fail";
    if (!r.cohen_macaulay)
        out["witness"] = {{"sigma", r.witness_sigma.vertices()}, {"degree", r.witness_degree}};
    emit(opts, out,
         r.cohen_macaulay
             ? "Cohen-Macaulay over " + opts.coeff + "\n"
             : "NOT Cohen-Macaulay over " + opts.coeff + ": H_" + std::to_string(r.witness_degree) +
                   "(link " + r.witness_sigma.str() + ") != 0\n");
    return r.cohen_macaulay ? kExitPass : kExitFail;
}

CharMatrix load_char_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    Json j;
    in >> j;
    CharMatrix L;
    L.n = j.at("n").get<int>();
    for (const auto& row : j.at("rows")) L.rows.push_back(row.get<std::vector<long long>>());
    return L;
}

int cmd_lsop(const CommonOpts& opts, const std::string& matrix_path) {
    SimplicialComplex K = resolve_complex(opts);
    CharMatrix L = load_char_matrix(matrix_path);
    Coefficients coeff = Coefficients::parse(opts.coeff);
    LsopResult r = coeff.kind == Coefficients::Kind::Integers ? lsop_check_integer(K, L)
                                                              : lsop_check_field(K, L, coeff);
    Json out;
    out["verdict"] = r.pass ? "pass" : "fail";
    if (!r.pass)
        out["witness"] = {{"facet", r.witness_facet.vertices()}, {"det", r.witness_det.str()}};
    emit(opts, out,
         r.pass ? "lsop check passed over " + opts.coeff + "\n"
                : "lsop check FAILED over " + opts.coeff + ": facet " + r.witness_facet.str() +
                      " has det " + r.witness_det.str() + "\n");
    return r.pass ? kExitPass : kExitFail;
}

RatKoszulElement parse_cocycle(const std::string& spec, const SimplicialComplex& K) {
    if (!spec.empty() && (spec[0] == '[' || spec[0] == '{'))
        return koszul_element_from_json(Json::parse(spec), K);
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open cocycle file: " + spec);
    Json j;
    in >> j;
    return koszul_element_from_json(j, K);
}

Json massey_result_json(const MasseyResult& r) {
    Json out;
    out["defined"] = true;
    out["representative"] = koszul_element_to_json(r.representative);
    out["representative_str"] = r.representative.str();
    out["e"] = koszul_element_to_json(r.e);
    out["f"] = koszul_element_to_json(r.f);
    out["indeterminacy_dim"] = r.indeterminacy_basis.size();
    out["trivial"] = r.trivial;
    return out;
}

int cmd_massey(const CommonOpts& opts, bool demo, const std::string& a1, const std::string& a2,
               const std::string& a3) {
    MasseyProblem problem = demo ? massey_demo_p3() : MasseyProblem{};
    if (!demo) {
        problem.K = resolve_complex(opts);
        problem.a1 = parse_cocycle(a1, problem.K);
        problem.a2 = parse_cocycle(a2, problem.K);
        problem.a3 = parse_cocycle(a3, problem.K);
    }
    try {
        MasseyResult r = triple_massey(problem);
        std::ostringstream human;
        human << "triple Massey product defined\n"
              << "  e = " << r.e.str() << "\n"
              << "  f = " << r.f.str() << "\n"
              << "  representative = " << r.representative.str() << "\n"
              << "  indeterminacy dim = " << r.indeterminacy_basis.size() << "\n"
              << "  trivial = " << (r.trivial ? "true" : "false") << "\n";
        emit(opts, massey_result_json(r), human.str());
        return kExitPass;
    } catch (const MasseyUndefined& e) {
        Json out;
        out["defined"] = false;
        out["obstruction"] = e.obstruction();
        emit(opts, out, std::string("undefined: ") + e.what() + "\n");
        std::cerr << e.what() << "\n";
        return kExitFail;
    }
}

int cmd_ukhom(const CommonOpts& opts, const std::string& route) {
    SimplicialComplex K = resolve_complex(opts);
    Coefficients coeff = Coefficients::parse(opts.coeff);
    Json out;
    std::ostringstream human;
    ArrangementReport a, b;
    bool mismatch = false;
    if (route == "subcomplex" || route == "both") {
        a = uk_homology_via_subcomplexes(K, coeff);
        out["subcomplex"] = groups_to_json(a.groups);
    }
    if (route == "dual" || route == "both") {
        b = uk_homology_via_dual_links(K, coeff);
        out["dual"] = groups_to_json(b.groups);
    }
    if (route == "both") {
        mismatch = !a.same_groups(b);
        out["match"] = !mismatch;
    } else if (route != "subcomplex" && route != "dual") {
        throw CLI::ValidationError("--route", "must be subcomplex | dual | both");
    }
    const auto& groups = route == "dual" ? b.groups : a.groups;
    human << "reduced homology of U(K) over " << coeff.str() << ":\n";
    for (auto& [deg, g] : groups) {
        human << "  H_" << deg << " rank " << g.rank;
        for (long long t : g.torsion) human << " + Z/" << t;
        human << "\n";
    }
    if (route == "both") human << (mismatch ? "ROUTE MISMATCH\n" : "routes agree\n");
    emit(opts, out, human.str());
    return mismatch ? kExitFail : kExitPass;
}

int cmd_alexander(const CommonOpts& opts) {
    SimplicialComplex K = resolve_complex(opts);
    AlexanderCheckResult r = alexander_duality_check(K, Coefficients::parse(opts.coeff));
    Json out;
    out["verdict"] = r.pass ? "pass" : "fail";
    if (!r.pass)
        out["witness"] = {{"sigma", r.witness_sigma.vertices()}, {"degree", r.witness_degree},
                          {"detail", r.detail}};
    emit(opts, out,
         r.pass ? "Alexander duality holds\n"
                : "Alexander duality FAILED at σ=" + r.witness_sigma.str() + ", j=" +
                      std::to_string(r.witness_degree) + ": " + r.detail + "\n");
    return r.pass ? kExitPass : kExitFail;
}

int cmd_trc(const CommonOpts& opts, bool report_only) {
    SimplicialComplex K = resolve_complex(opts);
    ToralRankReport r = toral_rank_check(K);
    Json out;
    out["lhs"] = r.lhs;
    out["rhs"] = r.rhs;
    out["margin"] = r.margin;
    out["holds"] = r.holds;
    out["pure"] = r.pure;
    out["n"] = r.n;
    std::ostringstream human;
    human << "toral rank check: dim H*(Z_K;Q) = " << r.lhs << " vs 2^{m-n} = " << r.rhs
          << " (margin " << r.margin << ")";
    if (!r.pure) human << " [non-pure: n = dim K + 1]";
    human << (r.holds ? " HOLDS" : " VIOLATION (reported, not a disproof)") << "\n";
    emit(opts, out, human.str());
    return (r.holds || report_only) ? kExitPass : kExitFail;
}

int cmd_complex_op(const CommonOpts& opts, const std::string& op, const std::string& sigma_str,
                   const std::string& omega_str, const std::string& other_path,
                   const std::string& other_gen) {
    auto parse_subset = [](const std::string& s) {
        Subset out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) out.insert(std::stoi(item));
        return out;
    };
    SimplicialComplex K = resolve_complex(opts);
    SimplicialComplex result = K;
    if (op == "gen") {
        result = K;
    } else if (op == "join") {
        CommonOpts other;
        other.complex_path = other_path;
        other.generator = other_gen;
        result = join(K, resolve_complex(other));
    } else if (op == "stellar") {
        result = stellar_subdivision(K, parse_subset(sigma_str));
    } else if (op == "dual") {
        result = dual_complex(K);
    } else if (op == "link") {
        result = link(K, parse_subset(sigma_str));
    } else if (op == "star") {
        result = star(K, parse_subset(sigma_str));
    } else if (op == "sub") {
        result = full_subcomplex(K, parse_subset(omega_str)).complex;
    } else {
        throw CLI::ValidationError("op", "must be join|stellar|dual|link|star|sub|gen");
    }
    std::cout << canonical_dump(complex_to_json(result)) << "\n";
    return kExitPass;
}

int cmd_suite(const CommonOpts& opts, const std::string& name, std::vector<std::string> coeff_list,
              int random_cases) {
    std::vector<Coefficients> coeffs;
    for (auto& c : coeff_list) coeffs.push_back(Coefficients::parse(c));
    SuiteReport report = run_suite(name, coeffs, random_cases, resolve_threads(opts.threads));
    std::ostringstream human;
    human << "suite " << report.suite << ": " << (report.cases.size() - report.failures()) << "/"
          << report.cases.size() << " passed\n";
    for (auto& c : report.cases)
        if (!c.pass) human << "  FAIL " << c.name << ": " << c.detail << "\n";
    emit(opts, report.to_json(), human.str());
    return report.all_pass() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torfacet: Tor-algebras of face rings / moment-angle complex cohomology"};
    app.require_subcommand(1);

    CommonOpts betti_opts;
    std::string betti_method = "hochster";
    bool multigraded = false;
    auto* betti = app.add_subcommand("betti", "bigraded Betti numbers beta^{-i,2j}");
    add_input_flags(betti, betti_opts);
    betti->add_option("--method", betti_method, "hochster | koszul | both")->capture_default_str();
    betti->add_flag("--multigraded", multigraded, "include the multigraded refinement");

    CommonOpts cm_opts;
    auto* cm = app.add_subcommand("cm-test", "Reisner Cohen-Macaulay criterion");
    add_input_flags(cm, cm_opts);

    CommonOpts lsop_opts;
    lsop_opts.coeff = "z";  // integer criterion by default
    std::string matrix_path;
    auto* lsop = app.add_subcommand("lsop-check", "facet-minor lsop criterion for a CharMatrix");
    add_input_flags(lsop, lsop_opts);
    lsop->add_option("--matrix", matrix_path, "CharMatrix JSON {\"n\":int,\"rows\":[[ints]]}")
        ->required();

    CommonOpts massey_opts;
    std::string a1, a2, a3;
    auto* massey = app.add_subcommand("massey", "triple Massey product <a1,a2,a3>");
    add_input_flags(massey, massey_opts, false);
    massey->add_option("--a1", a1, "cocycle (inline JSON or file)");
    massey->add_option("--a2", a2, "cocycle (inline JSON or file)");
    massey->add_option("--a3", a3, "cocycle (inline JSON or file)");
    auto* demo = massey->add_subcommand("demo-p3", "run the cut-cube example");
    CommonOpts demo_opts;
    demo->add_flag("--json", demo_opts.json, "machine-readable JSON on stdout");

    CommonOpts uk_opts;
    std::string route = "both";
    auto* ukhom = app.add_subcommand("ukhom", "homology of the subspace arrangement complement U(K)");
    add_input_flags(ukhom, uk_opts);
    ukhom->add_option("--route", route, "subcomplex | dual | both")->capture_default_str();

    CommonOpts alex_opts;
    auto* alex = app.add_subcommand("alexander-check", "combinatorial Alexander duality check");
    add_input_flags(alex, alex_opts);

    CommonOpts trc_opts;
    bool report_only = false;
    auto* trc = app.add_subcommand("trc-check", "toral rank inequality check");
    add_input_flags(trc, trc_opts, false);
    trc->add_flag("--report-only", report_only, "exit 0 even on violation");

    CommonOpts cx_opts;
    std::string cx_op, sigma_str, omega_str, other_path, other_gen;
    auto* cx = app.add_subcommand("complex", "combinatorial operations on complexes");
    cx->add_option("op", cx_op, "join|stellar|dual|link|star|sub|gen")->required();
    add_input_flags(cx, cx_opts, false);
    cx->add_option("--sigma", sigma_str, "face, comma separated, e.g. 1,3");
    cx->add_option("--omega", omega_str, "vertex subset, comma separated");
    cx->add_option("--complex2", other_path, "second complex file (join)");
    cx->add_option("--gen2", other_gen, "second generator (join)");

    CommonOpts suite_opts;
    std::string suite_name;
    std::vector<std::string> suite_coeffs;
    int suite_random = 60;
    auto* suite = app.add_subcommand("suite", "run a named cross-check battery");
    suite->add_option("name", suite_name, "one of: paper-goldens, hochster-vs-koszul, ...")->required();
    suite->add_option("--coeff", suite_coeffs, "coefficient systems (repeatable)");
    suite->add_option("--random-cases", suite_random, "randomized case count")->capture_default_str();
    suite->add_option("--threads", suite_opts.threads, "worker threads");
    suite->add_flag("--json", suite_opts.json, "machine-readable JSON on stdout");

    CommonOpts corpus_opts;
    std::string corpus_dir;
    auto* corpus_cmd = app.add_subcommand("corpus", "write golden corpus files");
    corpus_cmd->add_option("--dir", corpus_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (betti->parsed()) return cmd_betti(betti_opts, betti_method, multigraded);
        if (cm->parsed()) return cmd_cm_test(cm_opts);
        if (lsop->parsed()) return cmd_lsop(lsop_opts, matrix_path);
        if (massey->parsed()) {
            if (demo->parsed()) return cmd_massey(demo_opts, true, "", "", "");
            if (a1.empty() || a2.empty() || a3.empty())
                throw CLI::ValidationError("massey", "--a1 --a2 --a3 are required (or demo-p3)");
            return cmd_massey(massey_opts, false, a1, a2, a3);
        }
        if (ukhom->parsed()) return cmd_ukhom(uk_opts, route);
        if (alex->parsed()) return cmd_alexander(alex_opts);
        if (trc->parsed()) return cmd_trc(trc_opts, report_only);
        if (cx->parsed()) return cmd_complex_op(cx_opts, cx_op, sigma_str, omega_str, other_path, other_gen);
        if (suite->parsed()) return cmd_suite(suite_opts, suite_name, suite_coeffs, suite_random);
        if (corpus_cmd->parsed()) {
            write_corpus_dir(corpus_dir);
            std::cout << "wrote " << corpus().size() << " corpus files to " << corpus_dir << "\n";
            return kExitPass;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
