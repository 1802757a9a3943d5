#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "torfacet/betti.hpp"
#include "torfacet/complex.hpp"
#include "torfacet/homology.hpp"
#include "torfacet/serialize.hpp"

namespace torfacet {

/// Named complex plus frozen expected values. Provenance records where each
/// expected number comes from.
struct CorpusEntry {
    std::string name;
    SimplicialComplex complex;
    std::string provenance;
    Json expected;
};

/// The built-in corpus; deterministic and stable (golden files are exported
/// from this registry and must never drift).
const std::vector<CorpusEntry>& corpus();

/// Deterministic pseudo-random downward-closed complex: every nonempty
/// subset S becomes a candidate facet with probability density^{|S|}, then
/// non-maximal candidates are dropped. Same (m, density, seed) gives a
/// byte-identical complex. 1 <= m <= 16.
SimplicialComplex random_complex(int m, const Rat& density, std::uint64_t seed);

struct CaseResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;

    bool all_pass() const;
    long failures() const;
    Json to_json() const;
};

std::vector<std::string> suite_names();

/// Runs one of the named cross-check batteries. Coefficients default per
/// suite when the list is empty; random_cases scales the randomized parts.
SuiteReport run_suite(const std::string& name, std::vector<Coefficients> coeffs = {},
                      int random_cases = 60, int threads = 1);

/// Golden-file export of the corpus (one JSON file per entry, canonical
/// bytes) and the byte-stability verification against a directory.
void write_corpus_dir(const std::string& dir);
SuiteReport verify_corpus_dir(const std::string& dir);

Json corpus_entry_to_json(const CorpusEntry& e);

}  // namespace torfacet
