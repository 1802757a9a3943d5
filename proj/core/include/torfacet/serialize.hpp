#pragma once

#include <json.hpp>

#include <string>

#include "torfacet/complex.hpp"

namespace torfacet {

/// Key order is preserved everywhere so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

/// Canonical text form used by the CLI and golden files (compact, sorted
/// facets); parse/serialize round trips are byte-identical.
std::string canonical_dump(const Json& j);

Json complex_to_json(const SimplicialComplex& K);
SimplicialComplex complex_from_json(const Json& j);
SimplicialComplex load_complex(const std::string& path);

Json subset_to_json(Subset s);
Subset subset_from_json(const Json& j);

}  // namespace torfacet
