#include "torfacet/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace torfacet {

std::string canonical_dump(const Json& j) { return j.dump(); }

Json complex_to_json(const SimplicialComplex& K) {
    Json j;
    j["m"] = K.vertex_count();
    Json facets = Json::array();
    for (Subset f : K.facets()) facets.push_back(f.vertices());
    j["facets"] = std::move(facets);
    return j;
}

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("facets"))
        throw std::invalid_argument("complex JSON must be {\"m\": int, \"facets\": [[ints]...]}");
    int m = j.at("m").get<int>();
    std::vector<Subset> facets;
    for (const auto& f : j.at("facets")) facets.push_back(subset_from_json(f));
    return SimplicialComplex::from_facets(m, std::move(facets));
}

SimplicialComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open complex file: " + path);
    Json j;
    in >> j;
    return complex_from_json(j);
}

Json subset_to_json(Subset s) { return Json(s.vertices()); }

Subset subset_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("vertex set must be a JSON array of ints");
    Subset s;
    for (const auto& v : j) s.insert(v.get<int>());
    return s;
}

}  // namespace torfacet
