#include "torfacet/betti.hpp"

#include <algorithm>

namespace torfacet {

void BettiTable::add(int i, int j2, long rank, const std::vector<long long>& torsion) {
    if (rank == 0 && torsion.empty()) return;
    Cell& c = cells_[{i, j2}];
    c.rank += rank;
    c.torsion.insert(c.torsion.end(), torsion.begin(), torsion.end());
    std::sort(c.torsion.begin(), c.torsion.end());
    if (c.rank == 0 && c.torsion.empty()) cells_.erase({i, j2});
}

void BettiTable::add_multigraded(int i, Subset omega, long rank) {
    if (rank == 0) return;
    multigraded_[{i, omega.bits()}] += rank;
}

BettiTable::Cell BettiTable::cell(int i, int j2) const {
    auto it = cells_.find({i, j2});
    return it == cells_.end() ? Cell{} : it->second;
}

long long BettiTable::total_dim() const {
    long long t = 0;
    for (auto& [k, c] : cells_) t += c.rank;
    return t;
}

std::map<int, long long> BettiTable::total_by_degree() const {
    std::map<int, long long> out;
    for (auto& [k, c] : cells_)
        if (c.rank != 0) out[k.second - k.first] += c.rank;  // 2j - i
    return out;
}

Json BettiTable::to_json(bool include_multigraded) const {
    Json j;
    j["field"] = coeff_.str();
    Json entries = Json::array();
    for (auto& [key, c] : cells_) {
        Json e;
        e["i"] = -key.first;
        e["j2"] = key.second;
        e["rank"] = c.rank;
        e["torsion"] = c.torsion;
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    if (include_multigraded) {
        Json mg = Json::array();
        for (auto& [key, rank] : multigraded_) {
            Json e;
            e["i"] = -key.first;
            e["omega"] = Subset(key.second).vertices();
            e["rank"] = rank;
            mg.push_back(std::move(e));
        }
        j["multigraded"] = std::move(mg);
    }
    return j;
}

BettiTable BettiTable::from_json(const Json& j) {
    BettiTable t(Coefficients::parse(j.at("field").get<std::string>()));
    for (const auto& e : j.at("entries")) {
        std::vector<long long> torsion;
        if (e.contains("torsion"))
            for (const auto& v : e.at("torsion")) torsion.push_back(v.get<long long>());
        t.add(-e.at("i").get<int>(), e.at("j2").get<int>(), e.at("rank").get<long>(), torsion);
    }
    if (j.contains("multigraded"))
        for (const auto& e : j.at("multigraded")) {
            Subset omega;
            for (const auto& v : e.at("omega")) omega.insert(v.get<int>());
            t.add_multigraded(-e.at("i").get<int>(), omega, e.at("rank").get<long>());
        }
    return t;
}

}  // namespace torfacet
