#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "torfacet/homology.hpp"
#include "torfacet/serialize.hpp"
#include "torfacet/subset.hpp"

namespace torfacet {

/// Bigraded Betti table: cell (i, 2j) holds the rank (and, over Z, torsion)
/// of Tor^{-i,2j}, equivalently of H^{-i,2j}(Z_K). A multigraded refinement
/// (i, ω) -> rank is carried alongside. Only nonzero cells are stored, so
/// tables compare by value.
class BettiTable {
public:
    struct Cell {
        long rank = 0;
        std::vector<long long> torsion;
        bool operator==(const Cell&) const = default;
    };

    explicit BettiTable(Coefficients coeff = Coefficients::q()) : coeff_(coeff) {}

    const Coefficients& coeff() const { return coeff_; }

    /// Accumulates a contribution into cell (i, 2j); ranks add, torsion
    /// multisets merge.
    void add(int i, int j2, long rank, const std::vector<long long>& torsion = {});
    void add_multigraded(int i, Subset omega, long rank);

    const std::map<std::pair<int, int>, Cell>& cells() const { return cells_; }
    const std::map<std::pair<int, std::uint32_t>, long>& multigraded() const { return multigraded_; }

    Cell cell(int i, int j2) const;
    long rank(int i, int j2) const { return cell(i, j2).rank; }

    long long total_dim() const;
    /// Ordinary Betti numbers b^k = Σ_{2j-i=k} rank(-i,2j).
    std::map<int, long long> total_by_degree() const;

    bool operator==(const BettiTable& o) const {
        return coeff_ == o.coeff_ && cells_ == o.cells_ && multigraded_ == o.multigraded_;
    }
    /// Equality of the bigraded cells only (ranks + torsion).
    bool same_cells(const BettiTable& o) const { return cells_ == o.cells_; }

    Json to_json(bool include_multigraded = false) const;
    static BettiTable from_json(const Json& j);

private:
    Coefficients coeff_;
    std::map<std::pair<int, int>, Cell> cells_;
    std::map<std::pair<int, std::uint32_t>, long> multigraded_;
};

}  // namespace torfacet
