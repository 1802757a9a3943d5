#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace torfacet {

/// A subset of the vertex set [m] = {1,...,m}, stored as a bitmask.
/// Vertex i occupies bit i-1. Supports m up to 31, far beyond the
/// 2^m enumeration scale this library targets.
class Subset {
public:
    constexpr Subset() : bits_(0) {}
    constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

    Subset(std::initializer_list<int> vertices) : bits_(0) {
        for (int v : vertices) insert(v);
    }

    static Subset full(int m) {
        if (m < 0 || m > 31) throw std::invalid_argument("Subset: m out of range");
        return Subset(m == 0 ? 0u : ((1u << m) - 1u));
    }
    static Subset single(int v) { return Subset({v}); }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr bool contains(int v) const { return v >= 1 && (bits_ >> (v - 1)) & 1u; }
    void insert(int v) {
        if (v < 1 || v > 32) throw std::invalid_argument("Subset: vertex out of range");
        bits_ |= 1u << (v - 1);
    }
    void erase(int v) {
        if (v >= 1 && v <= 32) bits_ &= ~(1u << (v - 1));
    }

    constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(Subset o) const { return (bits_ & o.bits_) != 0; }

    constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
    constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
    /// set difference
    constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
    constexpr Subset with(int v) const { return Subset(bits_ | (1u << (v - 1))); }
    constexpr Subset without(int v) const { return Subset(bits_ & ~(1u << (v - 1))); }

    constexpr bool operator==(const Subset&) const = default;
    constexpr auto operator<=>(const Subset&) const = default;

    int min_vertex() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

    /// 0-based position of v in the ascending vertex list; v must be a member.
    int position_of(int v) const { return std::popcount(bits_ & ((1u << (v - 1)) - 1u)); }

    /// #{(a,b) : a in *this, b in o, a > b}; shuffle/inversion count.
    int inversions_with(Subset o) const {
        int n = 0;
        for (std::uint32_t rest = bits_; rest;) {
            int bit = std::countr_zero(rest);
            rest &= rest - 1;
            n += std::popcount(o.bits_ & ((1u << bit) - 1u));
        }
        return n;
    }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint32_t rest = bits_; rest;) {
            out.push_back(std::countr_zero(rest) + 1);
            rest &= rest - 1;
        }
        return out;
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int v : vertices()) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

private:
    std::uint32_t bits_;
};

inline Subset subset_from_vertices(const std::vector<int>& vs) {
    Subset s;
    for (int v : vs) s.insert(v);
    return s;
}

/// Lexicographic order on the ascending vertex sequences (not bitmask order);
/// this is the order used for canonical facet output.
inline bool lex_less(Subset a, Subset b) {
    auto va = a.vertices(), vb = b.vertices();
    return va < vb;
}

/// Iterates all 2^m subsets of [m] in increasing bitmask order.
class SubsetRange {
public:
    explicit SubsetRange(int m) : count_(m >= 0 && m <= 31 ? (1u << m) : 0) {
        if (m < 0 || m > 31) throw std::invalid_argument("SubsetRange: m out of range");
    }
    struct iterator {
        std::uint32_t v;
        Subset operator*() const { return Subset(v); }
        iterator& operator++() { ++v; return *this; }
        bool operator!=(const iterator& o) const { return v != o.v; }
    };
    iterator begin() const { return {0}; }
    iterator end() const { return {count_}; }

private:
    std::uint32_t count_;
};

}  // namespace torfacet
