#pragma once

// The group G = (Z2)^s, its characters, and GL_s(F2) orbits of functions on G.
// Elements and characters are machine integers; bit i is coordinate i.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace z2c {

using Elem = std::uint32_t;

inline constexpr int kMaxRank = 24;
inline constexpr int kMaxExactOrbitRank = 5;

struct RankError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void check_rank(int s);

inline std::size_t group_order(int s) { return std::size_t{1} << s; }

inline int dot(Elem chi, Elem g) { return std::popcount(chi & g) & 1; }

// Checked form: both arguments must lie in (Z2)^s.
int dot(Elem chi, Elem g, int s);

// "1011" -> element with coordinates (1,0,1,1); index 0 is the first character.
Elem parse_bits(const std::string& bits, int s);
std::string format_bits(Elem g, int s);

class GroupFunction {
public:
    GroupFunction() = default;
    explicit GroupFunction(int s);
    GroupFunction(int s, std::vector<std::int64_t> values);

    // Values listed for g = 1, 2, ..., 2^s - 1; d(0) = 0.
    static GroupFunction from_nonzero(int s, const std::vector<std::int64_t>& tail);

    int rank() const { return s_; }
    std::size_t size() const { return v_.size(); }
    std::int64_t operator[](Elem g) const { return v_[g]; }
    std::int64_t& operator[](Elem g) { return v_[g]; }
    const std::vector<std::int64_t>& values() const { return v_; }
    std::vector<std::int64_t> nonzero_values() const;

    std::int64_t total() const;
    std::int64_t sum_of_squares() const;
    std::vector<Elem> support() const;

    bool operator==(const GroupFunction&) const = default;
    auto operator<=>(const GroupFunction& o) const {
        if (auto c = s_ <=> o.s_; c != 0) return c;
        return v_ <=> o.v_;
    }

private:
    int s_ = 0;
    std::vector<std::int64_t> v_;
};

// Sum over g of d(g) * g in F2^s.
Elem parity_vector(const GroupFunction& d);

// Lexicographically least member of {d o B : B in GL_s(F2)} with elements
// ordered as integers. Exhaustive search with prefix pruning, s <= 5.
GroupFunction canonicalize(const GroupFunction& d);

// (d o B)(x) = d(sum_i x_i cols[i]).
GroupFunction apply_basis(const GroupFunction& d, const std::vector<Elem>& cols);

int gf2_rank(std::vector<Elem> vectors);
bool is_basis(const std::vector<Elem>& cols, int s);

// Orbit invariant used above the exhaustive cap: sorted d-values, sorted
// 4*l-values, sorted sums of d over the nonzero points of 2-dim subspaces.
std::vector<std::int64_t> orbit_signature(const GroupFunction& d);

struct OrbitKey {
    bool exact = true;
    std::vector<std::int64_t> key;
    auto operator<=>(const OrbitKey&) const = default;
};

OrbitKey orbit_key(const GroupFunction& d);

// min over u != 0 of |A intersect {x : u.x = 1}|.
std::int64_t affine_hyperplane_min_intersection(const std::vector<Elem>& A, int s);

}  // namespace z2c
