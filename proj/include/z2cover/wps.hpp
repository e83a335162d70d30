#pragma once

// Numerics of the weighted projective threefold P(a0,a1,a2,a3).

#include <array>
#include <cstdint>
#include <string>

namespace z2c {

using WeightTuple = std::array<std::int64_t, 4>;

bool well_formed(const WeightTuple& a);

class Weights {
public:
    Weights() : Weights(WeightTuple{1, 1, 1, 1}) {}
    // Sorts ascending; weights must be positive. Well-formedness is reported, not enforced.
    explicit Weights(WeightTuple a);

    const WeightTuple& a() const { return a_; }
    std::int64_t operator[](int i) const { return a_[i]; }
    std::int64_t L() const { return L_; }
    std::int64_t W() const { return W_; }
    std::int64_t A() const { return A_; }
    // sum_{i<j} a_i a_j
    std::int64_t sigma2() const { return sigma2_; }
    bool well_formed() const { return z2c::well_formed(a_); }
    std::string str() const;

    bool operator==(const Weights& o) const { return a_ == o.a_; }
    auto operator<=>(const Weights& o) const { return a_ <=> o.a_; }

private:
    WeightTuple a_;
    std::int64_t L_, W_, A_, sigma2_;
};

// #{e in Z>=0^4 : sum e_i a_i = n}; 0 for n < 0.
std::int64_t monomial_count(const Weights& w, std::int64_t n);

// P(n) - P(-n-W).
std::int64_t euler_char_line(const Weights& w, std::int64_t n);

}  // namespace z2c
