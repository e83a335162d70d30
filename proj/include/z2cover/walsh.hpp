#pragma once

// Unnormalized Walsh transform on (Z2)^s:  dhat(chi) = sum_x d(x) (-1)^(chi.x).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "z2cover/gf2.hpp"

namespace z2c {

struct NonIntegral : std::domain_error {
    NonIntegral(const std::string& what, Elem where) : std::domain_error(what), element(where) {}
    Elem element;
};

struct Spectrum {
    int s = 0;
    std::vector<std::int64_t> v;

    std::int64_t operator[](Elem chi) const { return v[chi]; }
    bool operator==(const Spectrum&) const = default;
};

// In-place butterfly, overflow checked. Size must be a power of two.
void fwht_inplace(std::vector<std::int64_t>& a);

Spectrum forward(const GroupFunction& d);

// Throws NonIntegral naming the first x where 2^s does not divide the sum.
GroupFunction inverse(const Spectrum& S);
std::optional<GroupFunction> try_inverse(const Spectrum& S);

// l(chi) = (S(0) - S(chi)) / 4 for chi != 0, l(0) = 0.
std::vector<mpq_class> degrees_from_spectrum(const Spectrum& S);

// 2^-s sum_chi S(chi)^3.
mpq_class triple_convolution_at_zero(const Spectrum& S);

}  // namespace z2c
