#pragma once

// Building data of a (Z2)^s-cover of P(a0,a1,a2,a3): branch degrees d_g, eigensheaf
// degrees l_chi with 2 l_chi = sum_{chi.g=1} d_g, flatness, Hurwitz degree, 1/2(1,1,1) points.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "z2cover/gf2.hpp"
#include "z2cover/walsh.hpp"
#include "z2cover/wps.hpp"

namespace z2c {

// d(0) = 0, d >= 0, total degree > 0. Throws std::invalid_argument otherwise.
void check_branch(const GroupFunction& d);

struct CoverSpec {
    Weights weights;
    GroupFunction d;

    int s() const { return d.rank(); }
    std::int64_t D() const { return d.total(); }
};

// Throws NonIntegral naming a character with odd half-sum.
std::vector<std::int64_t> eigensheaf_degrees(const GroupFunction& d);
std::optional<std::vector<std::int64_t>> try_eigensheaf_degrees(const GroupFunction& d);

bool is_flat(const CoverSpec& c);
bool is_flat(std::int64_t L, const std::vector<std::int64_t>& l);

// D/2 - W
mpq_class hurwitz_degree(const CoverSpec& c);

// sum over unordered {p,q,r}, p+q+r = 0, of d_p d_q d_r / A. Throws NonIntegral if fractional.
std::int64_t half_point_count(const CoverSpec& c);

struct ValidationReport {
    bool branch_ok = true;
    std::string branch_error;
    bool weights_well_formed = false;
    bool weights_were_sorted = true;
    Elem parity = 0;
    bool parity_ok = false;
    std::optional<bool> flat;
    mpq_class hurwitz;
    int hurwitz_sign = 0;
    std::optional<std::int64_t> half_points;
    std::string half_points_error;
    bool genericity_assumed = true;

    bool ok() const { return branch_ok && weights_well_formed && parity_ok; }
};

ValidationReport validate(const CoverSpec& c, bool input_sorted = true);

}  // namespace z2c
