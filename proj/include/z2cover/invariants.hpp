#pragma once

// K^3, chi(O_X), e(X) of a cover and the ratio-vector geography functionals.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "z2cover/cover.hpp"

namespace z2c {

// 2^s / A * (D/2 - W)^3
mpq_class volume(const CoverSpec& c);

// sum over all characters of chi(O_Y(-l_chi)); exact under the vanishing hypothesis.
std::int64_t holomorphic_euler(const CoverSpec& c);

enum class Exactness { exact, orbifold_only };
const char* to_string(Exactness e);

struct EulerValue {
    mpq_class value;
    Exactness exactness;
};

EulerValue topological_euler(const CoverSpec& c);

struct InvariantReport {
    mpq_class K3;
    std::int64_t chi = 0;
    mpq_class euler;
    Exactness euler_exactness = Exactness::exact;
    std::optional<mpq_class> x, y;  // e/(24 chi), -K3/(24 chi)
};

InvariantReport invariants(const CoverSpec& c);

// r(0) = 0, r >= 0, sum r = 1.
struct RatioVector {
    int s = 0;
    std::vector<mpq_class> r;
};

void check_ratio_vector(const RatioVector& r);
RatioVector vertex_vector(int s, Elem g);
RatioVector barycenter_vector(int s);
// Integer weights on G minus {0}, normalized; index 0 ignored.
RatioVector normalized(int s, const std::vector<std::int64_t>& weights);
RatioVector random_ratio_vector(int s, std::mt19937_64& rng, std::int64_t max_weight = 24);

struct GeographyPoint {
    mpq_class a, b, T, S_idp, Q, Phi, x, y, SCI;
};

GeographyPoint geography_point(const RatioVector& r);

// Closed forms used as bounds.
mpq_class barycenter_y(int s);               // 2 - 2^{2-s} + 2^{1-2s}
mpq_class q_lower_bound(int s);              // 2^{3s-3} / (2^s - 1)^2
mpq_class q_upper_bound(int s);              // 2^{s-1}
mpq_class x_lower_bound_statement(int s);    // (3*2^{2s-2} + 2^{s+1} - 1) / (3 (2^s - 1)^2)
mpq_class x_lower_bound_proof(int s);        // (3*2^{2s-2} - 2^{s+1} - 1) / (3 (2^s + 1)^2)
inline const mpq_class kSciLower{-1, 2};
inline const mpq_class kSciUpper{8, 3};

struct HuntPoint {
    RatioVector r;
    mpq_class F;  // 7a - 9b^2
    GeographyPoint point;
};

// r = t at g0 = e_0, (1-t)/(2^{s-1}-1) on the rest of {g : g_0 = 1}, 0 elsewhere.
HuntPoint hunt_scan(int s, const mpq_class& t);

}  // namespace z2c
