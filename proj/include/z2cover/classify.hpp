#pragma once

// Pluricanonical admissibility and the classification of flat pluricanonical covers.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "z2cover/cover.hpp"

namespace z2c {

struct PluricanonicalReport {
    std::int64_t m = 0;
    std::int64_t D = 0;
    std::int64_t M = 0;
    std::int64_t k = 0;
    std::vector<std::int64_t> l;
    std::int64_t plurigenus = 0;  // monomial_count(M)
    bool flat = false;
};

// M = (m/2) D - m W a positive multiple of L, and no sections of O(M - l_chi) for chi != 0.
std::optional<PluricanonicalReport> is_pluricanonical(const Weights& w, const GroupFunction& d, std::int64_t m);

struct AdmissibleSolution {
    Weights weights;
    int s = 0;
    std::int64_t m = 0;
    std::int64_t k = 0;
    GroupFunction d;  // orbit representative (canonical form when s <= 5)
    std::vector<std::int64_t> l;
    std::int64_t plurigenus = 0;
    bool flat = false;
    bool signature_level = false;  // orbit dedupe by invariants only (s >= 6)
    std::string note;

    std::int64_t D() const { return d.total(); }
    bool operator==(const AdmissibleSolution& o) const {
        return weights == o.weights && s == o.s && m == o.m && k == o.k && d == o.d;
    }
};

// Deterministic order: s, m, weights, k, d.
bool solution_less(const AdmissibleSolution& a, const AdmissibleSolution& b);

// beta(s) = 2 - 2^{1-s}
mpq_class beta(int s);

// W <= 2L+2 for L >= 2; W/L >= (k+1) beta - k/m; (2^s-1)(k+1)L <= 2^{s-2} D with D = 2W + 2kL/m.
bool bound_prune(int s, std::int64_t m, std::int64_t L, std::int64_t W, std::int64_t k);
// Some L >= 2 and W pass bound_prune.
bool bound_window_nonempty(int s, std::int64_t m, std::int64_t k);

// Pairs without flat solutions over bases with L >= 2.
bool forbidden_flat(int s, std::int64_t m);

using Counts = std::map<std::int64_t, std::int64_t>;  // value -> multiplicity

struct LDistributionSearch {
    std::vector<Counts> accepted;
    std::vector<std::pair<Counts, mpq_class>> rejected_cubic;  // with the negative cubic moment
};

LDistributionSearch l_distribution_search(int s, std::int64_t D, std::int64_t min_l, std::int64_t sum_d_squared);
std::vector<Counts> l_distribution_candidates(int s, std::int64_t D, std::int64_t min_l, std::int64_t sum_d_squared);

// Number of exceptional-value placements reconstruct_branch would visit.
mpz_class placement_count(int s, const Counts& n_counts);

// Spectral reconstruction: place l-values on characters, invert dhat = D - 4l, keep
// integral nonnegative results; one representative per orbit, sorted.
std::vector<GroupFunction> reconstruct_branch(int s, std::int64_t D, const Counts& n_counts);

// Direct search over d with sum D and all l >= min_l; a basis is fixed inside the support,
// so every orbit is met. One representative per orbit, sorted.
std::vector<GroupFunction> search_branch_direct(int s, std::int64_t D, std::int64_t min_l);

std::int64_t support_bound(std::int64_t C, std::int64_t p);

// m-count profile of d over nonzero g.
Counts value_profile(const GroupFunction& d);

struct BoundsReport {
    std::vector<std::string> lines;
    void add(std::string line) { lines.push_back(std::move(line)); }
};

std::vector<AdmissibleSolution> enumerate_flat(int s, std::int64_t m, BoundsReport* report = nullptr);

struct L1Case {
    int index;  // 1..9
    std::int64_t m;
    int s_min, s_max;  // s_max = 0 means "s >= s_min"
    std::int64_t k;
    std::int64_t D;
};

const std::vector<L1Case>& l1_cases();
std::optional<L1Case> l1_case_for(int s, std::int64_t m, std::int64_t k);

// All admissible solutions over P(1,1,1,1) for one (s, m, k), no case restriction.
std::vector<AdmissibleSolution> enumerate_L1_cell(int s, std::int64_t m, std::int64_t k, BoundsReport* report = nullptr);

// Restricted to the nine listed (m, s, k, D) cases.
std::vector<AdmissibleSolution> enumerate_L1(int s, std::int64_t m, BoundsReport* report = nullptr);

// Largest k worth trying over P(1,1,1,1): beyond it the first moment fails.
std::int64_t l1_k_limit(int s, std::int64_t m);

struct S1Family {
    Weights weights;
    std::int64_t m = 1;
    std::int64_t L = 1, W = 4;
    std::vector<std::int64_t> t_values;  // d = 2 L t
    bool meets_stated_divisibility = true;  // (m-1) | 2W
};

// s = 1. m = 1: t runs from W/L + 1 to t_max with k = t - W/L.
// m >= 2: the finite window W/L < t < (m/(m-1)) W/L. Families failing (m-1) | 2W are
// dropped unless keep_all is set, in which case they carry meets_stated_divisibility = false.
std::vector<S1Family> enumerate_s1(std::int64_t m, std::int64_t t_max, bool keep_all = false);

// Sorted b with sum 1/b_i = p/q, b_1 <= ... <= b_4, gcd(b) = 1.
std::vector<std::array<std::int64_t, 4>> egyptian_quadruples(std::int64_t p, std::int64_t q);

}  // namespace z2c
