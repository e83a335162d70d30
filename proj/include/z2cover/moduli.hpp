#pragma once

// Numeric deformation criteria, hyperplane-arrangement configurations and the
// example families of covers.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "z2cover/classify.hpp"
#include "z2cover/cover.hpp"

namespace z2c {

struct DeformationReport {
    bool pairwise_ok = true;
    std::vector<std::pair<Elem, Elem>> failing;  // (g, chi), first few only
    std::int64_t failing_count = 0;
    bool total_degree_ok = false;  // D > 2W
    bool weights_pairwise_coprime = false;
    bool genericity_assumed = true;
    bool ok() const { return pairwise_ok && total_degree_ok; }
};

// For every g in the support and chi != 0 with chi.g = 0: d(g) < l(chi); and D > 2W.
DeformationReport deformation_criteria(const CoverSpec& c);
// Same test against given l-values.
DeformationReport deformation_criteria(const CoverSpec& c, const std::vector<std::int64_t>& l);

// subspace_dim empty: d = 1 on G - {0}, needs s >= 3, W < (2^s - 1)/2.
// Otherwise d = 1 off span(e_0..e_{dim-1}), needs s >= 4 and 2 <= dim < s, W < (2^s - 2^dim)/2.
// Both also require every affine hyperplane avoiding 0 to meet the support in >= 4 points.
bool hyperplane_config_check(int s, const Weights& w, std::optional<int> subspace_dim = std::nullopt);

// Branch data used by hyperplane_config_check.
GroupFunction hyperplane_config_branch(int s, std::optional<int> subspace_dim);

struct NewComponent {
    CoverSpec cover;  // P(1,1,1,M), s = 4, d(e_0) = 2, d = M elsewhere
    std::vector<std::int64_t> l;
    bool flat = false;
    DeformationReport deformation;
};

NewComponent gen_new_component(std::int64_t M);

enum class FamilyKind { canonical, bicanonical };

struct UnboundedFamily {
    FamilyKind kind;
    CoverSpec cover;  // P(1,1,L,L), d supported on {g : g_0 = 1}
    std::int64_t L = 0;
    std::int64_t t = 0;       // common branch degree
    std::int64_t m = 0;       // 1 or 2
    Elem chi0 = 1;
    std::int64_t l_chi0 = 0;  // l at chi0
    std::int64_t l_other = 0; // l at every other nonzero character
    PluricanonicalReport report;
    bool boundary = false;    // flat: the family meets the flat classification here
};

UnboundedFamily gen_unbounded(int s, FamilyKind kind);

}  // namespace z2c
