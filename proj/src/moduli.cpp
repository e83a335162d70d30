#include "z2cover/moduli.hpp"

#include <numeric>
#include <stdexcept>

namespace z2c {

DeformationReport deformation_criteria(const CoverSpec& c) {
    check_branch(c.d);
    return deformation_criteria(c, eigensheaf_degrees(c.d));
}

DeformationReport deformation_criteria(const CoverSpec& c, const std::vector<std::int64_t>& l) {
    if (l.size() != c.d.size()) throw std::invalid_argument("one l-value per character expected");
    DeformationReport rep;
    const Elem n = static_cast<Elem>(c.d.size());
    for (Elem g : c.d.support())
        for (Elem chi = 1; chi < n; ++chi) {
            if (dot(chi, g) != 0 || c.d[g] < l[chi]) continue;
            rep.pairwise_ok = false;
            if (rep.failing.size() < 16) rep.failing.emplace_back(g, chi);
            ++rep.failing_count;
        }
    rep.total_degree_ok = c.D() > 2 * c.weights.W();
    const auto& a = c.weights.a();
    rep.weights_pairwise_coprime = true;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::gcd(a[i], a[j]) != 1) rep.weights_pairwise_coprime = false;
    return rep;
}

GroupFunction hyperplane_config_branch(int s, std::optional<int> subspace_dim) {
    check_rank(s);
    GroupFunction d(s);
    if (!subspace_dim) {
        if (s < 3) throw std::invalid_argument("configuration (1) needs s >= 3");
        for (Elem g = 1; g < d.size(); ++g) d[g] = 1;
        return d;
    }
    const int k = *subspace_dim;
    if (s < 4) throw std::invalid_argument("configuration (2) needs s >= 4");
    if (k < 2 || k >= s) throw std::invalid_argument("subspace dimension must satisfy 2 <= dim < s");
    const Elem span = (Elem{1} << k) - 1;
    for (Elem g = 1; g < d.size(); ++g) d[g] = (g & ~span) ? 1 : 0;
    return d;
}

bool hyperplane_config_check(int s, const Weights& w, std::optional<int> subspace_dim) {
    const GroupFunction d = hyperplane_config_branch(s, subspace_dim);
    const std::int64_t avoid = subspace_dim ? (std::int64_t{1} << *subspace_dim) : 1;
    if (!(2 * w.W() < static_cast<std::int64_t>(group_order(s)) - avoid)) return false;
    std::vector<Elem> supp = d.support();
    return affine_hyperplane_min_intersection(supp, s) >= 4;
}

NewComponent gen_new_component(std::int64_t M) {
    if (M <= 2 || M % 2 != 0) throw std::invalid_argument("M must be even and > 2");
    NewComponent nc;
    nc.cover.weights = Weights(WeightTuple{1, 1, 1, M});
    nc.cover.d = GroupFunction(4);
    for (Elem g = 1; g < 16; ++g) nc.cover.d[g] = g == 1 ? 2 : M;
    nc.l = eigensheaf_degrees(nc.cover.d);
    for (Elem chi = 1; chi < 16; ++chi) {
        const std::int64_t want = dot(chi, 1) ? 1 + 7 * M / 2 : 4 * M;
        if (nc.l[chi] != want) throw std::logic_error("eigensheaf degree off its closed form");
    }
    nc.flat = is_flat(nc.cover.weights.L(), nc.l);
    nc.deformation = deformation_criteria(nc.cover);
    return nc;
}

namespace {

std::int64_t bicanonical_t(int s) {
    if (s == 3) return 6;
    if (s == 4) return 3;
    static const std::int64_t by_residue[4] = {3, 4, 2, 1};
    return by_residue[s % 4];
}

}  // namespace

UnboundedFamily gen_unbounded(int s, FamilyKind kind) {
    check_rank(s);
    UnboundedFamily f;
    f.kind = kind;
    std::int64_t num, den;
    if (kind == FamilyKind::canonical) {
        if (s < 4) throw std::invalid_argument("canonical family needs s >= 4");
        f.m = 1;
        f.t = s % 2 == 0 ? 2 : 1;
        num = (s % 2 == 0 ? std::int64_t{1} << s : std::int64_t{1} << (s - 1)) - 4;
        den = 6;
    } else {
        if (s < 3) throw std::invalid_argument("bicanonical family needs s >= 3");
        f.m = 2;
        f.t = bicanonical_t(s);
        num = f.t * (std::int64_t{1} << (s - 1)) - 4;
        den = 5;
    }
    if (num % den != 0) throw std::logic_error("family parameter L is not integral");
    f.L = num / den;
    f.cover.weights = Weights(WeightTuple{1, 1, f.L, f.L});
    f.cover.d = GroupFunction(s);
    for (Elem g = 1; g < f.cover.d.size(); g += 2) f.cover.d[g] = f.t;
    const std::int64_t want_D = kind == FamilyKind::canonical ? 6 * f.L + 4 : 5 * f.L + 4;
    if (f.cover.D() != want_D) throw std::logic_error("total branch degree off its closed form");
    auto rep = is_pluricanonical(f.cover.weights, f.cover.d, f.m);
    if (!rep) throw std::logic_error("family fails the pluricanonical criterion");
    if (rep->M != f.L || rep->k != 1) throw std::logic_error("family has M != L");
    f.l_chi0 = f.t << (s - 2);
    f.l_other = f.t << (s - 3 < 0 ? 0 : s - 3);
    if (s >= 3)
        for (Elem chi = 1; chi < rep->l.size(); ++chi)
            if (rep->l[chi] != (chi == f.chi0 ? f.l_chi0 : f.l_other))
                throw std::logic_error("eigensheaf degree off its closed form");
    f.boundary = rep->flat;
    f.report = std::move(*rep);
    return f;
}

}  // namespace z2c
