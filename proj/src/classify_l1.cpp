#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "z2cover/classify.hpp"

namespace z2c {

const std::vector<L1Case>& l1_cases() {
    static const std::vector<L1Case> cases = {
        {1, 1, 2, 0, 1, 10}, {2, 1, 2, 0, 2, 12}, {3, 1, 2, 2, 3, 14}, {4, 1, 3, 3, 3, 14}, {5, 1, 2, 2, 4, 16},
        {6, 1, 2, 2, 5, 18}, {7, 2, 2, 0, 1, 9},  {8, 2, 2, 2, 2, 10}, {9, 4, 2, 2, 2, 9},
    };
    return cases;
}

std::optional<L1Case> l1_case_for(int s, std::int64_t m, std::int64_t k) {
    for (const auto& c : l1_cases())
        if (c.m == m && c.k == k && s >= c.s_min && (c.s_max == 0 || s <= c.s_max)) return c;
    return std::nullopt;
}

std::int64_t l1_k_limit(int s, std::int64_t m) {
    if (s < 2) throw std::invalid_argument("needs s >= 2");
    // 2^{s-2} (8 + 2k/m) >= (2^s - 1)(k + 1), times m
    const std::int64_t h = std::int64_t{1} << (s - 2), N = (std::int64_t{1} << s) - 1;
    std::int64_t k = 0;
    while (h * (8 * m + 2 * (k + 1)) >= N * (k + 2) * m) ++k;
    return k;
}

namespace {

constexpr long kPlacementLimit = 2'000'000;

// Partitions of D into at least s and at most n parts whose s-1 largest parts sum to <= cap.
std::vector<std::vector<std::int64_t>> branch_profiles(int s, std::int64_t D, std::int64_t n, std::int64_t cap) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> parts;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t left, std::int64_t maxp) {
        if (static_cast<std::int64_t>(parts.size()) > n) return;
        if (left == 0) {
            if (static_cast<std::int64_t>(parts.size()) < s) return;
            std::int64_t top = 0;
            for (int i = 0; i < s - 1; ++i) top += parts[i];
            if (top <= cap) out.push_back(parts);
            return;
        }
        for (std::int64_t p = std::min(left, maxp); p >= 1; --p) {
            parts.push_back(p);
            rec(left - p, p);
            parts.pop_back();
        }
    };
    rec(D, D);
    return out;
}

Counts profile_counts(const std::vector<std::int64_t>& parts) {
    Counts c;
    for (auto p : parts) ++c[p];
    return c;
}

Counts l_counts(const GroupFunction& d) {
    auto l = *try_eigensheaf_degrees(d);
    Counts c;
    for (std::size_t chi = 1; chi < l.size(); ++chi) ++c[l[chi]];
    return c;
}

std::string show(const Counts& c) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto [v, n] : c) {
        os << (first ? "" : ",") << v << ":" << n;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace

std::vector<AdmissibleSolution> enumerate_L1_cell(int s, std::int64_t m, std::int64_t k, BoundsReport* report) {
    if (s < 2) throw std::invalid_argument("enumerate_L1 covers s >= 2 (s = 1 is enumerate_s1)");
    check_rank(s);
    if (m < 1 || k < 1) throw std::invalid_argument("m and k must be positive");
    auto note = [&](const std::string& line) {
        if (report) report->add(line);
    };
    std::ostringstream head;
    head << "P(1,1,1,1) s=" << s << " m=" << m << " k=" << k;
    std::vector<AdmissibleSolution> out;
    if ((2 * k) % m != 0) {
        note(head.str() + ": D = 8 + 2k/m not integral");
        return out;
    }
    const std::int64_t D = 8 + 2 * k / m, min_l = k + 1;
    const std::int64_t N = static_cast<std::int64_t>(group_order(s)) - 1;
    head << " D=" << D << " l>=" << min_l;
    if (D * (std::int64_t{1} << (s - 2)) < N * min_l) {
        note(head.str() + ": first moment 2^{s-2} D < (2^s-1)(k+1)");
        return out;
    }
    if (2 * min_l > D || s > support_bound(D, 2 * min_l)) {
        note(head.str() + ": s exceeds the support bound D - 2(k+1) + 1");
        return out;
    }

    const auto profiles = branch_profiles(s, D, N, D - 2 * min_l);
    std::set<Counts> allowed;
    std::map<std::int64_t, LDistributionSearch> by_square;
    std::set<Counts> candidates;
    for (const auto& parts : profiles) {
        allowed.insert(profile_counts(parts));
        std::int64_t sq = 0;
        for (auto p : parts) sq += p * p;
        auto it = by_square.find(sq);
        if (it == by_square.end()) it = by_square.emplace(sq, l_distribution_search(s, D, min_l, sq)).first;
        for (const auto& c : it->second.accepted) candidates.insert(c);
    }
    {
        std::ostringstream os;
        os << head.str() << ": " << profiles.size() << " branch profiles, " << candidates.size()
           << " l-distributions pass the moment tests";
        note(os.str());
        for (const auto& [sq, res] : by_square)
            for (const auto& [c, cubic] : res.rejected_cubic)
                note("    sum d^2=" + std::to_string(sq) + " l-distribution " + show(c) + " rejected: cubic moment " +
                     cubic.get_str());
    }

    std::optional<std::vector<GroupFunction>> direct;
    std::vector<GroupFunction> ds;
    for (const auto& c : candidates) {
        const mpz_class count = placement_count(s, c);
        std::vector<GroupFunction> found;
        std::string how;
        if (count <= kPlacementLimit) {
            found = reconstruct_branch(s, D, c);
            how = "spectral, " + count.get_str() + " placements";
        } else {
            if (!direct) direct = search_branch_direct(s, D, min_l);
            for (const auto& d : *direct)
                if (l_counts(d) == c) found.push_back(d);
            how = "direct search";
        }
        note("    l-distribution " + show(c) + ": " + std::to_string(found.size()) + " orbits (" + how + ")");
        ds.insert(ds.end(), found.begin(), found.end());
    }

    const Weights P3;
    std::set<OrbitKey> seen;
    for (const auto& d : ds) {
        if (!allowed.count(value_profile(d))) throw std::logic_error("reconstructed branch data outside the profile list");
        auto rep = is_pluricanonical(P3, d, m);
        if (!rep || rep->k != k) continue;
        if (!seen.insert(orbit_key(d)).second) continue;
        AdmissibleSolution sol;
        sol.weights = P3;
        sol.s = s;
        sol.m = m;
        sol.k = k;
        sol.d = d;
        sol.l = rep->l;
        sol.plurigenus = rep->plurigenus;
        sol.flat = rep->flat;
        sol.signature_level = s > kMaxExactOrbitRank;
        out.push_back(std::move(sol));
    }
    std::sort(out.begin(), out.end(), solution_less);
    return out;
}

std::vector<AdmissibleSolution> enumerate_L1(int s, std::int64_t m, BoundsReport* report) {
    std::vector<AdmissibleSolution> out;
    for (const auto& c : l1_cases()) {
        if (c.m != m || s < c.s_min || (c.s_max != 0 && s > c.s_max)) continue;
        auto cell = enumerate_L1_cell(s, m, c.k, report);
        for (auto& sol : cell) {
            if (c.index == 1) sol.note = "no published table to compare";
            if (c.index == 7 && s == 4 && value_profile(sol.d) == Counts{{1, 9}})
                sol.note = "extra orbit, absent from the family list";
            out.push_back(std::move(sol));
        }
    }
    std::sort(out.begin(), out.end(), solution_less);
    return out;
}

}  // namespace z2c
