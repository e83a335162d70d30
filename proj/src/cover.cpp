#include "z2cover/cover.hpp"

#include <stdexcept>

#include "z2cover/checked.hpp"

namespace z2c {

void check_branch(const GroupFunction& d) {
    if (d.size() == 0) throw std::invalid_argument("empty branch data");
    if (d[0] != 0) throw std::invalid_argument("branch degree at the identity must be 0");
    for (Elem g = 1; g < d.size(); ++g)
        if (d[g] < 0) throw std::invalid_argument("negative branch degree at " + format_bits(g, d.rank()));
    if (d.total() <= 0) throw std::invalid_argument("total branch degree must be positive");
}

namespace {

// Returns 2*l via the transform: sum_{chi.g=1} d(g) = (D - dhat(chi)) / 2.
std::vector<std::int64_t> half_sums(const GroupFunction& d) {
    std::vector<std::int64_t> a = d.values();
    fwht_inplace(a);
    const std::int64_t D = a[0];
    for (auto& x : a) x = sub_checked(D, x) / 2;  // D - dhat is always even
    return a;
}

}  // namespace

std::optional<std::vector<std::int64_t>> try_eigensheaf_degrees(const GroupFunction& d) {
    auto a = half_sums(d);
    for (auto& x : a) {
        if (x & 1) return std::nullopt;
        x /= 2;
    }
    return a;
}

std::vector<std::int64_t> eigensheaf_degrees(const GroupFunction& d) {
    auto a = half_sums(d);
    for (Elem chi = 0; chi < a.size(); ++chi) {
        if (a[chi] & 1)
            throw NonIntegral("half-sum is odd for character " + format_bits(chi, d.rank()), chi);
        a[chi] /= 2;
    }
    return a;
}

bool is_flat(std::int64_t L, const std::vector<std::int64_t>& l) {
    for (std::size_t chi = 1; chi < l.size(); ++chi)
        if (l[chi] % L != 0) return false;
    return true;
}

bool is_flat(const CoverSpec& c) { return is_flat(c.weights.L(), eigensheaf_degrees(c.d)); }

mpq_class hurwitz_degree(const CoverSpec& c) {
    mpq_class h(static_cast<long>(c.D()), 2);
    h.canonicalize();
    return h - static_cast<long>(c.weights.W());
}

std::int64_t half_point_count(const CoverSpec& c) {
    const GroupFunction& d = c.d;
    const auto supp = d.support();
    mpz_class sum = 0;
    for (std::size_t i = 0; i < supp.size(); ++i)
        for (std::size_t j = i + 1; j < supp.size(); ++j) {
            const Elem p = supp[i], q = supp[j], r = p ^ q;
            if (r <= q || d[r] == 0) continue;
            sum += mpz_class(static_cast<long>(d[p])) * static_cast<long>(d[q]) * static_cast<long>(d[r]);
        }
    const mpz_class A = static_cast<long>(c.weights.A());
    if (sum % A != 0) throw NonIntegral("triple-intersection count is fractional", 0);
    mpz_class q = sum / A;
    if (!q.fits_slong_p()) throw std::overflow_error("half-point count overflow");
    return q.get_si();
}

ValidationReport validate(const CoverSpec& c, bool input_sorted) {
    ValidationReport rep;
    rep.weights_were_sorted = input_sorted;
    rep.weights_well_formed = c.weights.well_formed();
    try {
        check_branch(c.d);
    } catch (const std::invalid_argument& e) {
        rep.branch_ok = false;
        rep.branch_error = e.what();
    }
    rep.parity = parity_vector(c.d);
    rep.parity_ok = rep.parity == 0;
    if (rep.parity_ok) rep.flat = is_flat(c);
    rep.hurwitz = hurwitz_degree(c);
    rep.hurwitz_sign = sgn(rep.hurwitz);
    try {
        rep.half_points = half_point_count(c);
    } catch (const NonIntegral& e) {
        rep.half_points_error = e.what();
    }
    return rep;
}

}  // namespace z2c
