#include "z2cover/invariants.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "z2cover/checked.hpp"

namespace z2c {

namespace {

mpz_class pow2(long e) {
    mpz_class r = 1;
    r <<= e;
    return r;
}

// 2^e as a rational, e may be negative.
mpq_class pow2q(long e) {
    if (e >= 0) return mpq_class(pow2(e));
    return mpq_class(mpz_class(1), pow2(-e));
}

mpz_class Z(std::int64_t x) { return mpz_class(static_cast<long>(x)); }

}  // namespace

mpq_class volume(const CoverSpec& c) {
    mpq_class h = hurwitz_degree(c);
    mpq_class v = mpq_class(pow2(c.s()), Z(c.weights.A())) * h * h * h;
    v.canonicalize();
    return v;
}

std::int64_t holomorphic_euler(const CoverSpec& c) {
    const auto l = eigensheaf_degrees(c.d);
    std::map<std::int64_t, std::int64_t> counts;
    for (auto x : l) ++counts[x];
    std::int64_t chi = 0;
    for (auto [value, n] : counts) chi = add_checked(chi, mul_checked(n, euler_char_line(c.weights, -value)));
    return chi;
}

const char* to_string(Exactness e) { return e == Exactness::exact ? "exact" : "orbifold-only"; }

EulerValue topological_euler(const CoverSpec& c) {
    const GroupFunction& d = c.d;
    const int s = c.s();
    const mpz_class W = Z(c.weights.W()), A = Z(c.weights.A()), sigma2 = Z(c.weights.sigma2());
    const auto supp = d.support();

    mpz_class p1 = 0, p2 = 0, p3 = 0;
    mpz_class surf = 0;  // sum_p d_p (d_p^2 - d_p W + sigma2)
    for (Elem g : supp) {
        const mpz_class x = Z(d[g]);
        p1 += x;
        p2 += x * x;
        p3 += x * x * x;
        surf += x * (x * x - x * W + sigma2);
    }
    const mpz_class e2 = (p1 * p1 - p2) / 2;
    const mpz_class e3 = (p1 * p1 * p1 - 3 * p1 * p2 + 2 * p3) / 6;
    // sum_{p<q} d_p d_q (W - d_p - d_q)
    const mpz_class curves = W * e2 - (p1 * p2 - p3);
    // unordered zero-sum triples
    mpz_class zero_sum = 0;
    for (std::size_t i = 0; i < supp.size(); ++i)
        for (std::size_t j = i + 1; j < supp.size(); ++j) {
            const Elem p = supp[i], q = supp[j], r = p ^ q;
            if (r <= q || d[r] == 0) continue;
            zero_sum += Z(d[p]) * Z(d[q]) * Z(d[r]);
        }
    const mpz_class points = e3 - zero_sum;

    mpq_class e = mpq_class(pow2(s) * 4);
    e -= pow2q(s - 1) * mpq_class(surf, A);
    e += pow2q(s - 2) * mpq_class(curves, A);
    e -= pow2q(s - 3) * mpq_class(points, A);
    e.canonicalize();
    const bool all_ones = c.weights.a() == WeightTuple{1, 1, 1, 1};
    return {e, all_ones ? Exactness::exact : Exactness::orbifold_only};
}

InvariantReport invariants(const CoverSpec& c) {
    InvariantReport rep;
    rep.K3 = volume(c);
    rep.chi = holomorphic_euler(c);
    auto e = topological_euler(c);
    rep.euler = e.value;
    rep.euler_exactness = e.exactness;
    if (rep.chi != 0) {
        mpq_class den = mpq_class(24 * static_cast<long>(rep.chi));
        rep.x = rep.euler / den;
        rep.y = -rep.K3 / den;
    }
    return rep;
}

void check_ratio_vector(const RatioVector& r) {
    check_rank(r.s);
    if (r.r.size() != group_order(r.s)) throw std::invalid_argument("ratio vector needs 2^s entries");
    if (r.r[0] != 0) throw std::invalid_argument("ratio at the identity must be 0");
    mpq_class sum = 0;
    for (const auto& x : r.r) {
        if (x < 0) throw std::invalid_argument("ratios must be nonnegative");
        sum += x;
    }
    if (sum != 1) throw std::invalid_argument("ratios must sum to 1");
}

RatioVector vertex_vector(int s, Elem g) {
    check_rank(s);
    if (g == 0 || g >= group_order(s)) throw std::invalid_argument("vertex must be a nonzero element");
    RatioVector r{s, std::vector<mpq_class>(group_order(s), 0)};
    r.r[g] = 1;
    return r;
}

RatioVector barycenter_vector(int s) {
    check_rank(s);
    const std::size_t n = group_order(s);
    RatioVector r{s, std::vector<mpq_class>(n, mpq_class(1, static_cast<unsigned long>(n - 1)))};
    r.r[0] = 0;
    return r;
}

RatioVector normalized(int s, const std::vector<std::int64_t>& weights) {
    check_rank(s);
    if (weights.size() != group_order(s)) throw std::invalid_argument("need 2^s weights");
    mpz_class total = 0;
    for (std::size_t g = 1; g < weights.size(); ++g) {
        if (weights[g] < 0) throw std::invalid_argument("weights must be nonnegative");
        total += Z(weights[g]);
    }
    if (total == 0) throw std::invalid_argument("weights must not all vanish");
    RatioVector r{s, std::vector<mpq_class>(weights.size(), 0)};
    for (std::size_t g = 1; g < weights.size(); ++g) {
        r.r[g] = mpq_class(Z(weights[g]), total);
        r.r[g].canonicalize();
    }
    return r;
}

RatioVector random_ratio_vector(int s, std::mt19937_64& rng, std::int64_t max_weight) {
    const std::size_t n = group_order(s);
    std::vector<std::int64_t> w(n, 0);
    std::uniform_int_distribution<std::int64_t> val(0, max_weight);
    std::uniform_int_distribution<int> sparsity(0, 3);
    // mix dense points with ones concentrated on few elements
    const int mode = sparsity(rng);
    std::uniform_int_distribution<std::size_t> pick(1, n - 1);
    do {
        std::fill(w.begin(), w.end(), 0);
        if (mode == 0) {
            const std::size_t k = 1 + pick(rng) % 3;
            for (std::size_t i = 0; i < k; ++i) w[pick(rng)] = 1 + val(rng);
        } else {
            for (std::size_t g = 1; g < n; ++g) w[g] = val(rng);
        }
    } while (std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x == 0; }));
    return normalized(s, w);
}

GeographyPoint geography_point(const RatioVector& rv) {
    check_ratio_vector(rv);
    const int s = rv.s;
    const std::size_t n = group_order(s);

    // Clear denominators: r_g = u_g / N.
    mpz_class N = 1;
    for (const auto& x : rv.r) mpz_lcm(N.get_mpz_t(), N.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> u(n);
    std::vector<Elem> supp;
    for (std::size_t g = 0; g < n; ++g) {
        u[g] = rv.r[g].get_num() * (N / rv.r[g].get_den());
        if (u[g] != 0) supp.push_back(static_cast<Elem>(g));
    }

    mpz_class sa = 0, sb = 0, sT = 0;
    for (Elem g : supp) {
        sa += u[g] * u[g] * u[g];
        sb += u[g] * u[g];
    }
    for (Elem p : supp)
        for (Elem q : supp)
            if (p != q && u[p ^ q] != 0) sT += u[p] * u[q] * u[p ^ q];

    // A_chi = sum_{chi.g=1} u_g = (N - uhat(chi)) / 2
    std::vector<mpz_class> h = u;
    for (std::size_t len = 1; len < n; len <<= 1)
        for (std::size_t i = 0; i < n; i += 2 * len)
            for (std::size_t j = i; j < i + len; ++j) {
                mpz_class x = h[j], y = h[j + len];
                h[j] = x + y;
                h[j + len] = x - y;
            }
    mpz_class sQ = 0;
    for (std::size_t chi = 1; chi < n; ++chi) {
        mpz_class A = (N - h[chi]) / 2;
        sQ += A * A * A;
    }

    const mpz_class N2 = N * N, N3 = N2 * N;
    GeographyPoint P;
    P.a = mpq_class(sa, N3);
    P.b = mpq_class(sb, N2);
    P.T = mpq_class(sT, N3);
    P.Q = mpq_class(sQ, N3);
    P.a.canonicalize();
    P.b.canonicalize();
    P.T.canonicalize();
    P.Q.canonicalize();
    P.S_idp = 1 - 3 * P.b + 2 * P.a - P.T;
    P.Phi = pow2q(3 - s) * P.Q;
    if (P.Phi != 3 * P.b - P.T + 1) throw std::logic_error("cubic identity Phi = 3b - T + 1 failed");
    P.x = (14 * P.a + 6 * P.b + P.Phi) / (3 * P.Phi);
    P.y = 2 / P.Phi;
    P.SCI = P.y * (3 * P.x + 1) - 4;
    return P;
}

mpq_class barycenter_y(int s) { return 2 - pow2q(2 - s) + pow2q(1 - 2 * s); }

mpq_class q_lower_bound(int s) {
    mpz_class m = pow2(s) - 1;
    mpq_class q(pow2(3 * s - 3), m * m);
    q.canonicalize();
    return q;
}

mpq_class q_upper_bound(int s) { return mpq_class(pow2(s - 1)); }

mpq_class x_lower_bound_statement(int s) {
    mpz_class m = pow2(s) - 1;
    mpq_class x(3 * pow2(2 * s - 2) + pow2(s + 1) - 1, 3 * m * m);
    x.canonicalize();
    return x;
}

mpq_class x_lower_bound_proof(int s) {
    mpz_class m = pow2(s) + 1;
    mpq_class x(3 * pow2(2 * s - 2) - pow2(s + 1) - 1, 3 * m * m);
    x.canonicalize();
    return x;
}

HuntPoint hunt_scan(int s, const mpq_class& t) {
    if (s < 3) throw std::invalid_argument("hunt scan needs s >= 3");
    check_rank(s);
    if (t < 0 || t > 1) throw std::invalid_argument("t must lie in [0, 1]");
    const std::size_t n = group_order(s);
    HuntPoint H;
    H.r = RatioVector{s, std::vector<mpq_class>(n, 0)};
    const mpq_class rest = (1 - t) / mpq_class(pow2(s - 1) - 1);
    for (std::size_t g = 1; g < n; ++g)
        if (g & 1) H.r.r[g] = g == 1 ? t : rest;
    H.point = geography_point(H.r);
    H.F = 7 * H.point.a - 9 * H.point.b * H.point.b;
    return H;
}

}  // namespace z2c
