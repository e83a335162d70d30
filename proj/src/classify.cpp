#include "z2cover/classify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "z2cover/checked.hpp"

namespace z2c {

namespace {

mpz_class binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

std::optional<PluricanonicalReport> is_pluricanonical(const Weights& w, const GroupFunction& d, std::int64_t m) {
    if (m <= 0) throw std::invalid_argument("m must be positive");
    check_branch(d);
    const std::int64_t D = d.total();
    const std::int64_t twoM = sub_checked(mul_checked(m, D), mul_checked(2 * m, w.W()));
    if (twoM <= 0 || twoM % 2 != 0) return std::nullopt;
    const std::int64_t M = twoM / 2;
    if (M % w.L() != 0) return std::nullopt;
    auto l = try_eigensheaf_degrees(d);
    if (!l) return std::nullopt;
    std::unordered_map<std::int64_t, std::int64_t> memo;
    for (std::size_t chi = 1; chi < l->size(); ++chi) {
        const std::int64_t n = M - (*l)[chi];
        if (n < 0) continue;
        auto it = memo.find(n);
        if (it == memo.end()) it = memo.emplace(n, monomial_count(w, n)).first;
        if (it->second != 0) return std::nullopt;
    }
    PluricanonicalReport rep;
    rep.m = m;
    rep.D = D;
    rep.M = M;
    rep.k = M / w.L();
    rep.plurigenus = monomial_count(w, M);
    rep.flat = is_flat(w.L(), *l);
    rep.l = std::move(*l);
    return rep;
}

bool solution_less(const AdmissibleSolution& a, const AdmissibleSolution& b) {
    if (a.s != b.s) return a.s < b.s;
    if (a.m != b.m) return a.m > b.m;
    if (a.weights != b.weights) return a.weights < b.weights;
    if (a.k != b.k) return a.k < b.k;
    return a.d < b.d;
}

mpq_class beta(int s) {
    mpz_class p = 1;
    p <<= (s - 1);
    return 2 - mpq_class(1, p);
}

bool bound_prune(int s, std::int64_t m, std::int64_t L, std::int64_t W, std::int64_t k) {
    if (L >= 2 && W > 2 * L + 2) return false;
    const mpq_class lhs(static_cast<long>(W), static_cast<long>(L));
    const mpq_class rhs = (k + 1) * beta(s) - mpq_class(static_cast<long>(k), static_cast<long>(m));
    if (lhs < rhs) return false;
    // (2^s - 1)(k+1) L <= 2^{s-2} D, D = 2W + 2kL/m
    mpq_class D = 2 * W + mpq_class(2 * k * L, m);
    mpz_class N = 1;
    N <<= s;
    mpq_class sum_l = D * mpq_class(N, 4);
    return mpq_class((N - 1) * (k + 1) * L) <= sum_l;
}

bool bound_window_nonempty(int s, std::int64_t m, std::int64_t k) {
    // W/L <= 2 + 2/L <= 3 for L >= 2, so the window is empty once the lower bound exceeds 3.
    const mpq_class c = (k + 1) * beta(s) - mpq_class(static_cast<long>(k), static_cast<long>(m));
    if (c > 3) return false;
    for (std::int64_t L = 2; L <= 64; ++L)
        for (std::int64_t W = 4; W <= 2 * L + 2; ++W)
            if (bound_prune(s, m, L, W, k)) return true;
    return false;
}

bool forbidden_flat(int s, std::int64_t m) {
    return (s >= 2 && m >= 4) || (s >= 3 && m >= 3) || (s >= 4 && m >= 2) || (s >= 6 && m >= 1);
}

LDistributionSearch l_distribution_search(int s, std::int64_t D, std::int64_t min_l, std::int64_t sum_d_squared) {
    if (s < 2) throw std::invalid_argument("l-distributions need s >= 2");
    check_rank(s);
    LDistributionSearch out;
    const std::int64_t N = static_cast<std::int64_t>(group_order(s)) - 1;
    const std::int64_t first = mul_checked(D, std::int64_t{1} << (s - 2));
    const std::int64_t E = sub_checked(first, mul_checked(N, min_l));
    const std::int64_t second = sub_checked(mul_checked(std::int64_t{1} << s, sum_d_squared), mul_checked(D, D));
    if (E < 0 || second < 0) return out;
    const std::int64_t vmax = D / 2;
    if (vmax < min_l) return out;

    std::vector<std::int64_t> values;
    for (std::int64_t v = vmax; v > min_l; --v) values.push_back(v);
    Counts cur;
    std::function<void(std::size_t, std::int64_t, std::int64_t, std::int64_t)> rec =
        [&](std::size_t i, std::int64_t n_left, std::int64_t e_left, std::int64_t q_left) {
            if (i == values.size()) {
                if (e_left != 0) return;
                const std::int64_t q0 = (D - 4 * min_l) * (D - 4 * min_l);
                if (q_left != n_left * q0) return;
                Counts c = cur;
                if (n_left > 0) c[min_l] = n_left;
                mpz_class cubic = mpz_class(static_cast<long>(D)) * D * D;
                for (auto [v, n] : c) {
                    mpz_class x = static_cast<long>(D - 4 * v);
                    cubic += x * x * x * static_cast<long>(n);
                }
                mpz_class den = 1;
                den <<= s;
                mpq_class moment(cubic, den);
                moment.canonicalize();
                if (moment < 0)
                    out.rejected_cubic.emplace_back(std::move(c), moment);
                else
                    out.accepted.push_back(std::move(c));
                return;
            }
            const std::int64_t v = values[i];
            const std::int64_t ex = v - min_l;
            const std::int64_t q = (D - 4 * v) * (D - 4 * v);
            for (std::int64_t n = std::min(n_left, e_left / ex); n >= 0; --n) {
                if (n * q > q_left) continue;
                if (n > 0) cur[v] = n;
                rec(i + 1, n_left - n, e_left - n * ex, q_left - n * q);
                cur.erase(v);
            }
        };
    rec(0, N, E, second);
    return out;
}

std::vector<Counts> l_distribution_candidates(int s, std::int64_t D, std::int64_t min_l, std::int64_t sum_d_squared) {
    return l_distribution_search(s, D, min_l, sum_d_squared).accepted;
}

namespace {

struct PlacementPlan {
    std::int64_t background = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> classes;  // exceptional (value, count), rarest first
};

PlacementPlan plan_placement(int s, const Counts& n_counts) {
    std::int64_t N = static_cast<std::int64_t>(group_order(s)) - 1, total = 0;
    for (auto [v, n] : n_counts) {
        if (n < 0) throw std::invalid_argument("negative multiplicity");
        total += n;
    }
    if (total != N) throw std::invalid_argument("multiplicities must add up to 2^s - 1");
    PlacementPlan plan;
    std::int64_t best = -1;
    for (auto [v, n] : n_counts)
        if (n > best) {
            best = n;
            plan.background = v;
        }
    for (auto [v, n] : n_counts)
        if (v != plan.background && n > 0) plan.classes.emplace_back(v, n);
    std::stable_sort(plan.classes.begin(), plan.classes.end(),
                     [](const auto& a, const auto& b) { return a.second < b.second; });
    return plan;
}

// Removes duplicates, then keeps one representative per orbit.
std::vector<GroupFunction> orbit_representatives(std::vector<GroupFunction> fs) {
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    std::map<OrbitKey, GroupFunction> reps;
    for (auto& f : fs) {
        OrbitKey key = orbit_key(f);
        if (reps.count(key)) continue;
        GroupFunction rep = key.exact ? GroupFunction(f.rank(), key.key) : f;
        reps.emplace(std::move(key), std::move(rep));
    }
    std::vector<GroupFunction> out;
    for (auto& [k, f] : reps) out.push_back(std::move(f));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

mpz_class placement_count(int s, const Counts& n_counts) {
    PlacementPlan plan = plan_placement(s, n_counts);
    std::int64_t free = static_cast<std::int64_t>(group_order(s)) - 1;
    mpz_class count = 1;
    bool first = true;
    for (auto [v, n] : plan.classes) {
        if (first) {
            count *= binom(free - 1, n - 1);
            first = false;
        } else {
            count *= binom(free, n);
        }
        free -= n;
    }
    return count;
}

std::vector<GroupFunction> reconstruct_branch(int s, std::int64_t D, const Counts& n_counts) {
    check_rank(s);
    PlacementPlan plan = plan_placement(s, n_counts);
    const std::size_t n = group_order(s);
    std::vector<std::int64_t> lval(n, plan.background);
    lval[0] = 0;
    std::vector<char> taken(n, 0);
    taken[0] = 1;
    std::vector<GroupFunction> found;
    Spectrum S{s, std::vector<std::int64_t>(n)};

    auto leaf = [&]() {
        S.v[0] = D;
        for (std::size_t chi = 1; chi < n; ++chi) S.v[chi] = D - 4 * lval[chi];
        auto d = try_inverse(S);
        if (!d) return;
        for (auto x : d->values())
            if (x < 0) return;
        if ((*d)[0] != 0) return;
        found.push_back(std::move(*d));
    };

    // place class ci, choosing positions >= start
    std::function<void(std::size_t, std::int64_t, Elem)> place = [&](std::size_t ci, std::int64_t left, Elem start) {
        if (ci == plan.classes.size()) {
            leaf();
            return;
        }
        if (left == 0) {
            place(ci + 1, ci + 1 < plan.classes.size() ? plan.classes[ci + 1].second : 0, 1);
            return;
        }
        const std::int64_t v = plan.classes[ci].first;
        for (Elem chi = start; chi < n; ++chi) {
            if (taken[chi]) continue;
            taken[chi] = 1;
            lval[chi] = v;
            place(ci, left - 1, chi + 1);
            lval[chi] = plan.background;
            taken[chi] = 0;
            if (ci == 0 && left == plan.classes[0].second) break;  // rarest class contains character 1
        }
    };

    if (plan.classes.empty())
        leaf();
    else
        place(0, plan.classes[0].second, 1);
    return orbit_representatives(std::move(found));
}

std::vector<GroupFunction> search_branch_direct(int s, std::int64_t D, std::int64_t min_l) {
    check_rank(s);
    const std::size_t n = group_order(s);
    std::vector<Elem> others;
    for (Elem g = 1; g < n; ++g)
        if (std::popcount(g) != 1) others.push_back(g);
    GroupFunction d(s);
    std::vector<GroupFunction> found;
    std::vector<std::int64_t> work(n);

    auto check = [&]() {
        for (std::size_t g = 0; g < n; ++g) work[g] = d[static_cast<Elem>(g)];
        fwht_inplace(work);
        for (std::size_t chi = 1; chi < n; ++chi) {
            const std::int64_t two_l = (D - work[chi]) / 2;
            if (two_l & 1 || two_l < 2 * min_l) return;
        }
        found.push_back(d);
    };

    std::function<void(std::size_t, std::int64_t)> spread = [&](std::size_t i, std::int64_t left) {
        if (left == 0) {
            check();
            return;
        }
        if (i == others.size()) return;
        for (std::int64_t x = left; x >= 0; --x) {
            d[others[i]] = x;
            spread(i + 1, left - x);
        }
        d[others[i]] = 0;
    };

    // nonincreasing values >= 1 on the standard basis
    std::function<void(int, std::int64_t, std::int64_t)> basis = [&](int i, std::int64_t left, std::int64_t cap) {
        if (i == s) {
            spread(0, left);
            return;
        }
        const std::int64_t need = s - i - 1;  // at least 1 for each later basis vector
        for (std::int64_t x = std::min(cap, left - need); x >= 1; --x) {
            d[Elem{1} << i] = x;
            basis(i + 1, left - x, x);
        }
        d[Elem{1} << i] = 0;
    };
    if (D >= s) basis(0, D, D);
    return orbit_representatives(std::move(found));
}

std::int64_t support_bound(std::int64_t C, std::int64_t p) {
    if (p < 1 || C < p) throw std::invalid_argument("support bound needs C >= p >= 1");
    return C - p + 1;
}

Counts value_profile(const GroupFunction& d) {
    Counts c;
    for (Elem g = 1; g < d.size(); ++g)
        if (d[g] != 0) ++c[d[g]];
    return c;
}

namespace {

std::vector<WeightTuple> weights_with_lcm(std::int64_t L) {
    std::vector<std::int64_t> divs;
    for (std::int64_t x = 1; x <= L; ++x)
        if (L % x == 0) divs.push_back(x);
    std::vector<WeightTuple> out;
    for (std::size_t i = 0; i < divs.size(); ++i)
        for (std::size_t j = i; j < divs.size(); ++j)
            for (std::size_t k = j; k < divs.size(); ++k)
                for (std::size_t l = k; l < divs.size(); ++l) {
                    WeightTuple a{divs[i], divs[j], divs[k], divs[l]};
                    std::int64_t lcm = 1;
                    for (auto x : a) lcm = std::lcm(lcm, x);
                    if (lcm == L && well_formed(a)) out.push_back(a);
                }
    return out;
}

// All nonnegative integer vectors of length N with sum E.
void for_each_composition(std::int64_t N, std::int64_t E, const std::function<void(const std::vector<std::int64_t>&)>& f) {
    std::vector<std::int64_t> e(N, 0);
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t i, std::int64_t left) {
        if (i == N - 1) {
            e[i] = left;
            f(e);
            e[i] = 0;
            return;
        }
        for (std::int64_t x = left; x >= 0; --x) {
            e[i] = x;
            rec(i + 1, left - x);
        }
        e[i] = 0;
    };
    rec(0, E);
}

}  // namespace

std::vector<AdmissibleSolution> enumerate_flat(int s, std::int64_t m, BoundsReport* report) {
    if (s < 2 || s > 6) throw std::invalid_argument("enumerate_flat covers 2 <= s <= 6 (s = 1 is enumerate_s1)");
    if (m < 1) throw std::invalid_argument("m must be positive");
    auto note = [&](const std::string& line) {
        if (report) report->add(line);
    };
    const std::int64_t N = static_cast<std::int64_t>(group_order(s)) - 1;
    const mpq_class b = beta(s);
    std::ostringstream head;
    head << "flat s=" << s << " m=" << m << ": bounds W <= 2L+2 (L >= 2), W/L >= (k+1)(2-2^{1-s}) - k/m, "
         << "l >= (k+1)L with L | l, sum l = 2^{s-2} D, D = 2W + 2kL/m";
    note(head.str());

    std::map<std::pair<WeightTuple, OrbitKey>, AdmissibleSolution> found;
    for (std::int64_t k = 1;; ++k) {
        const mpq_class c = (k + 1) * b - mpq_class(static_cast<long>(k), static_cast<long>(m));
        if (c > 3) {
            std::ostringstream os;
            os << "  k=" << k << ": lower bound W/L >= " << c.get_str() << " > 3 >= 2 + 2/L; stop";
            note(os.str());
            break;
        }
        std::int64_t Lmax;
        if (c > 2) {
            mpq_class q = 2 / (c - 2);
            Lmax = mpz_class(q.get_num() / q.get_den()).get_si();
        } else {
            // c <= 2 only for (s, m, k) = (2, 1, 1): W in [2L, 2L+2] with L | 2W forces L <= 6
            if (!(s == 2 && m == 1 && k == 1)) throw std::logic_error("unexpected bound regime");
            Lmax = 6;
        }
        {
            std::ostringstream os;
            os << "  k=" << k << ": W/L >= " << c.get_str() << ", so 2 <= L <= " << Lmax;
            note(os.str());
        }
        for (std::int64_t L = 2; L <= Lmax; ++L) {
            std::map<std::int64_t, std::vector<WeightTuple>> by_W;
            for (const auto& a : weights_with_lcm(L)) by_W[a[0] + a[1] + a[2] + a[3]].push_back(a);
            for (const auto& [W, tuples] : by_W) {
                std::ostringstream cell;
                cell << "    (k,L,W)=(" << k << "," << L << "," << W << ")";
                if (!bound_prune(s, m, L, W, k)) {
                    note(cell.str() + ": pruned by bounds");
                    continue;
                }
                if ((2 * k * L) % m != 0) {
                    note(cell.str() + ": D not integral");
                    continue;
                }
                const std::int64_t D = 2 * W + 2 * k * L / m;
                cell << " D=" << D;
                const std::int64_t sum_l = D << (s - 2);
                if (sum_l % L != 0) {
                    note(cell.str() + ": L does not divide 2^{s-2} D");
                    continue;
                }
                const std::int64_t E = sum_l / L - N * (k + 1);
                if (E < 0) {
                    note(cell.str() + ": sum of l below (2^s-1)(k+1)L");
                    continue;
                }
                std::vector<GroupFunction> ds;
                std::int64_t visited = 0;
                const std::size_t n = group_order(s);
                Spectrum S{s, std::vector<std::int64_t>(n)};
                for_each_composition(N, E, [&](const std::vector<std::int64_t>& e) {
                    ++visited;
                    S.v[0] = D;
                    for (std::size_t chi = 1; chi < n; ++chi) S.v[chi] = D - 4 * L * (k + 1 + e[chi - 1]);
                    auto d = try_inverse(S);
                    if (!d) return;
                    for (auto x : d->values())
                        if (x < 0) return;
                    ds.push_back(std::move(*d));
                });
                ds = orbit_representatives(std::move(ds));
                std::size_t kept = 0;
                for (const auto& a : tuples) {
                    Weights w(a);
                    for (const auto& d : ds) {
                        auto rep = is_pluricanonical(w, d, m);
                        if (!rep || !rep->flat || rep->k != k) continue;
                        if (s == 2 && D % L != 0) throw std::logic_error("flat s=2 solution with L not dividing D");
                        AdmissibleSolution sol;
                        sol.weights = w;
                        sol.s = s;
                        sol.m = m;
                        sol.k = k;
                        sol.d = d;
                        sol.l = rep->l;
                        sol.plurigenus = rep->plurigenus;
                        sol.flat = true;
                        sol.signature_level = s > kMaxExactOrbitRank;
                        auto key = std::make_pair(a, orbit_key(d));
                        if (found.emplace(key, sol).second) ++kept;
                    }
                }
                std::ostringstream os;
                os << cell.str() << ": " << visited << " l-assignments, " << ds.size() << " branch orbits, " << kept
                   << " solutions";
                note(os.str());
            }
        }
    }
    std::vector<AdmissibleSolution> out;
    for (auto& [key, sol] : found) out.push_back(std::move(sol));
    std::sort(out.begin(), out.end(), solution_less);
    return out;
}

std::vector<std::array<std::int64_t, 4>> egyptian_quadruples(std::int64_t p, std::int64_t q) {
    if (p <= 0 || q <= 0) throw std::invalid_argument("target must be positive");
    std::vector<std::array<std::int64_t, 4>> out;
    std::array<std::int64_t, 4> b{};
    std::function<void(int, mpq_class, std::int64_t)> rec = [&](int i, mpq_class rest, std::int64_t lo) {
        if (i == 3) {
            // last term is forced
            if (rest <= 0 || rest.get_num() != 1) return;
            const std::int64_t x = mpz_class(rest.get_den()).get_si();
            if (x < lo) return;
            b[3] = x;
            std::int64_t g = 0;
            for (auto y : b) g = std::gcd(g, y);
            if (g == 1) out.push_back(b);
            return;
        }
        // 1/x <= rest  and  (4 - i)/x >= rest
        mpq_class inv = 1 / rest;
        mpz_class start = inv.get_num() / inv.get_den();
        if (start * inv.get_den() != inv.get_num()) start += 1;  // ceil(1/rest)
        std::int64_t from = std::max<std::int64_t>(lo, start.get_si());
        mpq_class top = (4 - i) / rest;
        const std::int64_t to = mpz_class(top.get_num() / top.get_den()).get_si();
        for (std::int64_t x = from; x <= to; ++x) {
            b[i] = x;
            mpq_class next = rest - mpq_class(1, x);
            if (next <= 0) continue;
            rec(i + 1, next, x);
        }
    };
    mpq_class target(p, q);
    target.canonicalize();
    rec(0, target, 1);
    return out;
}

std::vector<S1Family> enumerate_s1(std::int64_t m, std::int64_t t_max, bool keep_all) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    std::vector<S1Family> out;
    // W/L = j/m; each b-tuple with sum 1/b = W/L gives weights L/b_i with L = lcm(b).
    for (std::int64_t j = 1; j <= 4 * m; ++j) {
        if (m == 1 && j > 4) break;
        std::vector<std::int64_t> ts;
        if (m == 1) {
            for (std::int64_t t = j + 1; t <= t_max; ++t) ts.push_back(t);
        } else {
            // j/m < t < j/(m-1)
            for (std::int64_t t = j / m + 1; t * (m - 1) < j; ++t) ts.push_back(t);
        }
        if (m >= 2 && ts.empty()) continue;
        for (const auto& b : egyptian_quadruples(j, m)) {
            std::int64_t L = 1;
            for (auto x : b) L = std::lcm(L, x);
            WeightTuple a{L / b[0], L / b[1], L / b[2], L / b[3]};
            if (!well_formed(a)) continue;
            S1Family f;
            f.weights = Weights(a);
            f.m = m;
            f.L = f.weights.L();
            f.W = f.weights.W();
            f.t_values = ts;
            f.meets_stated_divisibility = m == 1 || (2 * f.W) % (m - 1) == 0;
            if (!f.meets_stated_divisibility && !keep_all) continue;
            out.push_back(std::move(f));
        }
    }
    std::sort(out.begin(), out.end(), [](const S1Family& x, const S1Family& y) { return x.weights < y.weights; });
    return out;
}

}  // namespace z2c
