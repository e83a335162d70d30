// z2cover: command-line front end.
// Exit codes: 0 success, 1 validation failure, 2 malformed input.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "z2cover/classify.hpp"
#include "z2cover/invariants.hpp"
#include "z2cover/io.hpp"
#include "z2cover/moduli.hpp"

using namespace z2c;

namespace {

constexpr int kOk = 0, kInvalid = 1, kMalformed = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

mpq_class parse_rational(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw InputError("not a rational number: " + text);
    if (q.get_den() == 0) throw InputError("zero denominator: " + text);
    q.canonicalize();
    return q;
}

unsigned default_threads() {
    if (const char* env = std::getenv("Z2COVER_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return static_cast<unsigned>(n);
    }
    return 1;
}

// Runs jobs on up to n threads; results keep job order.
template <class R>
std::vector<R> run_pool(const std::vector<std::function<R()>>& jobs, unsigned n) {
    std::vector<R> out(jobs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < jobs.size();) {
            try {
                out[i] = jobs[i]();
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1u, n); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    return out;
}

json point_json(const GeographyPoint& p) {
    return {{"a", rational_str(p.a)},   {"b", rational_str(p.b)},     {"T", rational_str(p.T)},
            {"Q", rational_str(p.Q)},   {"Phi", rational_str(p.Phi)}, {"x", rational_str(p.x)},
            {"y", rational_str(p.y)},   {"SCI", rational_str(p.SCI)}, {"S_idp", rational_str(p.S_idp)}};
}

json validation_json(const ValidationReport& r, const CoverSpec& c) {
    json j;
    j["ok"] = r.ok();
    j["branch_ok"] = r.branch_ok;
    if (!r.branch_ok) j["branch_error"] = r.branch_error;
    j["weights"] = c.weights.a();
    j["weights_normalized"] = !r.weights_were_sorted;
    j["weights_well_formed"] = r.weights_well_formed;
    j["parity_ok"] = r.parity_ok;
    j["parity"] = format_bits(r.parity, c.s());
    if (r.flat) j["flat"] = *r.flat;
    j["hurwitz"] = rational_str(r.hurwitz);
    j["hurwitz_sign"] = r.hurwitz_sign;
    if (r.half_points)
        j["half_points"] = *r.half_points;
    else
        j["half_points_error"] = r.half_points_error;
    j["genericity_assumed"] = r.genericity_assumed;
    return j;
}

int cmd_cover_check(const std::string& path) {
    auto p = parse_coverspec_text(read_file(path));
    auto rep = validate(p.cover, p.input_sorted);
    std::cout << validation_json(rep, p.cover).dump(2) << "\n";
    return rep.ok() ? kOk : kInvalid;
}

int cmd_cover_invariants(const std::string& path) {
    auto p = parse_coverspec_text(read_file(path));
    auto val = validate(p.cover, p.input_sorted);
    if (!val.ok()) {
        std::cout << validation_json(val, p.cover).dump(2) << "\n";
        return kInvalid;
    }
    auto rep = invariants(p.cover);
    json j;
    j["K3"] = rational_str(rep.K3);
    j["chi"] = rep.chi;
    j["euler"] = rational_str(rep.euler);
    j["exact"] = rep.euler_exactness == Exactness::exact;
    j["euler_exactness"] = to_string(rep.euler_exactness);
    if (rep.x) j["x"] = rational_str(*rep.x);
    if (rep.y) j["y"] = rational_str(*rep.y);
    j["hurwitz"] = rational_str(val.hurwitz);
    if (val.half_points) j["half_points"] = *val.half_points;
    j["flat"] = val.flat.value_or(false);
    j["genericity_assumed"] = true;
    std::cout << j.dump(2) << "\n";
    return kOk;
}

std::string decimal(const mpq_class& q) {
    std::ostringstream os;
    os.precision(12);
    os << q.get_d();
    return os.str();
}

// CSV: s, r (entries for g = 1..2^s-1 joined by " / "), then x, y, SCI exact and decimal.
int cmd_geography_sample(int s, long n, std::uint64_t seed, std::int64_t max_weight) {
    check_rank(s);
    std::mt19937_64 rng(seed);
    std::cout << "s,r,x,y,SCI,x_decimal,y_decimal,SCI_decimal\n";
    for (long i = 0; i < n; ++i) {
        auto r = random_ratio_vector(s, rng, max_weight);
        auto p = geography_point(r);
        std::string rv;
        for (std::size_t g = 1; g < r.r.size(); ++g) rv += (g > 1 ? " / " : "") + rational_str(r.r[g]);
        std::cout << s << "," << rv << "," << rational_str(p.x) << "," << rational_str(p.y) << ","
                  << rational_str(p.SCI) << "," << decimal(p.x) << "," << decimal(p.y) << "," << decimal(p.SCI)
                  << "\n";
    }
    return kOk;
}

int cmd_geography_extremes(int s) {
    check_rank(s);
    json j;
    j["s"] = s;
    j["vertex"] = point_json(geography_point(vertex_vector(s, 1)));
    j["barycenter"] = point_json(geography_point(barycenter_vector(s)));
    j["barycenter_y_closed_form"] = rational_str(barycenter_y(s));
    j["Q_lower"] = rational_str(q_lower_bound(s));
    j["Q_upper"] = rational_str(q_upper_bound(s));
    j["x_lower_statement"] = rational_str(x_lower_bound_statement(s));
    j["x_lower_proof"] = rational_str(x_lower_bound_proof(s));
    j["SCI_lower"] = rational_str(kSciLower);
    j["SCI_upper"] = rational_str(kSciUpper);
    std::cout << j.dump(2) << "\n";
    return kOk;
}

int cmd_geography_hunt(int s, const std::vector<std::string>& ts) {
    json arr = json::array();
    for (const auto& text : ts) {
        auto h = hunt_scan(s, parse_rational(text));
        json j;
        j["t"] = rational_str(parse_rational(text));
        j["F"] = rational_str(h.F);
        j["F_positive"] = h.F > 0;
        j["point"] = point_json(h.point);
        j["empty_zone"] = h.point.SCI > 0;
        arr.push_back(j);
    }
    std::cout << json{{"s", s}, {"scan", arr}}.dump(2) << "\n";
    return kOk;
}

struct ClassifyResult {
    std::vector<AdmissibleSolution> sols;
    BoundsReport report;
};

int cmd_classify(int s, std::int64_t m, const std::string& base, const std::string& format, std::int64_t t_max,
                 bool bounds_report, unsigned threads) {
    check_rank(s);
    if (m < 1) throw InputError("--m must be positive");
    if (format != "json" && format != "md" && format != "csv") throw InputError("--format must be json, md or csv");
    if (base != "L1" && base != "general" && base != "all") throw InputError("--base must be L1, general or all");

    if (s == 1) {
        auto fams = enumerate_s1(m, t_max);
        if (format == "md") {
            std::cout << s1_families_markdown(fams);
        } else if (format == "csv") {
            std::cout << s1_families_csv(fams);
        } else {
            json arr = json::array();
            for (const auto& f : fams) arr.push_back(s1_family_to_json(f, t_max));
            std::cout << json{{"s", 1}, {"m", m}, {"families", arr}}.dump(2) << "\n";
        }
        return kOk;
    }

    std::vector<std::function<ClassifyResult()>> jobs;
    if (base == "general" && s > 6) throw InputError("general base classification covers s <= 6");
    if (base != "L1" && s <= 6) {
        jobs.push_back([=] {
            ClassifyResult r;
            r.sols = enumerate_flat(s, m, &r.report);
            return r;
        });
    }
    if (base != "general") {
        for (const auto& c : l1_cases()) {
            if (c.m != m || s < c.s_min || (c.s_max != 0 && s > c.s_max)) continue;
            jobs.push_back([=] {
                ClassifyResult r;
                r.sols = enumerate_L1_cell(s, m, c.k, &r.report);
                for (auto& sol : r.sols) {
                    if (c.index == 1) sol.note = "no published table to compare";
                    if (c.index == 7 && s == 4 && value_profile(sol.d) == Counts{{1, 9}})
                        sol.note = "extra orbit, absent from the family list";
                }
                return r;
            });
        }
    }
    auto results = run_pool(jobs, threads);
    std::vector<AdmissibleSolution> sols;
    std::vector<std::string> lines;
    for (auto& r : results) {
        sols.insert(sols.end(), r.sols.begin(), r.sols.end());
        lines.insert(lines.end(), r.report.lines.begin(), r.report.lines.end());
    }
    std::sort(sols.begin(), sols.end(), solution_less);

    if (format == "md") {
        std::cout << solutions_markdown(sols);
    } else if (format == "csv") {
        std::cout << solutions_csv(sols);
    } else {
        json arr = json::array();
        for (const auto& x : sols) arr.push_back(solution_to_json(x));
        json j{{"s", s}, {"m", m}, {"base", base}, {"solutions", arr}};
        if (bounds_report) j["bounds_report"] = lines;
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    if (bounds_report)
        for (const auto& line : lines) std::cerr << line << "\n";
    return kOk;
}

json deformation_json(const DeformationReport& r, int s) {
    json j;
    j["ok"] = r.ok();
    j["pairwise_ok"] = r.pairwise_ok;
    j["failing_count"] = r.failing_count;
    json f = json::array();
    for (auto [g, chi] : r.failing) f.push_back({{"g", format_bits(g, s)}, {"chi", format_bits(chi, s)}});
    j["failing"] = f;
    j["total_degree_ok"] = r.total_degree_ok;
    j["weights_pairwise_coprime"] = r.weights_pairwise_coprime;
    j["genericity_assumed"] = r.genericity_assumed;
    j["stability"] = "stable by pair criterion, not verified";
    return j;
}

int cmd_deform_check(const std::string& path) {
    auto p = parse_coverspec_text(read_file(path));
    auto val = validate(p.cover, p.input_sorted);
    if (!val.ok()) {
        std::cout << validation_json(val, p.cover).dump(2) << "\n";
        return kInvalid;
    }
    auto rep = deformation_criteria(p.cover);
    std::cout << deformation_json(rep, p.cover.s()).dump(2) << "\n";
    return rep.ok() ? kOk : kInvalid;
}

int cmd_new_component(std::int64_t M) {
    if (M <= 2 || M % 2 != 0) throw InputError("--M must be even and > 2");
    auto nc = gen_new_component(M);
    json j;
    j["cover"] = coverspec_to_json(nc.cover);
    j["l"] = l_tuple_str(nc.l);
    j["l_values"] = {{"chi.g0=1", 1 + 7 * M / 2}, {"chi.g0=0", 4 * M}};
    j["flat"] = nc.flat;
    j["deformation"] = deformation_json(nc.deformation, 4);
    std::cout << j.dump(2) << "\n";
    return kOk;
}

int cmd_unbounded(const std::string& kind, int s) {
    FamilyKind k;
    if (kind == "canonical")
        k = FamilyKind::canonical;
    else if (kind == "bicanonical")
        k = FamilyKind::bicanonical;
    else
        throw InputError("--kind must be canonical or bicanonical");
    check_rank(s);
    if ((k == FamilyKind::canonical && s < 4) || s < 3) throw InputError("rank too small for this family");
    auto f = gen_unbounded(s, k);
    json j;
    j["kind"] = kind;
    j["s"] = s;
    j["weights"] = f.cover.weights.a();
    j["L"] = f.L;
    j["D"] = f.cover.D();
    j["branch_degree"] = f.t;
    j["support"] = "g with g_0 = 1";
    j["m"] = f.m;
    j["M"] = f.report.M;
    j["k"] = f.report.k;
    j["l_chi0"] = f.l_chi0;
    j["l_other"] = f.l_other;
    j["p_m"] = f.report.plurigenus;
    j["flat"] = f.report.flat;
    j["boundary"] = f.boundary;
    if (s <= 6) j["cover"] = coverspec_to_json(f.cover);
    std::cout << j.dump(2) << "\n";
    return kOk;
}

// Seeded Walsh-transform identities on random integer functions.
int cmd_selftest_fourier(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> val(-50, 50);
    bool all = true;
    for (int s = 2; s <= 8; ++s) {
        const std::size_t n = group_order(s);
        long failures = 0;
        for (int it = 0; it < count; ++it) {
            GroupFunction f(s), g(s);
            for (Elem x = 0; x < n; ++x) {
                f[x] = val(rng);
                g[x] = val(rng);
            }
            const auto F = forward(f), G = forward(g);
            bool ok = inverse(F) == f;
            std::int64_t sumF = 0, pars = 0, plan = 0, ff = 0, fg = 0;
            for (Elem x = 0; x < n; ++x) {
                sumF += F[x];
                pars += F[x] * F[x];
                plan += F[x] * G[x];
                ff += f[x] * f[x];
                fg += f[x] * g[x];
            }
            ok = ok && sumF == static_cast<std::int64_t>(n) * f[0];
            ok = ok && pars == static_cast<std::int64_t>(n) * ff && plan == static_cast<std::int64_t>(n) * fg;
            if (!ok) ++failures;
        }
        std::cout << "s=" << s << " functions=" << count << " failures=" << failures << "\n";
        all = all && failures == 0;
    }
    std::cout << (all ? "PASS" : "FAIL") << "\n";
    return all ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants and classification of (Z2)^s-covers of weighted projective threefolds"};
    app.require_subcommand(1);

    auto* cover = app.add_subcommand("cover", "inspect a coverspec file");
    cover->require_subcommand(1);
    std::string cover_path;
    auto* cover_check = cover->add_subcommand("check", "validate a coverspec");
    cover_check->add_option("file", cover_path, "coverspec JSON")->required();
    auto* cover_inv = cover->add_subcommand("invariants", "K^3, chi(O_X), e(X) and Chern ratios");
    cover_inv->add_option("file", cover_path, "coverspec JSON")->required();

    auto* geo = app.add_subcommand("geography", "Chern-ratio geography of ratio vectors");
    geo->require_subcommand(1);
    int geo_s = 3;
    long geo_n = 100;
    std::uint64_t geo_seed = 1;
    std::int64_t geo_max = 24;
    std::vector<std::string> hunt_t{"1/2", "11/20", "3/5", "13/20", "17/25"};
    auto* geo_sample = geo->add_subcommand("sample", "random points as CSV");
    geo_sample->add_option("--s", geo_s, "rank")->required();
    geo_sample->add_option("--n", geo_n, "number of points");
    geo_sample->add_option("--seed", geo_seed, "RNG seed");
    geo_sample->add_option("--max-weight", geo_max, "largest integer weight before normalization");
    auto* geo_ext = geo->add_subcommand("extremes", "vertex, barycenter and closed-form bounds");
    geo_ext->add_option("--s", geo_s, "rank")->required();
    auto* geo_hunt = geo->add_subcommand("hunt", "almost uniform scan F(4,t)");
    geo_hunt->add_option("--s", geo_s, "rank");
    geo_hunt->add_option("--t", hunt_t, "values of t as p/q");

    auto* cls = app.add_subcommand("classify", "admissible pluricanonical solutions");
    int cls_s = 2;
    std::int64_t cls_m = 1, t_max = 10;
    std::string base = "all", format = "json";
    bool bounds = false;
    unsigned threads = default_threads();
    cls->add_option("--s", cls_s, "rank")->required();
    cls->add_option("--m", cls_m, "pluricanonical index")->required();
    cls->add_option("--base", base, "L1, general or all");
    cls->add_option("--format", format, "json, md or csv");
    cls->add_option("--t-max", t_max, "largest t instantiated for s = 1");
    cls->add_flag("--bounds-report", bounds, "emit the pruning bounds used");
    cls->add_option("--threads", threads, "worker threads (default from Z2COVER_THREADS)");

    auto* deform = app.add_subcommand("deform", "numeric deformation criteria");
    deform->require_subcommand(1);
    std::string deform_path;
    auto* deform_check = deform->add_subcommand("check", "check a coverspec");
    deform_check->add_option("file", deform_path, "coverspec JSON")->required();

    auto* ex = app.add_subcommand("examples", "example families");
    ex->require_subcommand(1);
    std::int64_t nc_M = 4;
    std::string kind = "canonical";
    int ub_s = 7;
    auto* ex_nc = ex->add_subcommand("new-component", "P(1,1,1,M), s = 4");
    ex_nc->add_option("--M", nc_M, "even M > 2")->required();
    auto* ex_ub = ex->add_subcommand("unbounded", "non-flat families over P(1,1,L,L)");
    ex_ub->add_option("--kind", kind, "canonical or bicanonical");
    ex_ub->add_option("--s", ub_s, "rank")->required();

    auto* self = app.add_subcommand("selftest", "internal consistency checks");
    self->require_subcommand(1);
    std::uint64_t st_seed = 1;
    int st_count = 200;
    auto* st_fourier = self->add_subcommand("fourier", "Walsh transform identities");
    st_fourier->add_option("--seed", st_seed, "RNG seed");
    st_fourier->add_option("--count", st_count, "functions per rank");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kMalformed;
    }

    try {
        if (*cover_check) return cmd_cover_check(cover_path);
        if (*cover_inv) return cmd_cover_invariants(cover_path);
        if (*geo_sample) return cmd_geography_sample(geo_s, geo_n, geo_seed, geo_max);
        if (*geo_ext) return cmd_geography_extremes(geo_s);
        if (*geo_hunt) return cmd_geography_hunt(geo_s, hunt_t);
        if (*cls) return cmd_classify(cls_s, cls_m, base, format, t_max, bounds, threads);
        if (*deform_check) return cmd_deform_check(deform_path);
        if (*ex_nc) return cmd_new_component(nc_M);
        if (*ex_ub) return cmd_unbounded(kind, ub_s);
        if (*st_fourier) return cmd_selftest_fourier(st_seed, st_count);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    } catch (const NonIntegral& e) {
        std::cerr << "validation: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInvalid;
    }
    return kMalformed;
}
