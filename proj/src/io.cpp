#include "z2cover/io.hpp"

#include <algorithm>
#include <sstream>

namespace z2c {

std::string rational_str(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return c.get_str();
}

ParsedCover parse_coverspec(const json& j) {
    if (!j.is_object()) throw InputError("coverspec must be a JSON object");
    for (const char* key : {"weights", "s", "d"})
        if (!j.contains(key)) throw InputError(std::string("coverspec is missing \"") + key + "\"");
    const auto& jw = j["weights"];
    if (!jw.is_array() || jw.size() != 4) throw InputError("\"weights\" must be an array of four integers");
    WeightTuple a;
    for (int i = 0; i < 4; ++i) {
        if (!jw[i].is_number_integer() || jw[i].get<std::int64_t>() <= 0)
            throw InputError("weights must be positive integers");
        a[i] = jw[i].get<std::int64_t>();
    }
    if (!j["s"].is_number_integer()) throw InputError("\"s\" must be an integer");
    const std::int64_t s = j["s"].get<std::int64_t>();
    try {
        check_rank(static_cast<int>(std::clamp<std::int64_t>(s, -1, 1000)));
    } catch (const RankError& e) {
        throw InputError(e.what());
    }
    if (!j["d"].is_object()) throw InputError("\"d\" must be an object keyed by bitstrings");
    ParsedCover p;
    p.input_sorted = std::is_sorted(a.begin(), a.end());
    p.cover.weights = Weights(a);
    p.cover.d = GroupFunction(static_cast<int>(s));
    for (const auto& [key, val] : j["d"].items()) {
        Elem g;
        try {
            g = parse_bits(key, static_cast<int>(s));
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        if (!val.is_number_integer()) throw InputError("degree for \"" + key + "\" must be an integer");
        p.cover.d[g] = val.get<std::int64_t>();
    }
    return p;
}

ParsedCover parse_coverspec_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return parse_coverspec(j);
}

json coverspec_to_json(const CoverSpec& c) {
    json j;
    j["weights"] = c.weights.a();
    j["s"] = c.s();
    json d = json::object();
    for (Elem g = 1; g < c.d.size(); ++g)
        if (c.d[g] != 0) d[format_bits(g, c.s())] = c.d[g];
    j["d"] = d;
    return j;
}

namespace {

std::string tuple_str(const std::vector<std::int64_t>& v, std::size_t from) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = from; i < v.size(); ++i) os << (i > from ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::vector<std::int64_t> parse_tuple(std::string t) {
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw InputError("expected a parenthesized tuple: " + t);
    std::vector<std::int64_t> out;
    std::stringstream ss(t.substr(1, t.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw InputError("bad integer " + item);
        } catch (const std::logic_error&) {
            throw InputError("bad integer " + item);
        }
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(' ');
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(' ') - b + 1);
}

}  // namespace

std::string d_tuple_str(const GroupFunction& d) { return tuple_str(d.values(), 1); }
std::string l_tuple_str(const std::vector<std::int64_t>& l) { return tuple_str(l, 1); }

json solution_to_json(const AdmissibleSolution& sol) {
    json j;
    j["s"] = sol.s;
    j["m"] = sol.m;
    j["weights"] = sol.weights.a();
    j["L"] = sol.weights.L();
    j["W"] = sol.weights.W();
    j["D"] = sol.D();
    j["k"] = sol.k;
    j["M"] = sol.k * sol.weights.L();
    std::vector<std::int64_t> d(sol.d.values().begin() + 1, sol.d.values().end());
    std::vector<std::int64_t> l(sol.l.begin() + (sol.l.empty() ? 0 : 1), sol.l.end());
    j["d"] = d;
    j["l"] = l;
    j["p_m"] = sol.plurigenus;
    j["flat"] = sol.flat;
    j["orbit"] = sol.signature_level ? "signature" : "canonical";
    if (!sol.note.empty()) j["note"] = sol.note;
    return j;
}

std::string solutions_markdown(const std::vector<AdmissibleSolution>& sols) {
    std::ostringstream os;
    os << "| s | m | weights | d | k | p_m | flat | note |\n";
    os << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& x : sols)
        os << "| " << x.s << " | " << x.m << " | " << x.weights.str() << " | " << d_tuple_str(x.d) << " | " << x.k
           << " | " << x.plurigenus << " | " << (x.flat ? "yes" : "no") << " | " << x.note << " |\n";
    return os.str();
}

std::string solutions_csv(const std::vector<AdmissibleSolution>& sols) {
    std::ostringstream os;
    os << "s,m,weights,D,d,k,p_m,flat,orbit,note\n";
    for (const auto& x : sols)
        os << x.s << "," << x.m << "," << csv_field(x.weights.str()) << "," << x.D() << "," << csv_field(d_tuple_str(x.d))
           << "," << x.k << "," << x.plurigenus << "," << (x.flat ? "yes" : "no") << ","
           << (x.signature_level ? "signature" : "canonical") << "," << csv_field(x.note) << "\n";
    return os.str();
}

std::vector<AdmissibleSolution> parse_solutions_markdown(const std::string& text) {
    std::vector<AdmissibleSolution> out;
    std::istringstream in(text);
    std::string line;
    int row = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] != '|') continue;
        if (row++ < 2) continue;  // header and rule
        std::vector<std::string> cells;
        std::size_t pos = 1;
        while (pos < line.size()) {
            // tuples contain no '|', so a plain split works
            auto next = line.find('|', pos);
            if (next == std::string::npos) break;
            cells.push_back(trim(line.substr(pos, next - pos)));
            pos = next + 1;
        }
        if (cells.size() != 8) throw InputError("expected 8 cells in row: " + line);
        AdmissibleSolution sol;
        try {
            sol.s = std::stoi(cells[0]);
            sol.m = std::stoll(cells[1]);
            sol.k = std::stoll(cells[4]);
        } catch (const std::logic_error&) {
            throw InputError("bad number in row: " + line);
        }
        auto w = parse_tuple(cells[2]);
        if (w.size() != 4) throw InputError("weights need four entries");
        sol.weights = Weights(WeightTuple{w[0], w[1], w[2], w[3]});
        auto d = parse_tuple(cells[3]);
        if (sol.s < 1 || sol.s > kMaxRank || d.size() != group_order(sol.s) - 1)
            throw InputError("d-tuple length does not match s");
        sol.d = GroupFunction::from_nonzero(sol.s, d);
        auto rep = is_pluricanonical(sol.weights, sol.d, sol.m);
        if (!rep || rep->k != sol.k) throw InputError("row is not an admissible solution: " + line);
        if (std::to_string(rep->plurigenus) != cells[5]) throw InputError("p_m mismatch in row: " + line);
        sol.l = rep->l;
        sol.plurigenus = rep->plurigenus;
        sol.flat = rep->flat;
        sol.signature_level = sol.s > kMaxExactOrbitRank;
        sol.note = cells[7];
        out.push_back(std::move(sol));
    }
    return out;
}

namespace {

// k as a function of t: m t - m W / L
std::string k_formula(const S1Family& f) {
    const std::int64_t c = f.m * f.W / f.L;
    std::ostringstream os;
    if (f.m != 1) os << f.m;
    os << "t-" << c;
    return os.str();
}

std::string t_range(const S1Family& f) {
    if (f.m == 1) return "t >= " + std::to_string(f.t_values.empty() ? f.W / f.L + 1 : f.t_values.front());
    std::ostringstream os;
    os << "t in {";
    for (std::size_t i = 0; i < f.t_values.size(); ++i) os << (i ? "," : "") << f.t_values[i];
    os << "}";
    return os.str();
}

}  // namespace

json s1_family_to_json(const S1Family& f, std::int64_t t_max) {
    json j;
    j["m"] = f.m;
    j["weights"] = f.weights.a();
    j["L"] = f.L;
    j["W"] = f.W;
    j["d"] = std::to_string(2 * f.L) + "t";
    j["k"] = k_formula(f);
    j["t_range"] = t_range(f);
    j["meets_divisibility"] = f.meets_stated_divisibility;
    json inst = json::array();
    for (auto t : f.t_values) {
        if (t > t_max) break;
        inst.push_back({{"t", t}, {"d", 2 * f.L * t}, {"k", f.m * t - f.m * f.W / f.L}});
    }
    j["instances"] = inst;
    return j;
}

std::string s1_families_markdown(const std::vector<S1Family>& fams) {
    std::ostringstream os;
    os << "| m | weights | d | k | t |\n|---|---|---|---|---|\n";
    for (const auto& f : fams)
        os << "| " << f.m << " | " << f.weights.str() << " | " << 2 * f.L << "t | " << k_formula(f) << " | "
           << t_range(f) << (f.meets_stated_divisibility ? "" : " (fails m-1 | 2W)") << " |\n";
    return os.str();
}

std::string s1_families_csv(const std::vector<S1Family>& fams) {
    std::ostringstream os;
    os << "m,weights,L,W,t,d,k\n";
    for (const auto& f : fams)
        for (auto t : f.t_values)
            os << f.m << "," << csv_field(f.weights.str()) << "," << f.L << "," << f.W << "," << t << "," << 2 * f.L * t
               << "," << f.m * t - f.m * f.W / f.L << "\n";
    return os.str();
}

}  // namespace z2c
