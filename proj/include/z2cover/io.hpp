#pragma once

// JSON, Markdown and CSV forms of covers and classification results.

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "z2cover/classify.hpp"
#include "z2cover/cover.hpp"

namespace z2c {

using json = nlohmann::ordered_json;

// Malformed input (exit code 2 in the CLI).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "p/q", or "p" when integral.
std::string rational_str(const mpq_class& q);

struct ParsedCover {
    CoverSpec cover;
    bool input_sorted = true;
};

// {"weights":[a0,a1,a2,a3],"s":s,"d":{"<bitstring>":degree,...}}; omitted keys are 0.
ParsedCover parse_coverspec(const json& j);
ParsedCover parse_coverspec_text(const std::string& text);
json coverspec_to_json(const CoverSpec& c);

// "(d_1,...,d_{2^s-1})" in canonical element order.
std::string d_tuple_str(const GroupFunction& d);
std::string l_tuple_str(const std::vector<std::int64_t>& l);

json solution_to_json(const AdmissibleSolution& sol);
std::string solutions_markdown(const std::vector<AdmissibleSolution>& sols);
std::string solutions_csv(const std::vector<AdmissibleSolution>& sols);
// Reads the table written by solutions_markdown; rows are re-checked with is_pluricanonical.
std::vector<AdmissibleSolution> parse_solutions_markdown(const std::string& text);

json s1_family_to_json(const S1Family& f, std::int64_t t_max);
std::string s1_families_markdown(const std::vector<S1Family>& fams);
std::string s1_families_csv(const std::vector<S1Family>& fams);

}  // namespace z2c
