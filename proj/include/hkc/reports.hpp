#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hkc/graded.hpp"
#include "hkc/group_spec.hpp"
#include "hkc/hodge.hpp"
#include "hkc/orbifold.hpp"

namespace hkc::reports {

// ordered_json keeps insertion order, so graded tables can present their
// degree keys in ascending numeric order instead of lexicographic.
using json = nlohmann::ordered_json;

struct Limits {
  std::uint64_t cap = default_element_cap;
  std::uint64_t subset_budget = default_subset_budget;
};

json graded_to_json(const GradedDims& dims);
json hochschild_to_json(const HochschildNumbers& hh);
json diamond_to_json(const HodgeDiamond& diamond);

json homog_report(const GroupSpec& spec, const Limits& limits);
json unit_report(const GroupSpec& spec, const Limits& limits);
json scan_report(std::size_t n);
json prymian_report();
json salamon_report(const std::vector<long long>& hh, std::size_t r);
json orbifold_report(const GroupSpec& spec, long long e_base, const Limits& limits);
json series_report(SeriesFamily family, std::size_t max_n, long long e_base,
                   bool with_oracle, const Limits& limits);

std::string series_csv(const json& report);  // "n,label,euler" rows
json error_report(const std::exception& error);

// Human-readable rendering of any of the reports above.
std::string render_text(const json& report);

}  // namespace hkc::reports
