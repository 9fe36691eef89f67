#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hkc/errors.hpp"
#include "hkc/reports.hpp"

namespace {

using hkc::reports::json;

constexpr int exit_ok = 0;
constexpr int exit_domain_error = 1;
constexpr int exit_parse_error = 2;

void emit(const json& report, bool json_mode) {
  if (json_mode)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << hkc::reports::render_text(report);
}

int emit_error(const std::exception& error, bool json_mode, int code) {
  json report = hkc::reports::error_report(error);
  if (json_mode)
    std::cerr << report.dump(2) << "\n";
  else
    std::cerr << hkc::reports::render_text(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homogeneity, Hochschild, and orbifold Euler computations for "
               "hyper-Kähler categories of Hilbert-scheme type"};
  app.require_subcommand(1);

  bool json_mode = false;
  std::uint64_t cap = hkc::default_element_cap;
  std::uint64_t subset_budget = hkc::default_subset_budget;
  app.add_flag("--json", json_mode, "emit the report as JSON");
  app.add_option("--cap", cap, "element-enumeration cap")->capture_default_str();
  app.add_option("--subset-budget", subset_budget, "k-subset orbit budget")
      ->capture_default_str();

  std::string group_text;
  std::size_t scan_n = 0;
  std::vector<long long> salamon_hh;
  std::size_t salamon_r = 0;
  long long e_base = 24;
  std::string series_family_text;
  std::size_t series_max_n = 0;
  bool series_oracle = false;
  std::string series_out;

  CLI::App* homog = app.add_subcommand("homog", "orbit counts on k-subsets for every k");
  homog->add_option("--group", group_text, "group description, e.g. Sn(5) or gens:(0 1),(1 2)")
      ->required();

  CLI::App* unit = app.add_subcommand(
      "unit", "graded dimensions of the invariant unit and the hyper-Kähler verdict");
  unit->add_option("--group", group_text, "group description")->required();

  CLI::App* scan = app.add_subcommand(
      "scan", "homogeneity verdict for every subgroup class of a small symmetric group");
  scan->add_option("--n", scan_n, "degree of the ambient symmetric group (at most 5)")
      ->required();

  app.add_subcommand("prymian",
                     "built-in resolution pipeline: quotient diamond to Betti numbers");

  CLI::App* salamon = app.add_subcommand(
      "salamon", "evaluate the hyper-Kähler Betti constraint on cohomology dimensions");
  salamon->add_option("--hh", salamon_hh, "hh^0,hh^1,... as a comma-separated list")
      ->required()
      ->delimiter(',');
  salamon->add_option("--r", salamon_r, "half the dimension of the target")->required();

  CLI::App* orbifold =
      app.add_subcommand("orbifold", "orbifold Euler characteristic of [X^n / G]");
  orbifold->add_option("--group", group_text, "group description")->required();
  orbifold->add_option("--e-base", e_base, "Euler characteristic of the base space")
      ->capture_default_str();

  CLI::App* series = app.add_subcommand(
      "series", "orbifold Euler characteristics along a family of groups");
  series->add_option("--family", series_family_text, "Sn or An")->required();
  series->add_option("--max-n", series_max_n, "largest n in the family")->required();
  series->add_option("--e-base", e_base, "Euler characteristic of the base space")
      ->capture_default_str();
  series->add_flag("--oracle", series_oracle,
                   "cross-check against the infinite-product expansion (Sn only)");
  series->add_option("--out", series_out, "write the series as CSV to this file");

  // global flags (--json, --cap, ...) are legal after the subcommand too
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_parse_error;
  }

  const hkc::reports::Limits limits{cap, subset_budget};

  // Input validation: anything wrong with the request itself is a usage
  // error, distinct from computations that fail later.
  hkc::GroupSpec spec;
  hkc::SeriesFamily family = hkc::SeriesFamily::symmetric;
  try {
    if (homog->parsed() || unit->parsed() || orbifold->parsed())
      spec = hkc::parse_group_spec(group_text);
    if (series->parsed()) {
      family = hkc::series_family_from_name(series_family_text);
      if (series_oracle && family != hkc::SeriesFamily::symmetric)
        throw hkc::Error(hkc::errc::bad_parameter,
                         "the infinite-product oracle only covers the symmetric family");
    }
    if (salamon->parsed()) {
      if (salamon_r == 0)
        throw hkc::Error(hkc::errc::bad_parameter, "the constraint needs r >= 1");
      for (long long v : salamon_hh)
        if (v < 0)
          throw hkc::Error(hkc::errc::negative_dimension,
                           "cohomology dimensions must be nonnegative");
    }
  } catch (const std::exception& e) {
    return emit_error(e, json_mode, exit_parse_error);
  }

  try {
    json report;
    if (homog->parsed()) {
      report = hkc::reports::homog_report(spec, limits);
    } else if (unit->parsed()) {
      report = hkc::reports::unit_report(spec, limits);
    } else if (scan->parsed()) {
      report = hkc::reports::scan_report(scan_n);
    } else if (salamon->parsed()) {
      report = hkc::reports::salamon_report(salamon_hh, salamon_r);
    } else if (orbifold->parsed()) {
      report = hkc::reports::orbifold_report(spec, e_base, limits);
    } else if (series->parsed()) {
      report = hkc::reports::series_report(family, series_max_n, e_base, series_oracle,
                                           limits);
      if (!series_out.empty()) {
        std::ofstream csv(series_out);
        if (!csv) throw hkc::Error(hkc::errc::bad_parameter,
                                   "cannot open '" + series_out + "' for writing");
        csv << hkc::reports::series_csv(report);
        report["csv_written"] = series_out;
      }
    } else {
      report = hkc::reports::prymian_report();
    }
    emit(report, json_mode);
    return exit_ok;
  } catch (const std::exception& e) {
    return emit_error(e, json_mode, exit_domain_error);
  }
}
