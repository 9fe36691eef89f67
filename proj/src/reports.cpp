#include "hkc/reports.hpp"

#include <sstream>

#include "hkc/errors.hpp"

namespace hkc::reports {

namespace {

json group_echo(const GroupSpec& spec, const PermutationGroup& group) {
  json gens = json::array();
  for (const Permutation& p : group.generators()) gens.push_back(p.cycle_string());
  json out;
  out["spec"] = spec.text();
  out["degree"] = group.degree();
  out["generators"] = std::move(gens);
  if (auto order = group.cached_order())
    out["order"] = *order;
  else
    out["order"] = nullptr;
  return out;
}

json counts_to_json(const std::vector<std::uint64_t>& counts) {
  return json(counts);
}

}  // namespace

json graded_to_json(const GradedDims& dims) {
  json out = json::object();
  for (const auto& [degree, dim] : dims.table()) out[std::to_string(degree)] = dim;
  return out;
}

json hochschild_to_json(const HochschildNumbers& hh) {
  json out = json::object();
  for (const auto& [k, v] : hh.table()) out[std::to_string(k)] = v;
  return out;
}

json diamond_to_json(const HodgeDiamond& diamond) {
  json rows = json::array();
  for (std::size_t k = 0; k <= diamond.dim(); ++k) {
    json row = json::array();
    for (std::size_t i = 0; i <= k; ++i) row.push_back(diamond.h(k - i, i));
    rows.push_back(std::move(row));
  }
  json out;
  out["d"] = diamond.dim();
  out["h"] = std::move(rows);
  return out;
}

json homog_report(const GroupSpec& spec, const Limits& limits) {
  PermutationGroup group = resolve_group(spec);
  HomogeneityProfile profile = homogeneity_profile(group, limits.subset_budget);
  json out;
  out["command"] = "homog";
  out["group"] = group_echo(spec, group);
  out["orbit_counts"] = counts_to_json(profile.orbit_counts);
  out["all_transitive"] = profile.all_transitive;
  return out;
}

json unit_report(const GroupSpec& spec, const Limits& limits) {
  PermutationGroup group = resolve_group(spec);
  UnitVerdict verdict = hyperkahler_unit_verdict(group, limits.subset_budget);
  json offending = json::array();
  for (const auto& [degree, dim] : verdict.offending_degrees) {
    json entry;
    entry["degree"] = degree;
    entry["dim"] = dim;
    offending.push_back(std::move(entry));
  }
  json out;
  out["command"] = "unit";
  out["group"] = group_echo(spec, group);
  out["invariant_dims"] = graded_to_json(verdict.invariant_dims);
  out["is_hyper_kahler"] = verdict.is_hyper_kahler;
  out["offending_degrees"] = std::move(offending);
  return out;
}

json scan_report(std::size_t n) {
  std::vector<SubgroupScanEntry> entries = subgroup_scan(n);
  json classes = json::array();
  json passing = json::array();
  json notes = json::array();
  for (const SubgroupScanEntry& entry : entries) {
    json gens = json::array();
    for (const Permutation& p : entry.generators) gens.push_back(p.cycle_string());
    json item;
    item["order"] = entry.order;
    item["conjugates"] = entry.conjugates;
    item["generators"] = gens;
    item["orbit_counts"] = counts_to_json(entry.profile.orbit_counts);
    item["all_transitive"] = entry.profile.all_transitive;
    classes.push_back(std::move(item));
    if (entry.profile.all_transitive) {
      json summary;
      summary["order"] = entry.order;
      summary["generators"] = gens;
      if (n == 5 && entry.order == 20) {
        summary["label"] = "AGL(1,5)";
        notes.push_back(
            "The passing class of order 20 is AGL(1,5) = F_5 : F_5^*, the affine group of "
            "the 5-element field, sharply 2-transitive on 5 points. It is sometimes "
            "labelled 'F_5^*' as shorthand for that semidirect product; the multiplicative "
            "group F_5^* alone has order 4, fixes 0, and is not transitive, so the "
            "shorthand should not be read literally.");
      }
      passing.push_back(std::move(summary));
    }
  }
  json out;
  out["command"] = "scan";
  out["n"] = n;
  out["class_count"] = entries.size();
  out["classes"] = std::move(classes);
  out["passing"] = std::move(passing);
  out["notes"] = std::move(notes);
  return out;
}

json prymian_report() {
  const HodgeDiamond& quotient = HodgeDiamond::prymian_P0();
  HodgeDiamond resolved = blow_up_opc4_points(quotient, 28);
  HochschildNumbers homology = hkr_homology(resolved);
  HochschildNumbers reduced = sod_subtract_exceptional(homology, 56);
  HochschildNumbers cohomology = serre_shift_cohomology(reduced, 4);
  std::array<long long, 9> betti = hk4_betti_from_hochschild(cohomology);
  SalamonCheck salamon = salamon_check(cohomology, 2);

  json out;
  out["command"] = "prymian";
  out["quotient"] = diamond_to_json(quotient);
  out["blow_up_points"] = 28;
  out["resolved"] = diamond_to_json(resolved);
  out["resolved_matches_builtin"] = resolved == HodgeDiamond::prymian_P0_resolved();
  out["hochschild_homology"] = hochschild_to_json(homology);
  out["exceptional_removed"] = 56;
  out["after_sod"] = hochschild_to_json(reduced);
  out["cohomology"] = hochschild_to_json(cohomology);
  out["betti"] = json(std::vector<long long>(betti.begin(), betti.end()));

  json sal;
  sal["r"] = 2;
  sal["lhs"] = salamon.lhs.get_str();
  sal["rhs"] = salamon.rhs.get_str();
  sal["holds"] = salamon.holds;
  out["salamon"] = std::move(sal);

  json guan = json::array();
  for (long long b2 : {betti[2], 23ll}) {
    json entry;
    entry["b2"] = b2;
    entry["strict"] = guan_b2_admissible(b2, GuanMode::strict);
    entry["inclusive"] = guan_b2_admissible(b2, GuanMode::inclusive);
    guan.push_back(std::move(entry));
  }
  out["guan"] = std::move(guan);
  return out;
}

json salamon_report(const std::vector<long long>& hh, std::size_t r) {
  std::map<int, long long> dims;
  for (std::size_t k = 0; k < hh.size(); ++k) dims[static_cast<int>(k)] = hh[k];
  HochschildNumbers numbers(HochschildVariant::cohomology, 2 * r, std::move(dims));
  SalamonCheck check = salamon_check(numbers, r);
  json out;
  out["command"] = "salamon";
  out["r"] = r;
  out["hh"] = json(hh);
  out["lhs"] = check.lhs.get_str();
  out["rhs"] = check.rhs.get_str();
  out["holds"] = check.holds;
  return out;
}

json orbifold_report(const GroupSpec& spec, long long e_base, const Limits& limits) {
  PermutationGroup group = resolve_group(spec);
  mpz_class euler = orbifold_euler(group, mpz_class(static_cast<long>(e_base)), limits.cap);
  json out;
  out["command"] = "orbifold";
  out["group"] = group_echo(spec, group);
  out["e_base"] = e_base;
  out["euler"] = euler.get_str();
  return out;
}

json series_report(SeriesFamily family, std::size_t max_n, long long e_base,
                   bool with_oracle, const Limits& limits) {
  if (with_oracle && family != SeriesFamily::symmetric)
    throw Error(errc::bad_parameter,
                "the infinite-product oracle only covers the symmetric family");
  EulerSeries series = category_euler_series(family, max_n, e_base, limits.cap);
  json entries = json::array();
  for (const EulerSeriesEntry& entry : series.entries) {
    json item;
    item["n"] = entry.n;
    item["label"] = entry.label;
    item["euler"] = entry.euler.get_str();
    entries.push_back(std::move(item));
  }
  json out;
  out["command"] = "series";
  out["family"] = series_family_name(family);
  out["e_base"] = e_base;
  out["max_n"] = max_n;
  out["entries"] = std::move(entries);
  if (series.truncated_at)
    out["truncated_at"] = *series.truncated_at;
  else
    out["truncated_at"] = nullptr;
  if (with_oracle) {
    const std::size_t upto = series.entries.empty() ? 0 : series.entries.back().n;
    std::vector<mpz_class> coeffs = goettsche_coefficients(upto, e_base);
    json oracle_coeffs = json::array();
    bool agrees = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      oracle_coeffs.push_back(coeffs[i].get_str());
      if (coeffs[i] != series.entries[i].euler) agrees = false;
    }
    json oracle;
    oracle["product_coefficients"] = std::move(oracle_coeffs);
    oracle["agrees"] = agrees;
    out["oracle"] = std::move(oracle);
  }
  return out;
}

std::string series_csv(const json& report) {
  std::string out = "n,label,euler\n";
  for (const json& entry : report.at("entries")) {
    out += std::to_string(entry.at("n").get<std::uint64_t>());
    out += ",";
    out += entry.at("label").get<std::string>();
    out += ",";
    out += entry.at("euler").get<std::string>();
    out += "\n";
  }
  return out;
}

json error_report(const std::exception& error) {
  json body;
  if (const auto* parse = dynamic_cast<const ParseError*>(&error)) {
    body["code"] = errc_name(parse->code());
    body["message"] = parse->what();
    body["offset"] = parse->offset();
    body["expected"] = parse->expected();
  } else if (const auto* domain = dynamic_cast<const Error*>(&error)) {
    body["code"] = errc_name(domain->code());
    body["message"] = domain->what();
  } else {
    body["code"] = "InternalError";
    body["message"] = error.what();
  }
  json out;
  out["error"] = std::move(body);
  return out;
}

namespace {

std::string render_group_line(const json& group) {
  std::string out = "group " + group.at("spec").get<std::string>() + "  (degree " +
                    std::to_string(group.at("degree").get<std::uint64_t>());
  if (group.at("order").is_number())
    out += ", order " + std::to_string(group.at("order").get<std::uint64_t>());
  out += ")";
  return out;
}

std::string render_counts(const json& counts) {
  std::string out;
  for (const json& c : counts) {
    if (!out.empty()) out += " ";
    out += std::to_string(c.get<std::uint64_t>());
  }
  return out;
}

std::string render_dims(const json& dims) {
  std::string out;
  for (auto it = dims.begin(); it != dims.end(); ++it) {
    if (!out.empty()) out += "  ";
    out += it.key() + ":" + std::to_string(it.value().get<long long>());
  }
  return out.empty() ? "(none)" : out;
}

std::string render_diamond(const json& diamond) {
  std::vector<std::vector<long long>> rows;
  for (const json& row : diamond.at("h")) rows.push_back(row.get<std::vector<long long>>());
  return HodgeDiamond::from_upper_rows(rows).pyramid_text();
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream out;
  if (report.contains("error")) {
    const json& e = report.at("error");
    out << "error [" << e.at("code").get<std::string>() << "] "
        << e.at("message").get<std::string>();
    if (e.contains("offset"))
      out << "\n  at byte offset " << e.at("offset").get<std::size_t>() << ", expected "
          << e.at("expected").get<std::string>();
    out << "\n";
    return out.str();
  }

  const std::string command = report.at("command").get<std::string>();
  if (command == "homog") {
    out << render_group_line(report.at("group")) << "\n";
    out << "orbit counts on k-subsets, k = 0.."
        << report.at("orbit_counts").size() - 1 << ": "
        << render_counts(report.at("orbit_counts")) << "\n";
    out << "single orbit at every size: "
        << (report.at("all_transitive").get<bool>() ? "yes" : "no") << "\n";
  } else if (command == "unit") {
    out << render_group_line(report.at("group")) << "\n";
    out << "invariant dimensions (degree:dim): " << render_dims(report.at("invariant_dims"))
        << "\n";
    if (report.at("is_hyper_kahler").get<bool>()) {
      out << "homological unit: truncated polynomial shape, hyper-Kähler type\n";
    } else {
      out << "homological unit: NOT of hyper-Kähler type\n";
      for (const json& o : report.at("offending_degrees"))
        out << "  degree " << o.at("degree").get<int>() << " has dimension "
            << o.at("dim").get<long long>() << "\n";
    }
  } else if (command == "scan") {
    out << "subgroup classes of the symmetric group on " << report.at("n").get<std::size_t>()
        << " points: " << report.at("class_count").get<std::size_t>() << "\n";
    out << "classes with a single orbit on every subset size:\n";
    for (const json& p : report.at("passing")) {
      out << "  order " << p.at("order").get<std::uint64_t>() << ", generators";
      for (const json& g : p.at("generators")) out << " " << g.get<std::string>();
      if (p.contains("label")) out << "  [" << p.at("label").get<std::string>() << "]";
      out << "\n";
    }
    out << "full table (order | conjugates | orbit counts | generators):\n";
    for (const json& c : report.at("classes")) {
      out << "  " << c.at("order").get<std::uint64_t>() << " | "
          << c.at("conjugates").get<std::uint64_t>() << " | "
          << render_counts(c.at("orbit_counts")) << " |";
      for (const json& g : c.at("generators")) out << " " << g.get<std::string>();
      out << "\n";
    }
    for (const json& note : report.at("notes"))
      out << "note: " << note.get<std::string>() << "\n";
  } else if (command == "prymian") {
    out << "quotient fourfold Hodge diamond (upper half):\n"
        << render_diamond(report.at("quotient"));
    out << "blow up " << report.at("blow_up_points").get<int>()
        << " isolated quotient points:\n"
        << render_diamond(report.at("resolved"));
    out << "Hochschild homology: " << render_dims(report.at("hochschild_homology")) << "\n";
    out << "remove " << report.at("exceptional_removed").get<int>()
        << " exceptional objects: " << render_dims(report.at("after_sod")) << "\n";
    out << "Serre regrading to cohomology: " << render_dims(report.at("cohomology")) << "\n";
    out << "Betti numbers: " << render_counts(report.at("betti")) << "\n";
    const json& sal = report.at("salamon");
    out << "Betti constraint at r=" << sal.at("r").get<int>() << ": lhs "
        << sal.at("lhs").get<std::string>() << ", rhs " << sal.at("rhs").get<std::string>()
        << " -> " << (sal.at("holds").get<bool>() ? "holds" : "fails") << "\n";
    for (const json& g : report.at("guan")) {
      out << "b2 = " << g.at("b2").get<long long>() << " admissible? strict: "
          << (g.at("strict").get<bool>() ? "yes" : "no")
          << ", inclusive: " << (g.at("inclusive").get<bool>() ? "yes" : "no") << "\n";
    }
  } else if (command == "salamon") {
    out << "hh^0..hh^" << report.at("hh").size() - 1 << ": " << render_counts(report.at("hh"))
        << "\n";
    out << "r = " << report.at("r").get<std::size_t>() << ": lhs "
        << report.at("lhs").get<std::string>() << ", rhs "
        << report.at("rhs").get<std::string>() << " -> "
        << (report.at("holds").get<bool>() ? "holds" : "fails") << "\n";
  } else if (command == "orbifold") {
    out << render_group_line(report.at("group")) << "\n";
    out << "orbifold Euler characteristic with base " << report.at("e_base").get<long long>()
        << ": " << report.at("euler").get<std::string>() << "\n";
  } else if (command == "series") {
    out << "family " << report.at("family").get<std::string>() << ", base Euler number "
        << report.at("e_base").get<long long>() << "\n";
    for (const json& entry : report.at("entries"))
      out << "  n = " << entry.at("n").get<std::size_t>() << "  ["
          << entry.at("label").get<std::string>() << "]  "
          << entry.at("euler").get<std::string>() << "\n";
    if (report.at("truncated_at").is_number())
      out << "stopped: the group at n = " << report.at("truncated_at").get<std::size_t>()
          << " exceeds the element cap\n";
    if (report.contains("oracle"))
      out << "infinite-product oracle agrees: "
          << (report.at("oracle").at("agrees").get<bool>() ? "yes" : "no") << "\n";
  } else {
    out << report.dump(2) << "\n";
  }
  return out.str();
}

}  // namespace hkc::reports
