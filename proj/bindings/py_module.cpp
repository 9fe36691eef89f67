#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hkc/errors.hpp"
#include "hkc/finite_field.hpp"
#include "hkc/graded.hpp"
#include "hkc/group_spec.hpp"
#include "hkc/hodge.hpp"
#include "hkc/orbifold.hpp"
#include "hkc/perm_group.hpp"
#include "hkc/projective_groups.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py_int(const mpz_class& z) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::dict graded_to_dict(const hkc::GradedDims& dims) {
  py::dict out;
  for (const auto& [degree, dim] : dims.table()) out[py::int_(degree)] = dim;
  return out;
}

hkc::GradedDims graded_from_dict(const py::dict& d) {
  std::map<int, long long> dims;
  for (const auto& item : d)
    dims[item.first.cast<int>()] = item.second.cast<long long>();
  return hkc::GradedDims(std::move(dims));
}

py::dict hochschild_to_dict(const hkc::HochschildNumbers& hh) {
  py::dict out;
  for (const auto& [k, v] : hh.table()) out[py::int_(k)] = v;
  return out;
}

hkc::HochschildVariant variant_from_name(const std::string& name) {
  if (name == "homology") return hkc::HochschildVariant::homology;
  if (name == "cohomology") return hkc::HochschildVariant::cohomology;
  throw hkc::Error(hkc::errc::bad_parameter,
                   "variant must be 'homology' or 'cohomology', got '" + name + "'");
}

hkc::GuanMode guan_mode_from_name(const std::string& name) {
  if (name == "strict") return hkc::GuanMode::strict;
  if (name == "inclusive") return hkc::GuanMode::inclusive;
  throw hkc::Error(hkc::errc::bad_parameter,
                   "mode must be 'strict' or 'inclusive', got '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "homogeneity, Hochschild, and orbifold Euler computations for "
            "hyper-Kähler categories of Hilbert-scheme type";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const hkc::ParseError& e) {
      std::string msg = std::string("[ParseError at offset ") +
                        std::to_string(e.offset()) + ", expected " + e.expected() + "] " +
                        e.what();
      PyErr_SetString(PyExc_ValueError, msg.c_str());
    } catch (const hkc::Error& e) {
      std::string msg =
          std::string("[") + hkc::errc_name(e.code()) + "] " + e.what();
      PyErr_SetString(PyExc_ValueError, msg.c_str());
    }
  });

  py::class_<hkc::Permutation>(m, "Permutation")
      .def(py::init<std::vector<std::uint32_t>>(), py::arg("images"))
      .def_static("identity", &hkc::Permutation::identity, py::arg("degree"))
      .def_static("from_cycles", &hkc::Permutation::from_cycles, py::arg("text"),
                  py::arg("min_degree") = 0)
      .def_property_readonly("degree", &hkc::Permutation::degree)
      .def_property_readonly("images", &hkc::Permutation::images)
      .def("__call__", &hkc::Permutation::operator(), py::arg("point"))
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("inverse", &hkc::Permutation::inverse)
      .def("is_identity", &hkc::Permutation::is_identity)
      .def("cycle_string", &hkc::Permutation::cycle_string)
      .def("cycle_type", &hkc::Permutation::cycle_type)
      .def("__repr__", [](const hkc::Permutation& p) {
        return "Permutation('" + p.cycle_string() + "', degree=" +
               std::to_string(p.degree()) + ")";
      });

  py::class_<hkc::PermutationGroup>(m, "PermutationGroup")
      .def(py::init<std::vector<hkc::Permutation>>(), py::arg("generators"))
      .def_property_readonly("degree", &hkc::PermutationGroup::degree)
      .def_property_readonly("generators", &hkc::PermutationGroup::generators)
      .def("order", &hkc::PermutationGroup::order, py::arg("cap") = hkc::default_element_cap)
      .def("elements", &hkc::PermutationGroup::elements,
           py::arg("cap") = hkc::default_element_cap)
      .def("contains", &hkc::PermutationGroup::contains, py::arg("p"),
           py::arg("cap") = hkc::default_element_cap)
      .def("__repr__", [](const hkc::PermutationGroup& g) {
        return "PermutationGroup(degree=" + std::to_string(g.degree()) + ", generators=" +
               std::to_string(g.generators().size()) + ")";
      });

  m.def("group", [](const std::string& text) {
    return hkc::resolve_group(hkc::parse_group_spec(text));
  }, py::arg("spec"), "Build a group from a description like 'Sn(5)' or 'gens:(0 1),(1 2)'");

  m.def("symmetric_group", &hkc::symmetric_group, py::arg("n"));
  m.def("alternating_group", &hkc::alternating_group, py::arg("n"));
  m.def("cyclic_group", &hkc::cyclic_group, py::arg("n"));
  m.def("dihedral_group", &hkc::dihedral_group, py::arg("n"));

  m.def("orbits_on_k_subsets",
        [](const hkc::PermutationGroup& g, std::size_t k, std::uint64_t budget) {
          hkc::KSubsetOrbitReport r = hkc::orbits_on_k_subsets(g, k, budget);
          py::dict out;
          out["k"] = r.k;
          out["subset_count"] = r.subset_count;
          out["orbit_count"] = r.orbit_count;
          out["representatives"] = r.representatives;
          out["orbit_sizes"] = r.orbit_sizes;
          return out;
        },
        py::arg("group"), py::arg("k"), py::arg("subset_budget") = hkc::default_subset_budget);

  m.def("homogeneity_profile",
        [](const hkc::PermutationGroup& g, std::uint64_t budget) {
          hkc::HomogeneityProfile p = hkc::homogeneity_profile(g, budget);
          py::dict out;
          out["orbit_counts"] = p.orbit_counts;
          out["all_transitive"] = p.all_transitive;
          return out;
        },
        py::arg("group"), py::arg("subset_budget") = hkc::default_subset_budget);

  m.def("commuting_pair_orbit_histogram", &hkc::commuting_pair_orbit_histogram,
        py::arg("group"), py::arg("cap") = hkc::default_element_cap);

  m.def("subgroup_scan", [](std::size_t n) {
    py::list out;
    for (const hkc::SubgroupScanEntry& e : hkc::subgroup_scan(n)) {
      py::dict item;
      item["generators"] = e.generators;
      item["order"] = e.order;
      item["conjugates"] = e.conjugates;
      item["orbit_counts"] = e.profile.orbit_counts;
      item["all_transitive"] = e.profile.all_transitive;
      out.append(std::move(item));
    }
    return out;
  }, py::arg("n"));

  py::class_<hkc::FiniteField>(m, "FiniteField")
      .def_static("make", &hkc::FiniteField::make, py::arg("p"), py::arg("e"))
      .def_property_readonly("characteristic", &hkc::FiniteField::characteristic)
      .def_property_readonly("extension_degree", &hkc::FiniteField::extension_degree)
      .def_property_readonly("size", &hkc::FiniteField::size)
      .def_property_readonly("modulus", &hkc::FiniteField::modulus)
      .def("add", &hkc::FiniteField::add)
      .def("sub", &hkc::FiniteField::sub)
      .def("neg", &hkc::FiniteField::neg)
      .def("mul", &hkc::FiniteField::mul)
      .def("inv", &hkc::FiniteField::inv)
      .def("pow", &hkc::FiniteField::pow)
      .def("frobenius", &hkc::FiniteField::frobenius)
      .def("primitive_element", &hkc::FiniteField::primitive_element)
      .def("element_string", &hkc::FiniteField::element_string);

  m.def("projective_group", [](const std::string& kind, std::uint32_t q) {
    return hkc::projective_group_generators(hkc::projective_kind_from_name(kind), q);
  }, py::arg("kind"), py::arg("q"), "kind is 'PGL2', 'PGammaL2', or 'AGL1'");

  m.def("k3_unit", [] { return graded_to_dict(hkc::GradedDims::k3_unit()); });

  m.def("kunneth_tensor", [](const py::dict& a, const py::dict& b) {
    return graded_to_dict(hkc::kunneth_tensor(graded_from_dict(a), graded_from_dict(b)));
  }, py::arg("a"), py::arg("b"));

  m.def("invariant_dims_subset_model",
        [](const hkc::PermutationGroup& g, std::uint64_t budget) {
          return graded_to_dict(hkc::invariant_dims_subset_model(g, budget));
        },
        py::arg("group"), py::arg("subset_budget") = hkc::default_subset_budget);

  m.def("burnside_invariant_dims",
        [](const hkc::PermutationGroup& g, std::uint64_t cap) {
          return graded_to_dict(hkc::burnside_invariant_dims(g, cap));
        },
        py::arg("group"), py::arg("cap") = hkc::default_element_cap);

  m.def("hyperkahler_unit_verdict",
        [](const hkc::PermutationGroup& g, std::uint64_t budget) {
          hkc::UnitVerdict v = hkc::hyperkahler_unit_verdict(g, budget);
          py::dict out;
          out["is_hyper_kahler"] = v.is_hyper_kahler;
          out["invariant_dims"] = graded_to_dict(v.invariant_dims);
          out["offending_degrees"] = v.offending_degrees;
          return out;
        },
        py::arg("group"), py::arg("subset_budget") = hkc::default_subset_budget);

  py::class_<hkc::HodgeDiamond>(m, "HodgeDiamond")
      .def_static("from_upper_rows", &hkc::HodgeDiamond::from_upper_rows, py::arg("rows"))
      .def_static("point", &hkc::HodgeDiamond::point)
      .def_static("prymian_P0", &hkc::HodgeDiamond::prymian_P0,
                  py::return_value_policy::reference)
      .def_static("prymian_P0_resolved", &hkc::HodgeDiamond::prymian_P0_resolved,
                  py::return_value_policy::reference)
      .def_static("parse_text", &hkc::HodgeDiamond::parse_text, py::arg("text"))
      .def_property_readonly("dim", &hkc::HodgeDiamond::dim)
      .def("h", &hkc::HodgeDiamond::h, py::arg("p"), py::arg("q"))
      .def("betti", &hkc::HodgeDiamond::betti)
      .def("euler_characteristic", &hkc::HodgeDiamond::euler_characteristic)
      .def("pyramid_text", &hkc::HodgeDiamond::pyramid_text)
      .def(py::self == py::self);

  py::class_<hkc::HochschildNumbers>(m, "HochschildNumbers")
      .def(py::init([](const std::string& variant, std::size_t d, const py::dict& dims) {
        std::map<int, long long> table;
        for (const auto& item : dims)
          table[item.first.cast<int>()] = item.second.cast<long long>();
        return hkc::HochschildNumbers(variant_from_name(variant), d, std::move(table));
      }), py::arg("variant"), py::arg("d"), py::arg("dims"))
      .def_property_readonly("variant", [](const hkc::HochschildNumbers& hh) {
        return hh.variant() == hkc::HochschildVariant::homology ? "homology" : "cohomology";
      })
      .def_property_readonly("dim", &hkc::HochschildNumbers::dim)
      .def("at", &hkc::HochschildNumbers::at, py::arg("k"))
      .def("table", [](const hkc::HochschildNumbers& hh) { return hochschild_to_dict(hh); })
      .def("euler", &hkc::HochschildNumbers::euler)
      .def(py::self == py::self);

  m.def("blow_up_opc4_points", &hkc::blow_up_opc4_points, py::arg("diamond"),
        py::arg("count"));
  m.def("hkr_homology", &hkc::hkr_homology, py::arg("diamond"));
  m.def("sod_subtract_exceptional", &hkc::sod_subtract_exceptional, py::arg("hh"),
        py::arg("count"));
  m.def("serre_shift_cohomology", &hkc::serre_shift_cohomology, py::arg("hh"), py::arg("d"));

  m.def("salamon_check", [](const hkc::HochschildNumbers& hh, std::size_t r) {
    hkc::SalamonCheck check = hkc::salamon_check(hh, r);
    py::dict out;
    out["holds"] = check.holds;
    out["lhs"] = check.lhs.get_str();
    out["rhs"] = check.rhs.get_str();
    return out;
  }, py::arg("hh"), py::arg("r"));

  m.def("guan_b2_admissible", [](long long b2, const std::string& mode) {
    return hkc::guan_b2_admissible(b2, guan_mode_from_name(mode));
  }, py::arg("b2"), py::arg("mode") = "strict");

  m.def("hk4_betti_from_hochschild", [](const hkc::HochschildNumbers& hh) {
    auto b = hkc::hk4_betti_from_hochschild(hh);
    return std::vector<long long>(b.begin(), b.end());
  }, py::arg("hh"));

  m.def("orbifold_euler",
        [](const hkc::PermutationGroup& g, long long e_base, std::uint64_t cap) {
          return to_py_int(hkc::orbifold_euler(g, mpz_class(static_cast<long>(e_base)), cap));
        },
        py::arg("group"), py::arg("e_base") = 24, py::arg("cap") = hkc::default_element_cap);

  m.def("goettsche_coefficients", [](std::size_t n_max, long long e_base) {
    py::list out;
    for (const mpz_class& c : hkc::goettsche_coefficients(n_max, e_base))
      out.append(to_py_int(c));
    return out;
  }, py::arg("n_max"), py::arg("e_base") = 24);

  m.def("category_euler_series",
        [](const std::string& family, std::size_t max_n, long long e_base,
           std::uint64_t cap) {
          hkc::EulerSeries s = hkc::category_euler_series(
              hkc::series_family_from_name(family), max_n, e_base, cap);
          py::list entries;
          for (const hkc::EulerSeriesEntry& e : s.entries) {
            py::dict item;
            item["n"] = e.n;
            item["label"] = e.label;
            item["euler"] = to_py_int(e.euler);
            entries.append(std::move(item));
          }
          py::dict out;
          out["family"] = hkc::series_family_name(s.family);
          out["e_base"] = s.e_base;
          out["entries"] = std::move(entries);
          out["truncated_at"] = s.truncated_at ? py::object(py::int_(*s.truncated_at))
                                               : py::object(py::none());
          return out;
        },
        py::arg("family"), py::arg("max_n"), py::arg("e_base") = 24,
        py::arg("cap") = hkc::default_element_cap);
}
