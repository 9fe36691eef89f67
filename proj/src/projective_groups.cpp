#include "hkc/projective_groups.hpp"

#include <algorithm>

#include "hkc/errors.hpp"

namespace hkc {

ProjectiveKind projective_kind_from_name(const std::string& name) {
  if (name == "PGL2") return ProjectiveKind::pgl2;
  if (name == "PGammaL2") return ProjectiveKind::pgammal2;
  if (name == "AGL1") return ProjectiveKind::agl1;
  throw Error(errc::unsupported_kind, "unknown projective family '" + name + "'");
}

const char* projective_kind_name(ProjectiveKind kind) {
  switch (kind) {
    case ProjectiveKind::pgl2: return "PGL2";
    case ProjectiveKind::pgammal2: return "PGammaL2";
    case ProjectiveKind::agl1: return "AGL1";
  }
  return "?";
}

namespace {

struct PointNumbering {
  FiniteField field;
  bool with_infinity = false;
  std::vector<std::uint32_t> index_of_element;  // field element -> point index
  std::vector<std::uint32_t> element_of_index;  // skips slot 0 when with_infinity

  static PointNumbering make(std::uint32_t q, bool with_infinity) {
    auto pe = prime_power_decompose(q);
    if (!pe)
      throw Error(errc::bad_parameter,
                  std::to_string(q) + " is not a prime power, no field of that size");
    PointNumbering pn{FiniteField::make(pe->first, pe->second)};
    pn.with_infinity = with_infinity;
    const std::uint32_t base = with_infinity ? 1 : 0;
    pn.index_of_element.assign(q, 0);
    pn.element_of_index.assign(base + q, 0);
    std::uint32_t lambda = pn.field.primitive_element();
    // 0, 1, lambda, lambda^2, ... fills every nonzero element exactly once.
    pn.index_of_element[0] = base;
    pn.element_of_index[base] = 0;
    std::uint32_t x = 1;
    for (std::uint32_t k = 0; k + 1 < q; ++k) {
      pn.index_of_element[x] = base + 1 + k;
      pn.element_of_index[base + 1 + k] = x;
      x = pn.field.mul(x, lambda);
    }
    return pn;
  }

  std::size_t degree() const { return element_of_index.size(); }

  // Builds the permutation of point indices induced by a field map, with the
  // projective conventions 1/0 = inf, 1/inf = 0, inf + c = inf, etc.
  template <typename MapsZero, typename MapsInf, typename MapsElt>
  Permutation induced(MapsZero on_zero, MapsInf on_inf, MapsElt on_elt) const {
    std::vector<std::uint32_t> img(degree());
    if (with_infinity) img[0] = on_inf();
    for (std::uint32_t a = 0; a < field.size(); ++a) {
      std::uint32_t from = index_of_element[a];
      img[from] = a == 0 ? on_zero() : index_of_element[on_elt(a)];
    }
    return Permutation(std::move(img));
  }
};

}  // namespace

PermutationGroup projective_group_generators(ProjectiveKind kind, std::uint32_t q) {
  const bool projective = kind != ProjectiveKind::agl1;
  PointNumbering pn = PointNumbering::make(q, projective);
  const FiniteField& F = pn.field;
  const std::uint32_t lambda = F.primitive_element();

  std::vector<Permutation> gens;
  // translation x -> x + 1 (fixes infinity)
  gens.push_back(pn.induced([&] { return pn.index_of_element[1]; },
                            [&] { return 0u; },
                            [&](std::uint32_t a) { return F.add(a, 1); }));
  // scaling x -> lambda * x (fixes 0 and infinity)
  gens.push_back(pn.induced([&] { return pn.index_of_element[0]; },
                            [&] { return 0u; },
                            [&](std::uint32_t a) { return F.mul(a, lambda); }));
  if (projective) {
    // inversion x -> 1/x, swapping 0 and infinity
    gens.push_back(pn.induced([&] { return 0u; },
                              [&] { return pn.index_of_element[0]; },
                              [&](std::uint32_t a) { return F.inv(a); }));
  }
  if (kind == ProjectiveKind::pgammal2) {
    // Frobenius x -> x^p (fixes 0, 1, infinity)
    gens.push_back(pn.induced([&] { return pn.index_of_element[0]; },
                              [&] { return 0u; },
                              [&](std::uint32_t a) { return F.frobenius(a); }));
  }
  return PermutationGroup(std::move(gens));
}

std::vector<std::string> projective_point_labels(ProjectiveKind kind, std::uint32_t q) {
  const bool projective = kind != ProjectiveKind::agl1;
  PointNumbering pn = PointNumbering::make(q, projective);
  std::vector<std::string> labels;
  if (projective) labels.push_back("inf");
  for (std::size_t i = labels.size(); i < pn.degree(); ++i)
    labels.push_back(pn.field.element_string(pn.element_of_index[i]));
  return labels;
}

}  // namespace hkc
