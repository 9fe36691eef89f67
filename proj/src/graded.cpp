#include "hkc/graded.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hkc/errors.hpp"

namespace hkc {

GradedDims::GradedDims(std::map<int, long long> dims) : dims_(std::move(dims)) {
  for (auto it = dims_.begin(); it != dims_.end();) {
    if (it->first < 0)
      throw Error(errc::bad_parameter, "graded dimensions use nonnegative degrees");
    if (it->second < 0)
      throw Error(errc::negative_dimension,
                  "dimension at degree " + std::to_string(it->first) + " is negative");
    it = it->second == 0 ? dims_.erase(it) : std::next(it);
  }
}

GradedDims GradedDims::k3_unit() { return GradedDims({{0, 1}, {2, 1}}); }

long long GradedDims::at(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

void GradedDims::set(int degree, long long dim) {
  if (degree < 0) throw Error(errc::bad_parameter, "graded dimensions use nonnegative degrees");
  if (dim < 0)
    throw Error(errc::negative_dimension,
                "dimension at degree " + std::to_string(degree) + " is negative");
  if (dim == 0)
    dims_.erase(degree);
  else
    dims_[degree] = dim;
}

long long GradedDims::total() const {
  long long t = 0;
  for (const auto& [d, v] : dims_) t += v;
  return t;
}

int GradedDims::max_degree() const { return dims_.empty() ? 0 : dims_.rbegin()->first; }

GradedDims kunneth_tensor(const GradedDims& a, const GradedDims& b) {
  GradedDims out;
  for (const auto& [da, va] : a.table())
    for (const auto& [db, vb] : b.table()) out.set(da + db, out.at(da + db) + va * vb);
  return out;
}

GradedDims kunneth_power(const GradedDims& a, std::size_t n) {
  GradedDims out(std::map<int, long long>{{0, 1}});
  for (std::size_t i = 0; i < n; ++i) out = kunneth_tensor(out, a);
  return out;
}

GradedDims invariant_dims_subset_model(const PermutationGroup& g,
                                       std::uint64_t subset_budget) {
  HomogeneityProfile profile = homogeneity_profile(g, subset_budget);
  GradedDims out;
  for (std::size_t k = 0; k < profile.orbit_counts.size(); ++k)
    out.set(2 * static_cast<int>(k), static_cast<long long>(profile.orbit_counts[k]));
  return out;
}

GradedDims burnside_invariant_dims(const PermutationGroup& g, std::uint64_t cap) {
  const auto& els = g.elements(cap);
  const std::size_t n = g.degree();
  {
    // |G| * C(n, n/2) bounds every accumulated sum; keep it inside int64.
    unsigned __int128 worst = els.size();
    for (std::size_t i = 1; i <= n / 2 && worst <= (unsigned __int128)1 << 90; ++i)
      worst = worst * (n - n / 2 + i) / i;
    if (worst > static_cast<unsigned __int128>(std::numeric_limits<long long>::max()))
      throw Error(errc::bad_parameter,
                  "fixed-subset sums would overflow 64 bits at this degree and order");
  }
  // sums[k] accumulates, over all elements, the number of fixed k-subsets:
  // the coefficient of z^k in prod (1 + z^cycle_length).
  std::vector<long long> sums(n + 1, 0);
  std::vector<long long> poly, next;
  for (const Permutation& e : els) {
    poly.assign(n + 1, 0);
    poly[0] = 1;
    for (std::size_t len : e.cycle_type()) {
      next = poly;
      for (std::size_t k = 0; k + len <= n; ++k)
        if (poly[k] != 0) next[k + len] += poly[k];
      poly.swap(next);
    }
    for (std::size_t k = 0; k <= n; ++k) sums[k] += poly[k];
  }
  GradedDims out;
  const long long order = static_cast<long long>(els.size());
  for (std::size_t k = 0; k <= n; ++k) {
    if (sums[k] % order != 0)
      throw Error(errc::non_integral_result, "fixed-subset average is not an integer");
    out.set(2 * static_cast<int>(k), sums[k] / order);
  }
  return out;
}

UnitVerdict hyperkahler_unit_verdict(const PermutationGroup& g,
                                     std::uint64_t subset_budget) {
  UnitVerdict verdict;
  verdict.invariant_dims = invariant_dims_subset_model(g, subset_budget);
  for (const auto& [degree, dim] : verdict.invariant_dims.table())
    if (dim != 1) verdict.offending_degrees.emplace_back(degree, dim);
  verdict.is_hyper_kahler = verdict.offending_degrees.empty();
  return verdict;
}

}  // namespace hkc
