#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hkc/perm_group.hpp"

namespace hkc {

// Dimensions of a nonnegatively graded vector space; zero dimensions are not
// stored. Odd degrees are legal but unused by the invariant-dimension model.
class GradedDims {
 public:
  GradedDims() = default;
  explicit GradedDims(std::map<int, long long> dims);

  // 1 in degrees 0 and 2: the building block whose n-th tensor power carries
  // the invariant-dimension model below.
  static GradedDims k3_unit();

  long long at(int degree) const;
  void set(int degree, long long dim);
  const std::map<int, long long>& table() const { return dims_; }
  long long total() const;
  int max_degree() const;  // 0 for the empty table

  friend bool operator==(const GradedDims&, const GradedDims&) = default;

 private:
  std::map<int, long long> dims_;
};

// Graded tensor product: out[d] = sum over i+j=d of a[i]*b[j].
GradedDims kunneth_tensor(const GradedDims& a, const GradedDims& b);
GradedDims kunneth_power(const GradedDims& a, std::size_t n);

// Dimension of the G-invariant part of k3_unit()^(tensor n) in each degree,
// where G permutes the n factors: degree 2k counts the orbits of G on
// k-element subsets of the factors (a basis of the degree-2k weight space is
// indexed by which factors contribute their degree-2 line).
GradedDims invariant_dims_subset_model(const PermutationGroup& g,
                                       std::uint64_t subset_budget = default_subset_budget);

// Same dimensions by averaging fixed subsets over the group elements
// (Burnside): dim at 2k = (1/|G|) sum over g of [z^k] prod over cycles of g
// of (1 + z^len). Needs the full element list.
GradedDims burnside_invariant_dims(const PermutationGroup& g,
                                   std::uint64_t cap = default_element_cap);

struct UnitVerdict {
  bool is_hyper_kahler = false;               // every stored degree has dim exactly 1
  GradedDims invariant_dims;
  std::vector<std::pair<int, long long>> offending_degrees;  // (degree, dim != 1)
};

// The invariant subalgebra is spanned by one class per degree 0, 2, ..., 2n
// exactly when G acts with a single orbit on k-subsets for every k; that is
// the truncated-polynomial shape C[t]/(t^(n+1)) characterizing the
// hyper-Kähler case.
UnitVerdict hyperkahler_unit_verdict(const PermutationGroup& g,
                                     std::uint64_t subset_budget = default_subset_budget);

}  // namespace hkc
