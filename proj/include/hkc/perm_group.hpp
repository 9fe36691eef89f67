#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hkc/permutation.hpp"

namespace hkc {

constexpr std::uint64_t default_element_cap = 2'000'000;
constexpr std::uint64_t default_subset_budget = 1'000'000;

// binomial(n, k) in exact uint64; throws on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Finite permutation group given by generators on {0, ..., n-1}. Element
// enumeration is lazy and cached; copies share the cache.
class PermutationGroup {
 public:
  explicit PermutationGroup(std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  // Full closure of the generators, sorted by image vector. Throws
  // OrderExceedsCap if more than `cap` distinct elements appear.
  const std::vector<Permutation>& elements(std::uint64_t cap = default_element_cap) const;
  std::uint64_t order(std::uint64_t cap = default_element_cap) const;
  bool contains(const Permutation& p, std::uint64_t cap = default_element_cap) const;

  // Order if the closure has already been enumerated, otherwise nullopt.
  std::optional<std::uint64_t> cached_order() const;

 private:
  struct Cache;
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

struct KSubsetOrbitReport {
  std::size_t k = 0;
  std::uint64_t subset_count = 0;  // binomial(degree, k)
  std::uint64_t orbit_count = 0;
  // Lexicographically least member of each orbit, listed in increasing order,
  // aligned with orbit_sizes.
  std::vector<std::vector<std::uint32_t>> representatives;
  std::vector<std::uint64_t> orbit_sizes;
};

// Orbit decomposition of the k-element subsets of {0, ..., n-1} without
// enumerating group elements. Throws SubsetBudgetExceeded if binomial(n, k)
// exceeds the budget, DegreeTooLarge if k > n.
KSubsetOrbitReport orbits_on_k_subsets(const PermutationGroup& g, std::size_t k,
                                       std::uint64_t subset_budget = default_subset_budget);

struct HomogeneityProfile {
  std::vector<std::uint64_t> orbit_counts;  // index k = 0..n
  bool all_transitive = false;              // one orbit at every k
};

// Orbit counts on k-subsets for all k. Uses the complement bijection: only
// k <= n/2 is computed, the rest mirrored.
HomogeneityProfile homogeneity_profile(const PermutationGroup& g,
                                       std::uint64_t subset_budget = default_subset_budget);

struct ConjugacyClasses {
  std::vector<Permutation> representatives;  // least member of each class
  std::vector<std::uint64_t> sizes;
};

ConjugacyClasses conjugacy_classes(const PermutationGroup& g,
                                   std::uint64_t cap = default_element_cap);

std::vector<Permutation> centralizer(const PermutationGroup& g, const Permutation& a,
                                     std::uint64_t cap = default_element_cap);

// Number of orbits of the subgroup generated by {a, b} on the ground set.
std::size_t pair_orbit_count(const Permutation& a, const Permutation& b);

// Histogram over commuting pairs (a, b): key = number of <a, b>-orbits on
// points, value = number of pairs. Computed per conjugacy class (class rep's
// centralizer, weighted by class size); total count is |G| * #classes.
std::map<std::size_t, std::uint64_t> commuting_pair_orbit_histogram(
    const PermutationGroup& g, std::uint64_t cap = default_element_cap);

struct SubgroupScanEntry {
  std::vector<Permutation> generators;  // reduced, deterministic
  std::uint64_t order = 0;
  std::uint64_t conjugates = 0;  // subgroups in this conjugacy class
  HomogeneityProfile profile;
};

// Every subgroup of S_n up to conjugacy with its homogeneity profile, sorted
// by (order, generator list). Exhaustive, so restricted to n <= 5.
std::vector<SubgroupScanEntry> subgroup_scan(std::size_t n);

// Standard families. Degree n throughout; dihedral_group needs n >= 3.
PermutationGroup symmetric_group(std::size_t n);
PermutationGroup alternating_group(std::size_t n);
PermutationGroup cyclic_group(std::size_t n);
PermutationGroup dihedral_group(std::size_t n);

}  // namespace hkc
