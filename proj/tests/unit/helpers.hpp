#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "hkc/hodge.hpp"
#include "hkc/perm_group.hpp"

namespace testutil {

inline hkc::Permutation random_permutation(std::mt19937& rng, std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::shuffle(img.begin(), img.end(), rng);
  return hkc::Permutation(std::move(img));
}

inline hkc::PermutationGroup random_group(std::mt19937& rng, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> deg(1, max_degree);
  std::uniform_int_distribution<std::size_t> count(1, 3);
  const std::size_t degree = deg(rng);
  std::vector<hkc::Permutation> gens;
  const std::size_t n_gens = count(rng);
  for (std::size_t i = 0; i < n_gens; ++i) gens.push_back(random_permutation(rng, degree));
  return hkc::PermutationGroup(std::move(gens));
}

// Orbit count on k-subsets by averaging fixed subsets over the whole group
// (Burnside), enumerating subsets as bitmasks. Degree must stay below 20 or
// so; an independent path from the BFS used by the library.
inline std::uint64_t orbit_count_by_burnside(const hkc::PermutationGroup& g, std::size_t k) {
  const std::size_t n = g.degree();
  const auto& els = g.elements();
  std::uint64_t total = 0;
  for (const hkc::Permutation& e : els) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
      std::uint32_t image = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) image |= 1u << e(static_cast<std::uint32_t>(i));
      if (image == mask) ++total;
    }
  }
  return total / els.size();
}

// One mask sweep for every k at once; same averaging argument as above.
inline std::vector<std::uint64_t> orbit_counts_by_burnside(const hkc::PermutationGroup& g) {
  const std::size_t n = g.degree();
  const auto& els = g.elements();
  std::vector<std::uint64_t> totals(n + 1, 0);
  for (const hkc::Permutation& e : els) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::uint32_t image = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) image |= 1u << e(static_cast<std::uint32_t>(i));
      if (image == mask) ++totals[static_cast<std::size_t>(__builtin_popcount(mask))];
    }
  }
  for (std::uint64_t& t : totals) t /= els.size();
  return totals;
}

// Orbifold Euler characteristic by the literal double loop over commuting
// pairs; quadratic in the order, for cross-checking the class/centralizer
// path on groups of order up to a few thousand.
inline mpz_class orbifold_euler_double_loop(const hkc::PermutationGroup& g, long e_base) {
  const auto& els = g.elements();
  mpz_class total = 0;
  for (const hkc::Permutation& a : els)
    for (const hkc::Permutation& b : els) {
      if (!(a * b == b * a)) continue;
      mpz_class term;
      mpz_pow_ui(term.get_mpz_t(), mpz_class(e_base).get_mpz_t(),
                 static_cast<unsigned long>(hkc::pair_orbit_count(a, b)));
      total += term;
    }
  mpz_class order(static_cast<unsigned long>(els.size()));
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), total.get_mpz_t(), order.get_mpz_t());
  if (r != 0) throw std::runtime_error("double-loop sum not divisible by the order");
  return q;
}

// Random d-fold Hodge diamond respecting both symmetries: fill one value per
// orbit of (p,q) -> (q,p), (p,q) -> (d-p,d-q).
inline hkc::HodgeDiamond random_diamond(std::mt19937& rng, std::size_t d,
                                        long long max_entry = 30) {
  std::uniform_int_distribution<long long> val(0, max_entry);
  std::vector<std::vector<long long>> h(d + 1, std::vector<long long>(d + 1, -1));
  for (std::size_t p = 0; p <= d; ++p)
    for (std::size_t q = 0; q <= d; ++q) {
      if (h[p][q] >= 0) continue;
      long long v = val(rng);
      h[p][q] = h[q][p] = h[d - p][d - q] = h[d - q][d - p] = v;
    }
  return hkc::HodgeDiamond(d, std::move(h));
}

}  // namespace testutil
