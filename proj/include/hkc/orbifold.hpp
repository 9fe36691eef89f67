#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hkc/perm_group.hpp"

namespace hkc {

// Euler characteristic of the orbifold [X^n / G] for a base space of Euler
// characteristic e_base:
//   e = (1/|G|) sum over commuting pairs (a, b) of e_base^(orbits of <a, b>).
// Summation runs per conjugacy class (rep's centralizer, weighted by class
// size); the result is exact and always an integer.
mpz_class orbifold_euler(const PermutationGroup& g, const mpz_class& e_base,
                         std::uint64_t cap = default_element_cap);

// Coefficients 0..n_max of prod over m >= 1 of (1 - z^m)^(-e_base). With
// e_base = 24 these are the symmetric-group orbifold Euler numbers above.
std::vector<mpz_class> goettsche_coefficients(std::size_t n_max, long long e_base);

enum class SeriesFamily { symmetric, alternating };

SeriesFamily series_family_from_name(const std::string& name);  // "Sn" / "An"
const char* series_family_name(SeriesFamily family);

struct EulerSeriesEntry {
  std::size_t n = 0;
  std::string label;  // "S4", "A5", ...
  mpz_class euler;
};

struct EulerSeries {
  SeriesFamily family = SeriesFamily::symmetric;
  long long e_base = 24;
  std::vector<EulerSeriesEntry> entries;  // n = 0 up to the last completed n
  // First n whose group closure exceeded the element cap; the entries above
  // still cover everything below it.
  std::optional<std::size_t> truncated_at;
};

// Orbifold Euler characteristics of [X^n / G_n] for G_n = S_n or A_n,
// n = 0..n_max (n <= 1 degenerates to e_base^n with the trivial group).
EulerSeries category_euler_series(SeriesFamily family, std::size_t n_max, long long e_base,
                                  std::uint64_t cap = default_element_cap);

}  // namespace hkc
