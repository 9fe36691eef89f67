#include "hkc/orbifold.hpp"

#include <map>

#include "hkc/errors.hpp"

namespace hkc {

namespace {

mpz_class power_of(const mpz_class& base, std::size_t exp) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

}  // namespace

mpz_class orbifold_euler(const PermutationGroup& g, const mpz_class& e_base,
                         std::uint64_t cap) {
  ConjugacyClasses cc = conjugacy_classes(g, cap);
  const mpz_class order = static_cast<unsigned long>(g.order(cap));

  // Bucket centralizer elements by joint orbit count before exponentiating.
  mpz_class total = 0;
  for (std::size_t c = 0; c < cc.representatives.size(); ++c) {
    const Permutation& a = cc.representatives[c];
    std::map<std::size_t, std::uint64_t> orbit_hist;
    for (const Permutation& h : centralizer(g, a, cap)) ++orbit_hist[pair_orbit_count(a, h)];
    for (const auto& [orbits, count] : orbit_hist)
      total += power_of(e_base, orbits) * mpz_class(static_cast<unsigned long>(count)) *
               mpz_class(static_cast<unsigned long>(cc.sizes[c]));
  }
  mpz_class quotient, remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), total.get_mpz_t(),
              order.get_mpz_t());
  if (remainder != 0)
    throw Error(errc::non_integral_result,
                "commuting-pair sum is not divisible by the group order");
  return quotient;
}

std::vector<mpz_class> goettsche_coefficients(std::size_t n_max, long long e_base) {
  // prod over m of (1 - z^m)^(-E), with (1 - z^m)^(-E) expanded via the
  // generalized binomial series sum_j C(E - 1 + j, j) z^(m j); negative E
  // flips to a finite ordinary binomial expansion with signs.
  std::vector<mpz_class> coeffs(n_max + 1, 0);
  coeffs[0] = 1;
  for (std::size_t m = 1; m <= n_max; ++m) {
    std::vector<mpz_class> factor(n_max / m + 1, 0);
    factor[0] = 1;
    for (std::size_t j = 1; j < factor.size(); ++j) {
      // C(E - 1 + j, j) = C(E - 2 + j, j - 1) * (E - 1 + j) / j, valid with
      // sign for any integer E.
      factor[j] = factor[j - 1] * mpz_class(static_cast<long>(e_base - 1) + static_cast<long>(j));
      mpz_divexact_ui(factor[j].get_mpz_t(), factor[j].get_mpz_t(),
                      static_cast<unsigned long>(j));
    }
    std::vector<mpz_class> next(n_max + 1, 0);
    for (std::size_t i = 0; i <= n_max; ++i) {
      if (coeffs[i] == 0) continue;
      for (std::size_t j = 0; j < factor.size() && i + m * j <= n_max; ++j)
        next[i + m * j] += coeffs[i] * factor[j];
    }
    coeffs.swap(next);
  }
  return coeffs;
}

SeriesFamily series_family_from_name(const std::string& name) {
  if (name == "Sn") return SeriesFamily::symmetric;
  if (name == "An") return SeriesFamily::alternating;
  throw Error(errc::unknown_family, "unknown series family '" + name + "' (use Sn or An)");
}

const char* series_family_name(SeriesFamily family) {
  return family == SeriesFamily::symmetric ? "Sn" : "An";
}

EulerSeries category_euler_series(SeriesFamily family, std::size_t n_max, long long e_base,
                                  std::uint64_t cap) {
  EulerSeries series;
  series.family = family;
  series.e_base = e_base;
  const char prefix = family == SeriesFamily::symmetric ? 'S' : 'A';
  for (std::size_t n = 0; n <= n_max; ++n) {
    EulerSeriesEntry entry;
    entry.n = n;
    entry.label = std::string(1, prefix) + std::to_string(n);
    if (n == 0) {
      entry.euler = 1;
    } else {
      PermutationGroup group = family == SeriesFamily::symmetric ? symmetric_group(n)
                                                                 : alternating_group(n);
      try {
        entry.euler = orbifold_euler(group, mpz_class(static_cast<long>(e_base)), cap);
      } catch (const Error& e) {
        if (e.code() == errc::order_exceeds_cap) {
          series.truncated_at = n;
          break;
        }
        throw;
      }
    }
    series.entries.push_back(std::move(entry));
  }
  return series;
}

}  // namespace hkc
