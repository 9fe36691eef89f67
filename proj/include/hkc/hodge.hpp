#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hkc {

// Hodge numbers h(p, q) of a smooth projective d-fold, with the symmetries
// h(p, q) = h(q, p) and h(p, q) = h(d-p, d-q) enforced at construction.
class HodgeDiamond {
 public:
  HodgeDiamond(std::size_t d, std::vector<std::vector<long long>> h);

  // rows[k] = [h(k, 0), h(k-1, 1), ..., h(0, k)] for k = 0..d; the lower half
  // is filled in by duality.
  static HodgeDiamond from_upper_rows(const std::vector<std::vector<long long>>& rows);

  static HodgeDiamond point();

  // Fourfold with h(1,1) = 14, h(2,2) = 148, h(2,0) = h(4,0) = 1, odd rows
  // zero: the quotient stage of the built-in example variety.
  static const HodgeDiamond& prymian_P0();
  // Its 28-point resolution: h(1,1) = h(3,3) = 42, h(2,2) = 176.
  static const HodgeDiamond& prymian_P0_resolved();

  // Inverse of pyramid_text(): d+1 whitespace-separated rows, row k holding
  // k+1 entries.
  static HodgeDiamond parse_text(std::string_view text);

  std::size_t dim() const { return d_; }
  long long h(std::size_t p, std::size_t q) const;
  std::vector<long long> betti() const;  // b_0..b_2d, b_k = sum of h(p, k-p)
  long long euler_characteristic() const;
  std::string pyramid_text() const;  // upper half, d+1 centered rows

  friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;

 private:
  std::size_t d_;
  std::vector<std::vector<long long>> h_;  // h_[p][q]
};

enum class HochschildVariant { homology, cohomology };

// Hochschild dimensions hh_k indexed over [-d, d] (homology) or [0, 2d]
// (cohomology) for a d-dimensional target; zero entries are not stored.
class HochschildNumbers {
 public:
  HochschildNumbers(HochschildVariant variant, std::size_t d, std::map<int, long long> dims);

  HochschildVariant variant() const { return variant_; }
  std::size_t dim() const { return d_; }
  long long at(int k) const;
  const std::map<int, long long>& table() const { return dims_; }
  long long euler() const;  // alternating sum

  friend bool operator==(const HochschildNumbers&, const HochschildNumbers&) = default;

 private:
  HochschildVariant variant_;
  std::size_t d_;
  std::map<int, long long> dims_;
};

// Blowing up `count` isolated C^4/(+-1) points of a fourfold inserts an
// exceptional divisor per point: +count at h(1,1), h(2,2), h(3,3).
HodgeDiamond blow_up_opc4_points(const HodgeDiamond& diamond, long long count);

// Hochschild homology by HKR: hh_k = sum over q-p = k of h(p, q).
HochschildNumbers hkr_homology(const HodgeDiamond& diamond);

// Dropping `count` exceptional objects from a semiorthogonal decomposition
// removes `count` from hh_0 and nothing else.
HochschildNumbers sod_subtract_exceptional(const HochschildNumbers& hh, long long count);

// Serre-duality regrading from homology to cohomology for a d-Calabi-Yau
// category: hh^k = hh_(k-d).
HochschildNumbers serre_shift_cohomology(const HochschildNumbers& hh, std::size_t d);

struct SalamonCheck {
  bool holds = false;
  mpq_class lhs;  // sum over j=1..2r of (-1)^j (3j^2 - r) hh^(2r-j)
  mpq_class rhs;  // (r/2) hh^(2r)
};

// The hyper-Kähler Betti-number constraint, evaluated on Hochschild
// cohomology of a 2r-dimensional target in exact rationals.
SalamonCheck salamon_check(const HochschildNumbers& hh, std::size_t r);

enum class GuanMode {
  strict,     // b2 < 8 or b2 = 23
  inclusive,  // b2 <= 8 or b2 = 23
};

// Admissible second Betti numbers for irreducible hyper-Kähler fourfolds.
// The two modes differ only at b2 = 8, where the source bound is read either
// exclusively or inclusively; nothing here decides which reading is correct.
bool guan_b2_admissible(long long b2, GuanMode mode);

// Betti numbers b_0..b_8 of a hyper-Kähler fourfold candidate: the symplectic
// form identifies the tangent and cotangent bundles, so Hochschild cohomology
// collapses onto singular cohomology and b_k = hh^k. Input must be
// palindromic (hh^k = hh^(8-k)) with zero odd part.
std::array<long long, 9> hk4_betti_from_hochschild(const HochschildNumbers& hh);

}  // namespace hkc
