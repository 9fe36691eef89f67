#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hkc {

// F_{p^e} for prime p <= 13 and p^e <= 64. Elements are 0..q-1, read as base-p
// digit strings: value sum(c_i p^i) encodes the polynomial sum(c_i x^i) in the
// fixed quotient ring representative. The irreducible modulus per (p, e) is a
// fixed table (see finite_field.cpp); x itself is primitive for every tabled
// modulus, and for e = 1 the primitive element is the least primitive root.
class FiniteField {
 public:
  static FiniteField make(std::uint32_t p, std::uint32_t e);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t extension_degree() const { return e_; }
  std::uint32_t size() const { return q_; }

  // Modulus coefficients c_0..c_e, monic (c_e = 1); for e = 1 this is [0, 1],
  // i.e. plain arithmetic mod p.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;  // a != 0
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;
  std::uint32_t frobenius(std::uint32_t a) const { return pow(a, p_); }

  std::uint32_t primitive_element() const { return primitive_; }

  // "x^2+x+1"-style rendering of an element's polynomial form.
  std::string element_string(std::uint32_t a) const;

 private:
  FiniteField() = default;
  std::uint32_t p_ = 0, e_ = 0, q_ = 0, primitive_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> mul_table_;  // q*q lookup
  std::vector<std::uint32_t> inv_table_;
};

// (p, e) with q = p^e, or nullopt if q is not a prime power (q >= 2).
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power_decompose(std::uint64_t q);

}  // namespace hkc
