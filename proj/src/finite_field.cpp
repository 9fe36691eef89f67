#include "hkc/finite_field.hpp"

#include <string>

#include "hkc/errors.hpp"

namespace hkc {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Monic irreducible modulus (c_0..c_e) per extension, x primitive throughout.
std::vector<std::uint32_t> modulus_for(std::uint32_t p, std::uint32_t e) {
  if (p == 2) {
    switch (e) {
      case 2: return {1, 1, 1};           // x^2+x+1
      case 3: return {1, 1, 0, 1};        // x^3+x+1
      case 4: return {1, 1, 0, 0, 1};     // x^4+x+1
      case 5: return {1, 0, 1, 0, 0, 1};  // x^5+x^2+1
      case 6: return {1, 1, 0, 1, 1, 0, 1};  // x^6+x^4+x^3+x+1
    }
  }
  if (p == 3) {
    switch (e) {
      case 2: return {2, 1, 1};     // x^2+x+2
      case 3: return {1, 2, 0, 1};  // x^3+2x+1
    }
  }
  if (p == 5 && e == 2) return {2, 4, 1};  // x^2+4x+2
  if (p == 7 && e == 2) return {3, 6, 1};  // x^2+6x+3
  throw Error(errc::field_too_large, "no modulus tabled for p=" + std::to_string(p) +
                                         ", e=" + std::to_string(e));
}

std::uint32_t least_primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  for (std::uint32_t g = 2; g < p; ++g) {
    std::uint32_t x = 1;
    bool primitive = true;
    for (std::uint32_t k = 1; k < p - 1; ++k) {
      x = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * g) % p);
      if (x == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw Error(errc::not_prime, std::to_string(p) + " has no primitive root");
}

}  // namespace

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw Error(errc::not_prime, std::to_string(p) + " is not prime");
  if (p > 13) throw Error(errc::field_too_large, "characteristic above 13 is unsupported");
  if (e == 0) throw Error(errc::bad_parameter, "extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > 64) throw Error(errc::field_too_large, "field size above 64 is unsupported");
  }

  FiniteField f;
  f.p_ = p;
  f.e_ = e;
  f.q_ = static_cast<std::uint32_t>(q);
  f.modulus_ = e == 1 ? std::vector<std::uint32_t>{0, 1} : modulus_for(p, e);
  f.primitive_ = e == 1 ? least_primitive_root(p) : p;  // digit encoding of x

  // Schoolbook polynomial product reduced by the modulus, tabulated once.
  auto digits = [&](std::uint32_t a) {
    std::vector<std::uint32_t> d(e, 0);
    for (std::uint32_t i = 0; i < e; ++i, a /= p) d[i] = a % p;
    return d;
  };
  auto encode = [&](const std::vector<std::uint32_t>& d) {
    std::uint32_t v = 0;
    for (std::uint32_t i = e; i-- > 0;) v = v * p + d[i];
    return v;
  };
  f.mul_table_.assign(static_cast<std::size_t>(q) * q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    auto da = digits(a);
    for (std::uint32_t b = 0; b <= a; ++b) {
      auto db = digits(b);
      std::vector<std::uint32_t> prod(2 * e - 1, 0);
      for (std::uint32_t i = 0; i < e; ++i)
        for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (std::uint32_t d = 2 * e - 2; d + 1 > e; --d) {
        std::uint32_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        // x^d = -sum(modulus[i] x^(i + d - e)) since the modulus is monic
        for (std::uint32_t i = 0; i < e; ++i)
          prod[i + d - e] = (prod[i + d - e] + c * (p - f.modulus_[i])) % p;
      }
      prod.resize(e);
      std::uint32_t v = encode(prod);
      f.mul_table_[static_cast<std::size_t>(a) * q + b] = v;
      f.mul_table_[static_cast<std::size_t>(b) * q + a] = v;
    }
  }
  f.inv_table_.assign(q, 0);
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 1; b < q; ++b)
      if (f.mul_table_[static_cast<std::size_t>(a) * q + b] == 1) {
        f.inv_table_[a] = b;
        break;
      }
  return f;
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((a % p_) + (b % p_)) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

std::uint32_t FiniteField::neg(std::uint32_t a) const {
  std::uint32_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
  return mul_table_[static_cast<std::size_t>(a) * q_ + b];
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw Error(errc::bad_parameter, "zero has no inverse");
  return inv_table_[a];
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t k) const {
  std::uint32_t out = 1;
  while (k > 0) {
    if (k & 1) out = mul(out, a);
    a = mul(a, a);
    k >>= 1;
  }
  return out;
}

std::string FiniteField::element_string(std::uint32_t a) const {
  if (a == 0) return "0";
  std::string out;
  std::uint32_t v = a;
  std::vector<std::uint32_t> d(e_, 0);
  for (std::uint32_t i = 0; i < e_; ++i, v /= p_) d[i] = v % p_;
  for (std::uint32_t i = e_; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || d[i] > 1) out += std::to_string(d[i]);
    if (i >= 1) {
      if (d[i] > 1) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power_decompose(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    std::uint32_t e = 0;
    std::uint64_t m = q;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (m != 1) return std::nullopt;
    return std::make_pair(static_cast<std::uint32_t>(p), e);
  }
  return std::make_pair(static_cast<std::uint32_t>(q), 1u);  // q itself is prime
}

}  // namespace hkc
