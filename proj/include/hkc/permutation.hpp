#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hkc {

// Permutation of {0, ..., n-1}, stored as the image vector. Composition is
// function composition: (p * q)(i) = p(q(i)), i.e. q acts first.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);

  // Parses disjoint-cycle notation, e.g. "(0 1)(2 3 4)" or "()" for the
  // identity. Whitespace between tokens is ignored; fixed points may be
  // omitted. The degree is max(min_degree, largest index + 1, 1).
  static Permutation from_cycles(std::string_view text, std::size_t min_degree = 0);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  // Cycles ordered by smallest moved point; fixed points omitted; "()" for
  // the identity.
  std::string cycle_string() const;

  // Cycle lengths including fixed points, descending.
  std::vector<std::size_t> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<std::uint32_t> images_;
};

}  // namespace hkc
