#include "hkc/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "hkc/errors.hpp"

namespace hkc {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw Error(errc::bad_parameter, "image vector is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t min_degree) {
  struct Cursor {
    std::string_view s;
    std::size_t pos = 0;
    void skip_ws() {
      while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool at_end() {
      skip_ws();
      return pos >= s.size();
    }
  } cur{text};

  struct Entry {
    std::uint32_t value;
    std::size_t offset;
  };
  std::vector<std::vector<Entry>> cycles;
  std::size_t max_index = 0;
  bool any = false;

  while (!cur.at_end()) {
    if (cur.s[cur.pos] != '(')
      throw ParseError(cur.pos, "'('", "expected '(' to open a cycle");
    ++cur.pos;
    std::vector<Entry> cycle;
    while (true) {
      cur.skip_ws();
      if (cur.pos >= cur.s.size())
        throw ParseError(cur.pos, "integer or ')'", "unterminated cycle");
      if (cur.s[cur.pos] == ')') {
        ++cur.pos;
        break;
      }
      if (cur.s[cur.pos] < '0' || cur.s[cur.pos] > '9')
        throw ParseError(cur.pos, "integer or ')'", "expected a point index");
      std::uint64_t value = 0;
      std::size_t start = cur.pos;
      while (cur.pos < cur.s.size() && cur.s[cur.pos] >= '0' && cur.s[cur.pos] <= '9') {
        value = value * 10 + (cur.s[cur.pos] - '0');
        if (value > 0xffffffffull)
          throw ParseError(start, "point index < 2^32", "point index out of range");
        ++cur.pos;
      }
      cycle.push_back({static_cast<std::uint32_t>(value), start});
      max_index = std::max<std::size_t>(max_index, value);
    }
    any = true;
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  if (!any) throw ParseError(cur.pos, "'('", "empty cycle expression");

  std::size_t degree = std::max<std::size_t>({min_degree, cycles.empty() ? 0 : max_index + 1, 1});
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> moved(degree, false);
  for (const auto& cycle : cycles) {
    for (const Entry& e : cycle) {
      if (moved[e.value])
        throw ParseError(e.offset, "distinct point indices",
                         "point " + std::to_string(e.value) + " appears twice");
      moved[e.value] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      img[cycle[i].value] = cycle[(i + 1) % cycle.size()].value;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw Error(errc::degree_mismatch, "composing permutations of different degrees");
  std::vector<std::uint32_t> img(degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = images_[rhs.images_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> img(degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[images_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    std::uint32_t j = static_cast<std::uint32_t>(i);
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(j);
      seen[j] = true;
      j = images_[j];
      first = false;
    } while (j != i);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    std::uint32_t j = static_cast<std::uint32_t>(i);
    do {
      seen[j] = true;
      j = images_[j];
      ++len;
    } while (j != i);
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

}  // namespace hkc
