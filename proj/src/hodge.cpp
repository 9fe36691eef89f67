#include "hkc/hodge.hpp"

#include <algorithm>
#include <sstream>

#include "hkc/errors.hpp"

namespace hkc {

HodgeDiamond::HodgeDiamond(std::size_t d, std::vector<std::vector<long long>> h)
    : d_(d), h_(std::move(h)) {
  if (h_.size() != d_ + 1)
    throw Error(errc::wrong_dimension, "expected a (d+1) x (d+1) table of Hodge numbers");
  for (const auto& row : h_)
    if (row.size() != d_ + 1)
      throw Error(errc::wrong_dimension, "expected a (d+1) x (d+1) table of Hodge numbers");
  for (std::size_t p = 0; p <= d_; ++p)
    for (std::size_t q = 0; q <= d_; ++q) {
      if (h_[p][q] < 0)
        throw Error(errc::negative_dimension, "Hodge numbers must be nonnegative");
      if (h_[p][q] != h_[q][p])
        throw Error(errc::bad_parameter, "Hodge numbers must satisfy h(p,q) = h(q,p)");
      if (h_[p][q] != h_[d_ - p][d_ - q])
        throw Error(errc::bad_parameter, "Hodge numbers must satisfy h(p,q) = h(d-p,d-q)");
    }
}

HodgeDiamond HodgeDiamond::from_upper_rows(const std::vector<std::vector<long long>>& rows) {
  if (rows.empty()) throw Error(errc::wrong_dimension, "need at least the top row");
  const std::size_t d = rows.size() - 1;
  for (std::size_t k = 0; k <= d; ++k)
    if (rows[k].size() != k + 1)
      throw Error(errc::wrong_dimension,
                  "row " + std::to_string(k) + " must have " + std::to_string(k + 1) +
                      " entries");
  std::vector<std::vector<long long>> h(d + 1, std::vector<long long>(d + 1, 0));
  for (std::size_t k = 0; k <= d; ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      // rows[k][i] = h(k-i, i); mirror to the lower half by duality
      h[k - i][i] = rows[k][i];
      h[d - (k - i)][d - i] = rows[k][i];
    }
  return HodgeDiamond(d, std::move(h));
}

HodgeDiamond HodgeDiamond::point() { return from_upper_rows({{1}}); }

const HodgeDiamond& HodgeDiamond::prymian_P0() {
  static const HodgeDiamond diamond = from_upper_rows({
      {1},
      {0, 0},
      {1, 14, 1},
      {0, 0, 0, 0},
      {1, 14, 148, 14, 1},
  });
  return diamond;
}

const HodgeDiamond& HodgeDiamond::prymian_P0_resolved() {
  static const HodgeDiamond diamond = from_upper_rows({
      {1},
      {0, 0},
      {1, 42, 1},
      {0, 0, 0, 0},
      {1, 14, 176, 14, 1},
  });
  return diamond;
}

HodgeDiamond HodgeDiamond::parse_text(std::string_view text) {
  std::vector<std::vector<long long>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<long long> row;
    long long v;
    while (ls >> v) row.push_back(v);
    if (!ls.eof())
      throw Error(errc::parse_error, "diamond rows must contain only integers");
    rows.push_back(std::move(row));
  }
  return from_upper_rows(rows);
}

long long HodgeDiamond::h(std::size_t p, std::size_t q) const {
  if (p > d_ || q > d_)
    throw Error(errc::support_out_of_range, "Hodge index outside [0, d]");
  return h_[p][q];
}

std::vector<long long> HodgeDiamond::betti() const {
  std::vector<long long> b(2 * d_ + 1, 0);
  for (std::size_t p = 0; p <= d_; ++p)
    for (std::size_t q = 0; q <= d_; ++q) b[p + q] += h_[p][q];
  return b;
}

long long HodgeDiamond::euler_characteristic() const {
  long long e = 0;
  for (std::size_t p = 0; p <= d_; ++p)
    for (std::size_t q = 0; q <= d_; ++q) e += ((p + q) % 2 == 0 ? 1 : -1) * h_[p][q];
  return e;
}

std::string HodgeDiamond::pyramid_text() const {
  std::size_t width = 1;
  for (const auto& row : h_)
    for (long long v : row) width = std::max(width, std::to_string(v).size());
  std::string out;
  for (std::size_t k = 0; k <= d_; ++k) {
    std::string line((d_ - k) * (width + 1) / 2, ' ');
    for (std::size_t i = 0; i <= k; ++i) {
      std::string cell = std::to_string(h_[k - i][i]);
      line += std::string(width - cell.size(), ' ') + cell;
      if (i < k) line += std::string(1, ' ');
    }
    out += line;
    out += '\n';
  }
  return out;
}

HochschildNumbers::HochschildNumbers(HochschildVariant variant, std::size_t d,
                                     std::map<int, long long> dims)
    : variant_(variant), d_(d), dims_(std::move(dims)) {
  const int lo = variant_ == HochschildVariant::homology ? -static_cast<int>(d_) : 0;
  const int hi = variant_ == HochschildVariant::homology ? static_cast<int>(d_)
                                                         : 2 * static_cast<int>(d_);
  for (auto it = dims_.begin(); it != dims_.end();) {
    if (it->first < lo || it->first > hi)
      throw Error(errc::support_out_of_range,
                  "Hochschild degree " + std::to_string(it->first) + " outside [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
    if (it->second < 0)
      throw Error(errc::negative_dimension, "Hochschild dimensions must be nonnegative");
    it = it->second == 0 ? dims_.erase(it) : std::next(it);
  }
}

long long HochschildNumbers::at(int k) const {
  auto it = dims_.find(k);
  return it == dims_.end() ? 0 : it->second;
}

long long HochschildNumbers::euler() const {
  long long e = 0;
  for (const auto& [k, v] : dims_) e += (k % 2 == 0 ? 1 : -1) * v;
  return e;
}

HodgeDiamond blow_up_opc4_points(const HodgeDiamond& diamond, long long count) {
  if (diamond.dim() != 4)
    throw Error(errc::wrong_dimension, "the point blow-up model needs a fourfold");
  if (count < 0) throw Error(errc::bad_parameter, "cannot blow up a negative number of points");
  std::vector<std::vector<long long>> h(5, std::vector<long long>(5, 0));
  for (std::size_t p = 0; p <= 4; ++p)
    for (std::size_t q = 0; q <= 4; ++q) h[p][q] = diamond.h(p, q);
  // each exceptional divisor contributes one (k, k) class in the middle rows
  h[1][1] += count;
  h[2][2] += count;
  h[3][3] += count;
  return HodgeDiamond(4, std::move(h));
}

HochschildNumbers hkr_homology(const HodgeDiamond& diamond) {
  const int d = static_cast<int>(diamond.dim());
  std::map<int, long long> dims;
  for (int p = 0; p <= d; ++p)
    for (int q = 0; q <= d; ++q) dims[q - p] += diamond.h(p, q);
  return HochschildNumbers(HochschildVariant::homology, diamond.dim(), std::move(dims));
}

HochschildNumbers sod_subtract_exceptional(const HochschildNumbers& hh, long long count) {
  if (hh.variant() != HochschildVariant::homology)
    throw Error(errc::bad_parameter, "exceptional objects are removed from homology");
  if (count < 0) throw Error(errc::bad_parameter, "cannot remove a negative number of objects");
  if (hh.at(0) < count)
    throw Error(errc::negative_dimension,
                "removing " + std::to_string(count) + " exceptional objects from hh_0 = " +
                    std::to_string(hh.at(0)) + " would go negative");
  auto dims = hh.table();
  dims[0] = hh.at(0) - count;
  return HochschildNumbers(HochschildVariant::homology, hh.dim(), std::move(dims));
}

HochschildNumbers serre_shift_cohomology(const HochschildNumbers& hh, std::size_t d) {
  if (hh.variant() != HochschildVariant::homology)
    throw Error(errc::bad_parameter, "the Serre regrading starts from homology");
  std::map<int, long long> dims;
  for (const auto& [k, v] : hh.table()) {
    int shifted = k + static_cast<int>(d);
    if (shifted < 0 || shifted > 2 * static_cast<int>(d))
      throw Error(errc::support_out_of_range,
                  "homology degree " + std::to_string(k) + " cannot shift into [0, " +
                      std::to_string(2 * d) + "]");
    dims[shifted] = v;
  }
  return HochschildNumbers(HochschildVariant::cohomology, d, std::move(dims));
}

SalamonCheck salamon_check(const HochschildNumbers& hh, std::size_t r) {
  if (hh.variant() != HochschildVariant::cohomology)
    throw Error(errc::bad_parameter, "the Betti constraint reads cohomology degrees");
  if (r == 0) throw Error(errc::bad_parameter, "the constraint needs r >= 1");
  const int top = 4 * static_cast<int>(r);
  if (!hh.table().empty() && (hh.table().begin()->first < 0 || hh.table().rbegin()->first > top))
    throw Error(errc::support_out_of_range,
                "cohomology of a " + std::to_string(2 * r) + "-fold lives in [0, " +
                    std::to_string(top) + "]");
  SalamonCheck check;
  const long rr = static_cast<long>(r);
  for (long j = 1; j <= 2 * rr; ++j) {
    mpz_class term(3 * j * j - rr);
    term *= mpz_class(static_cast<long>(hh.at(static_cast<int>(2 * rr - j))));
    if (j % 2 == 0)
      check.lhs += term;
    else
      check.lhs -= term;
  }
  mpq_class half_r(mpz_class(rr), mpz_class(2));
  half_r.canonicalize();
  check.rhs = half_r * mpz_class(static_cast<long>(hh.at(static_cast<int>(2 * rr))));
  check.holds = check.lhs == check.rhs;
  return check;
}

bool guan_b2_admissible(long long b2, GuanMode mode) {
  if (b2 < 0) throw Error(errc::bad_parameter, "Betti numbers are nonnegative");
  const long long bound = mode == GuanMode::strict ? 7 : 8;
  return b2 <= bound || b2 == 23;
}

std::array<long long, 9> hk4_betti_from_hochschild(const HochschildNumbers& hh) {
  if (hh.variant() != HochschildVariant::cohomology)
    throw Error(errc::bad_parameter, "Betti extraction reads cohomology degrees");
  if (hh.dim() != 4)
    throw Error(errc::wrong_dimension, "Betti extraction needs a fourfold, support [0, 8]");
  for (int k = 0; k <= 8; ++k)
    if (hh.at(k) != hh.at(8 - k))
      throw Error(errc::not_palindromic,
                  "hh^" + std::to_string(k) + " != hh^" + std::to_string(8 - k));
  for (int k = 1; k <= 8; k += 2)
    if (hh.at(k) != 0)
      throw Error(errc::odd_degree_present,
                  "odd degree " + std::to_string(k) + " is nonzero");
  std::array<long long, 9> b{};
  for (int k = 0; k <= 8; ++k) b[static_cast<std::size_t>(k)] = hh.at(k);
  return b;
}

}  // namespace hkc
