#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hkc {

// Stable machine-readable failure codes. CLI and bindings map on these; the
// spelled-out name (errc_name) is what appears in JSON error reports.
enum class errc {
  degree_mismatch,
  empty_generator_list,
  order_exceeds_cap,
  subset_budget_exceeded,
  degree_too_large,
  not_prime,
  field_too_large,
  unsupported_kind,
  wrong_dimension,
  negative_dimension,
  support_out_of_range,
  not_palindromic,
  odd_degree_present,
  non_integral_result,
  parse_error,
  unknown_family,
  bad_parameter,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

// Parse failure with the byte offset into the input and the token set that
// would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected, const std::string& message)
      : Error(errc::parse_error, message),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace hkc
