#include "hkc/errors.hpp"

namespace hkc {

const char* errc_name(errc code) {
  switch (code) {
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::empty_generator_list: return "EmptyGeneratorList";
    case errc::order_exceeds_cap: return "OrderExceedsCap";
    case errc::subset_budget_exceeded: return "SubsetBudgetExceeded";
    case errc::degree_too_large: return "DegreeTooLarge";
    case errc::not_prime: return "NotPrime";
    case errc::field_too_large: return "FieldTooLarge";
    case errc::unsupported_kind: return "UnsupportedKind";
    case errc::wrong_dimension: return "WrongDimension";
    case errc::negative_dimension: return "NegativeDimension";
    case errc::support_out_of_range: return "SupportOutOfRange";
    case errc::not_palindromic: return "NotPalindromic";
    case errc::odd_degree_present: return "OddDegreePresent";
    case errc::non_integral_result: return "NonIntegralResult";
    case errc::parse_error: return "ParseError";
    case errc::unknown_family: return "UnknownFamily";
    case errc::bad_parameter: return "BadParameter";
  }
  return "UnknownError";
}

}  // namespace hkc
