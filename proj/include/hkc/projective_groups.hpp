#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hkc/finite_field.hpp"
#include "hkc/perm_group.hpp"

namespace hkc {

enum class ProjectiveKind { pgl2, pgammal2, agl1 };

ProjectiveKind projective_kind_from_name(const std::string& name);  // "PGL2" etc.
const char* projective_kind_name(ProjectiveKind kind);

// PGL2/PGammaL2 act on the projective line over F_q, numbered
//   0 = infinity, 1 = 0, 2 = 1, 2+k = lambda^k (k = 1..q-2)
// with lambda the field's primitive element; generators are t: x -> x+1,
// m: x -> lambda*x, i: x -> 1/x, plus the Frobenius x -> x^p for PGammaL2.
// AGL1 acts on F_q itself, numbered 0 = 0, 1 = 1, 1+k = lambda^k, with
// generators t and m. Degrees are q+1, q+1, q.
PermutationGroup projective_group_generators(ProjectiveKind kind, std::uint32_t q);

// Point labels in the numbering above ("inf", "0", "1", "x", ...), useful for
// cross-checking the embedding.
std::vector<std::string> projective_point_labels(ProjectiveKind kind, std::uint32_t q);

}  // namespace hkc
