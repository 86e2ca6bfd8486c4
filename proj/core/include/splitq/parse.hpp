#pragma once

#include <string_view>

#include "splitq/split_quaternion.hpp"

namespace splitq {

// Result of parsing a quaternion literal. Every literal has an exact rational
// value (decimals are converted exactly); `has_decimal` records whether the
// text used decimal notation, which selects the floating-point backend by
// default.
struct ParsedQuaternion {
  ExactQuat value;
  bool has_decimal = false;
};

// Grammar (whitespace ignored):
//   quat  := sign? term (('+'|'-') term)*
//   term  := coeff? unit?          (at least one of the two)
//   unit  := 'i' | 'j' | 'k'
//   coeff := integer | integer '/' integer | decimal
// Decimals may carry an exponent ("1e-05"). Repeated units accumulate.
ParsedQuaternion parse_quaternion(std::string_view text);

}  // namespace splitq
