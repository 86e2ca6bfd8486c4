#include "splitq/error.hpp"

namespace splitq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotLightlike: return "NotLightlike";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::RealInput: return "RealInput";
    case ErrorKind::CaseMismatch: return "CaseMismatch";
    case ErrorKind::WitnessSearchExhausted: return "WitnessSearchExhausted";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Unknown";
}

ParseError::ParseError(std::size_t offset, const std::string& expected)
    : Error(ErrorKind::Parse, "parse error at offset " + std::to_string(offset) + ": expected " + expected),
      offset_(offset) {}

}  // namespace splitq
