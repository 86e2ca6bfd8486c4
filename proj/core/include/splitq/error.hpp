#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace splitq {

enum class ErrorKind {
  NotLightlike,
  ZeroInput,
  ZeroCoefficient,
  RealInput,
  CaseMismatch,
  WitnessSearchExhausted,
  NotRepresentable,
  NotInvertible,
  Parse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& expected);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace splitq
