#include "splitq/parse.hpp"

#include <cctype>
#include <string>

namespace splitq {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedQuaternion run() {
    std::array<Rational, 4> acc{Rational(0), Rational(0), Rational(0), Rational(0)};
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      parse_term(negative, acc);
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') throw ParseError(pos_, "'+', '-' or end of input");
      negative = peek() == '-';
      ++pos_;
    }
    return {ExactQuat(acc[0], acc[1], acc[2], acc[3]), has_decimal_};
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }
  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  std::string digits() {
    std::string out;
    while (!at_end() && is_digit(peek())) out += text_[pos_++];
    return out;
  }

  void parse_term(bool negative, std::array<Rational, 4>& acc) {
    skip_ws();
    const std::size_t start = pos_;
    Rational coeff(1);
    bool have_coeff = false;
    if (is_digit(peek()) || peek() == '.') {
      coeff = parse_coeff();
      have_coeff = true;
      skip_ws();
    }
    std::size_t unit = 0;
    switch (peek()) {
      case 'i': unit = 1; break;
      case 'j': unit = 2; break;
      case 'k': unit = 3; break;
      default: break;
    }
    if (unit != 0) {
      ++pos_;
    } else if (!have_coeff) {
      throw ParseError(start, "coefficient or unit (i, j, k)");
    }
    if (negative) coeff = -coeff;
    acc[unit] += coeff;
  }

  Rational parse_coeff() {
    const std::size_t start = pos_;
    std::string whole = digits();
    if (peek() == '.') {
      ++pos_;
      std::string frac = digits();
      if (whole.empty() && frac.empty()) throw ParseError(pos_, "digits");
      has_decimal_ = true;
      Rational value = Rational::parse((whole.empty() ? "0" : whole) + "." + (frac.empty() ? "0" : frac));
      return value * parse_exponent();
    }
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      std::string den = digits();
      if (den.empty()) throw ParseError(pos_, "integer denominator");
      if (den.find_first_not_of('0') == std::string::npos) throw ParseError(start, "nonzero denominator");
      return Rational::parse(whole + "/" + den);
    }
    Rational value = Rational::parse(whole);
    if (peek() == 'e' || peek() == 'E') {
      has_decimal_ = true;
      return value * parse_exponent();
    }
    return value;
  }

  // Optional [eE][+-]?digits suffix; returns 10^exp.
  Rational parse_exponent() {
    if (peek() != 'e' && peek() != 'E') return Rational(1);
    ++pos_;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    std::string exp = digits();
    if (exp.empty()) throw ParseError(pos_, "exponent digits");
    if (exp.size() > 4) throw ParseError(pos_, "exponent of at most 4 digits");
    Rational scale(1);
    for (int n = std::stoi(exp); n > 0; --n) scale *= Rational(10);
    return negative ? Rational(1) / scale : scale;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool has_decimal_ = false;
};

}  // namespace

ParsedQuaternion parse_quaternion(std::string_view text) { return Parser(text).run(); }

}  // namespace splitq
