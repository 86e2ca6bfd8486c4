#pragma once

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <concepts>
#include <optional>
#include <string>
#include <string_view>

namespace splitq {

// Arbitrary-precision rational backed by GMP. Always kept in canonical form.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

  // Accepts "p", "p/q" and plain decimals such as "-2.125" (converted exactly).
  static Rational parse(std::string_view text);

  const mpq_class& get() const { return value_; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }
  bool is_integer() const { return value_.get_den() == 1; }
  std::string to_string() const;

 private:
  mpq_class value_;
};

// Exact square root when the value is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& x);

// Absolute tolerance used by the floating-point backend for every zero test.
struct Tolerance {
  double eps = 1e-9;
};

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "exact";
  static bool is_zero(const Rational& x, Tolerance) { return x.sign() == 0; }
  static double to_double(const Rational& x) { return x.to_double(); }
  static Rational from_rational(const Rational& x) { return x; }
  static std::string to_string(const Rational& x) { return x.to_string(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr std::string_view name = "approx";
  static bool is_zero(double x, Tolerance tol) { return std::abs(x) <= tol.eps; }
  static double to_double(double x) { return x; }
  static double from_rational(const Rational& x) { return x.to_double(); }
  static std::string to_string(double x);  // 12 significant digits
};

template <class T>
concept Scalar = requires(T a, T b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { ScalarTraits<T>::exact } -> std::convertible_to<bool>;
};

template <Scalar T>
bool is_zero(const T& x, Tolerance tol = {}) {
  return ScalarTraits<T>::is_zero(x, tol);
}

// -1, 0 or +1 with the tolerance band counted as zero.
template <Scalar T>
int sign(const T& x, Tolerance tol = {}) {
  if (is_zero(x, tol)) return 0;
  return x < T(0) ? -1 : 1;
}

template <Scalar T>
bool scalar_equal(const T& a, const T& b, Tolerance tol = {}) {
  return is_zero(T(a - b), tol);
}

template <Scalar T>
double to_double(const T& x) {
  return ScalarTraits<T>::to_double(x);
}

template <Scalar T>
std::string to_string(const T& x) {
  return ScalarTraits<T>::to_string(x);
}

}  // namespace splitq
