#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "splitq/error.hpp"
#include "splitq/scalar.hpp"

namespace splitq {

// Complex number over a scalar backend; only what the split-quaternion
// complex-pair form needs.
template <Scalar T>
struct Complex {
  T re{};
  T im{};

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const T& s, const Complex& a) { return {s * a.re, s * a.im}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const T n = b.norm_sq();
    const Complex num = a * b.conj();
    return {num.re / n, num.im / n};
  }
  friend bool operator==(const Complex&, const Complex&) = default;

  Complex conj() const { return {re, -im}; }
  T norm_sq() const { return re * re + im * im; }
};

enum class CausalClass { Spacelike, Timelike, Lightlike };

std::string_view to_string(CausalClass c);

// q = q0 + q1 i + q2 j + q3 k with i^2 = -1, j^2 = k^2 = 1, ij = k = -ji.
template <Scalar T>
class SplitQuaternion {
 public:
  SplitQuaternion() : c_{T(0), T(0), T(0), T(0)} {}
  SplitQuaternion(T q0, T q1 = T(0), T q2 = T(0), T q3 = T(0))  // NOLINT(google-explicit-constructor)
      : c_{std::move(q0), std::move(q1), std::move(q2), std::move(q3)} {}

  static SplitQuaternion one() { return {T(1)}; }
  static SplitQuaternion unit_i() { return {T(0), T(1)}; }
  static SplitQuaternion unit_j() { return {T(0), T(0), T(1)}; }
  static SplitQuaternion unit_k() { return {T(0), T(0), T(0), T(1)}; }

  const T& operator[](std::size_t n) const { return c_[n]; }
  const std::array<T, 4>& coeffs() const { return c_; }

  friend SplitQuaternion operator+(const SplitQuaternion& p, const SplitQuaternion& q) {
    return {p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3]};
  }
  friend SplitQuaternion operator-(const SplitQuaternion& p, const SplitQuaternion& q) {
    return {p[0] - q[0], p[1] - q[1], p[2] - q[2], p[3] - q[3]};
  }
  friend SplitQuaternion operator-(const SplitQuaternion& q) { return {-q[0], -q[1], -q[2], -q[3]}; }

  friend SplitQuaternion operator*(const SplitQuaternion& p, const SplitQuaternion& q) {
    return {p[0] * q[0] - p[1] * q[1] + p[2] * q[2] + p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] - p[2] * q[3] + p[3] * q[2],
            p[0] * q[2] + p[2] * q[0] - p[1] * q[3] + p[3] * q[1],
            p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1]};
  }
  friend SplitQuaternion operator*(const T& s, const SplitQuaternion& q) {
    return {s * q[0], s * q[1], s * q[2], s * q[3]};
  }
  friend SplitQuaternion operator*(const SplitQuaternion& q, const T& s) { return s * q; }
  friend SplitQuaternion operator/(const SplitQuaternion& q, const T& s) {
    return {q[0] / s, q[1] / s, q[2] / s, q[3] / s};
  }

  friend bool operator==(const SplitQuaternion&, const SplitQuaternion&) = default;

 private:
  std::array<T, 4> c_;
};

using ExactQuat = SplitQuaternion<Rational>;
using ApproxQuat = SplitQuaternion<double>;

template <Scalar T>
SplitQuaternion<T> conjugate(const SplitQuaternion<T>& q) {
  return {q[0], -q[1], -q[2], -q[3]};
}

// Flips only the i coefficient.
template <Scalar T>
SplitQuaternion<T> prime(const SplitQuaternion<T>& q) {
  return {q[0], -q[1], q[2], q[3]};
}

template <Scalar T>
T re(const SplitQuaternion<T>& q) {
  return q[0];
}

template <Scalar T>
SplitQuaternion<T> im(const SplitQuaternion<T>& q) {
  return {T(0), q[1], q[2], q[3]};
}

// I(q) = q conj(q) = q0^2 + q1^2 - q2^2 - q3^2.
template <Scalar T>
T i_norm(const SplitQuaternion<T>& q) {
  return q[0] * q[0] + q[1] * q[1] - q[2] * q[2] - q[3] * q[3];
}

// K(q) = Im(q)^2 = -q1^2 + q2^2 + q3^2.
template <Scalar T>
T k_form(const SplitQuaternion<T>& q) {
  return -q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
}

template <Scalar T>
T im_norm_sq(const SplitQuaternion<T>& q) {
  return q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
}

template <Scalar T>
bool is_zero(const SplitQuaternion<T>& q, Tolerance tol = {}) {
  return is_zero(q[0], tol) && is_zero(q[1], tol) && is_zero(q[2], tol) && is_zero(q[3], tol);
}

template <Scalar T>
bool is_real(const SplitQuaternion<T>& q, Tolerance tol = {}) {
  return is_zero(q[1], tol) && is_zero(q[2], tol) && is_zero(q[3], tol);
}

template <Scalar T>
bool approx_equal(const SplitQuaternion<T>& p, const SplitQuaternion<T>& q, Tolerance tol = {}) {
  return is_zero(SplitQuaternion<T>(p - q), tol);
}

template <Scalar T>
CausalClass classify(const SplitQuaternion<T>& q, Tolerance tol = {}) {
  switch (sign(i_norm(q), tol)) {
    case 0: return CausalClass::Lightlike;
    case 1: return CausalClass::Timelike;
    default: return CausalClass::Spacelike;
  }
}

template <Scalar T>
bool is_lightlike(const SplitQuaternion<T>& q, Tolerance tol = {}) {
  return is_zero(i_norm(q), tol);
}

// Two-sided inverse conj(q) / I(q); requires q not lightlike.
template <Scalar T>
SplitQuaternion<T> inverse(const SplitQuaternion<T>& q, Tolerance tol = {}) {
  const T n = i_norm(q);
  if (is_zero(n, tol)) throw Error(ErrorKind::NotInvertible, "inverse of a lightlike split quaternion");
  return conjugate(q) / n;
}

// q = z1 + z2 j with z1 = q0 + q1 i, z2 = q2 + q3 i.
template <Scalar T>
struct ComplexPair {
  Complex<T> z1;
  Complex<T> z2;
  friend bool operator==(const ComplexPair&, const ComplexPair&) = default;
};

template <Scalar T>
ComplexPair<T> to_complex_pair(const SplitQuaternion<T>& q) {
  return {{q[0], q[1]}, {q[2], q[3]}};
}

template <Scalar T>
SplitQuaternion<T> from_complex_pair(const Complex<T>& z1, const Complex<T>& z2) {
  return {z1.re, z1.im, z2.re, z2.im};
}

// Embeds a complex number as z.re + z.im i.
template <Scalar T>
SplitQuaternion<T> embed(const Complex<T>& z) {
  return {z.re, z.im};
}

template <Scalar T>
double euclidean_norm(const SplitQuaternion<T>& q) {
  double s = 0;
  for (const T& c : q.coeffs()) s += to_double(c) * to_double(c);
  return std::sqrt(s);
}

template <Scalar T, Scalar U>
SplitQuaternion<U> convert(const SplitQuaternion<T>& q) {
  if constexpr (std::is_same_v<T, U>) {
    return q;
  } else if constexpr (std::is_same_v<T, Rational>) {
    return {ScalarTraits<U>::from_rational(q[0]), ScalarTraits<U>::from_rational(q[1]),
            ScalarTraits<U>::from_rational(q[2]), ScalarTraits<U>::from_rational(q[3])};
  } else {
    return {U(q[0]), U(q[1]), U(q[2]), U(q[3])};
  }
}

// Renders in the literal grammar accepted by parse_quaternion, e.g. "1-1/2i+j".
template <Scalar T>
std::string to_string(const SplitQuaternion<T>& q) {
  static constexpr std::string_view units[] = {"", "i", "j", "k"};
  std::string out;
  for (std::size_t n = 0; n < 4; ++n) {
    if (is_zero(q[n], Tolerance{0.0})) continue;
    std::string coeff = to_string(q[n]);
    const bool negative = coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (!out.empty() || negative) out += negative ? "-" : "+";
    if (n == 0 || coeff != "1") out += coeff;
    out += units[n];
  }
  return out.empty() ? "0" : out;
}

template <Scalar T>
std::ostream& operator<<(std::ostream& os, const SplitQuaternion<T>& q) {
  return os << to_string(q);
}

}  // namespace splitq
