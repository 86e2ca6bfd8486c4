#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

#include "splitq/linalg.hpp"
#include "splitq/split_quaternion.hpp"

namespace splitq {

template <Scalar T>
using Vec4 = std::array<T, 4>;

// 4x4 matrix, row-major.
template <Scalar T>
class Mat4 {
 public:
  Mat4() { a_.fill(T(0)); }
  explicit Mat4(const std::array<T, 16>& entries) : a_(entries) {}

  static Mat4 identity() {
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i) m.a_[i * 5] = T(1);
    return m;
  }
  static Mat4 diagonal(const Vec4<T>& d) {
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i) m.a_[i * 5] = d[i];
    return m;
  }
  static Mat4 from(const linalg::Matrix<T>& m) {
    Mat4 out;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) out.a_[r * 4 + c] = m(r, c);
    return out;
  }

  const T& operator()(std::size_t r, std::size_t c) const { return a_[r * 4 + c]; }

  Vec4<T> column(std::size_t c) const { return {a_[c], a_[4 + c], a_[8 + c], a_[12 + c]}; }

  Mat4 transpose() const {
    Mat4 t;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) t.a_[c * 4 + r] = a_[r * 4 + c];
    return t;
  }

  linalg::Matrix<T> dense() const {
    linalg::Matrix<T> m(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = a_[r * 4 + c];
    return m;
  }

  friend Mat4 operator+(const Mat4& x, const Mat4& y) {
    Mat4 out;
    for (std::size_t n = 0; n < 16; ++n) out.a_[n] = x.a_[n] + y.a_[n];
    return out;
  }
  friend Mat4 operator-(const Mat4& x, const Mat4& y) {
    Mat4 out;
    for (std::size_t n = 0; n < 16; ++n) out.a_[n] = x.a_[n] - y.a_[n];
    return out;
  }
  friend Mat4 operator*(const Mat4& x, const Mat4& y) {
    Mat4 out;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        T s(0);
        for (std::size_t k = 0; k < 4; ++k) s = s + x.a_[r * 4 + k] * y.a_[k * 4 + c];
        out.a_[r * 4 + c] = s;
      }
    return out;
  }
  friend Vec4<T> operator*(const Mat4& m, const Vec4<T>& v) {
    Vec4<T> out;
    for (std::size_t r = 0; r < 4; ++r) {
      T s(0);
      for (std::size_t k = 0; k < 4; ++k) s = s + m.a_[r * 4 + k] * v[k];
      out[r] = s;
    }
    return out;
  }
  friend bool operator==(const Mat4&, const Mat4&) = default;

 private:
  std::array<T, 16> a_;
};

template <Scalar T>
Vec4<T> vec(const SplitQuaternion<T>& q) {
  return q.coeffs();
}

template <Scalar T>
SplitQuaternion<T> from_vec(const Vec4<T>& v) {
  return {v[0], v[1], v[2], v[3]};
}

template <Scalar T>
bool approx_equal(const Mat4<T>& a, const Mat4<T>& b, Tolerance tol = {}) {
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (!scalar_equal(a(r, c), b(r, c), tol)) return false;
  return true;
}

// vec(q x) = L(q) vec(x).
template <Scalar T>
Mat4<T> left_matrix(const SplitQuaternion<T>& q) {
  return Mat4<T>({q[0], -q[1], q[2], q[3],
                  q[1], q[0], q[3], -q[2],
                  q[2], q[3], q[0], -q[1],
                  q[3], -q[2], q[1], q[0]});
}

// vec(x q) = R(q) vec(x).
template <Scalar T>
Mat4<T> right_matrix(const SplitQuaternion<T>& q) {
  return Mat4<T>({q[0], -q[1], q[2], q[3],
                  q[1], q[0], -q[3], q[2],
                  q[2], -q[3], q[0], q[1],
                  q[3], q[2], -q[1], q[0]});
}

// F = diag(1, -1, -1, -1), so F vec(x) = vec(conj(x)).
template <Scalar T>
Mat4<T> conjugation_matrix() {
  return Mat4<T>::diagonal({T(1), T(-1), T(-1), T(-1)});
}

// T(a, b) = R(a) - L(b); its kernel is the solution set of x a = b x.
template <Scalar T>
Mat4<T> t_matrix(const SplitQuaternion<T>& a, const SplitQuaternion<T>& b) {
  return right_matrix(a) - left_matrix(b);
}

// S(a, b) = R(a) - L(b) F; its kernel is the solution set of x a = b conj(x).
template <Scalar T>
Mat4<T> s_matrix(const SplitQuaternion<T>& a, const SplitQuaternion<T>& b) {
  return right_matrix(a) - left_matrix(b) * conjugation_matrix<T>();
}

template <Scalar T>
std::size_t rank(const Mat4<T>& m, Tolerance tol = {}) {
  return linalg::rank(m.dense(), tol);
}

template <Scalar T>
T determinant(const Mat4<T>& m, Tolerance tol = {}) {
  return linalg::determinant(m.dense(), tol);
}

template <Scalar T>
std::vector<Vec4<T>> nullspace_basis(const Mat4<T>& m, Tolerance tol = {}) {
  std::vector<Vec4<T>> out;
  for (const auto& v : linalg::nullspace_basis(m.dense(), tol)) out.push_back({v[0], v[1], v[2], v[3]});
  return out;
}

// Independent Moore-Penrose oracle: full-rank factorization, not the
// quaternionic formula.
template <Scalar T>
Mat4<T> mat_mp_inverse(const Mat4<T>& m, Tolerance tol = {}) {
  return Mat4<T>::from(linalg::mp_inverse(m.dense(), tol));
}

// Case taxonomy for singular T(a, b) and S(a, b). `Degenerate` covers real
// inputs to T, which fall outside the non-real domain the rank statements
// describe, and the zero matrix S(0, 0); the rank is then taken from
// elimination. When I_a = I_b = 0 and conj(a) + b is a nonzero zero divisor,
// S(a, b) can drop to rank 2 (a = -1-i-j-k, b = -i-j), which Rank2b records.
enum class RankCase {
  NonSingular,
  Rank2,   // T: a0 = b0, K(a) = K(b)
  Rank3,   // T: a0 != b0, det = 0
  Rank1,   // S: conj(a) + b = 0
  Rank3a,  // S: I_a = I_b, I(conj(a) + b) != 0
  Rank3b,  // S: I_a = I_b, 0 != conj(a) + b lightlike
  Rank3c,  // S: I_a != I_b, 0 != conj(a) + b lightlike
  Rank2b,  // S: I_a = I_b = 0, 0 != conj(a) + b lightlike, and elimination finds rank 2
  Degenerate,
};

std::string_view to_string(RankCase c);

// Rank a case advertises; Degenerate has none (returns -1).
int advertised_rank(RankCase c);

// Closed-form determinant of T(a, b):
// (a0-b0)^4 - 2 (a0-b0)^2 (K(a)+K(b)) + (K(a)-K(b))^2.
template <Scalar T>
T t_det(const SplitQuaternion<T>& a, const SplitQuaternion<T>& b) {
  const T d = a[0] - b[0];
  const T d2 = d * d;
  const T ka = k_form(a);
  const T kb = k_form(b);
  return d2 * d2 - T(2) * d2 * (ka + kb) + (ka - kb) * (ka - kb);
}

// Closed-form determinant of S(a, b): (I_a - I_b) I(conj(a) + b).
template <Scalar T>
T s_det(const SplitQuaternion<T>& a, const SplitQuaternion<T>& b) {
  return (i_norm(a) - i_norm(b)) * i_norm(SplitQuaternion<T>(conjugate(a) + b));
}

using Spectrum = std::array<std::complex<double>, 4>;

namespace detail {
inline std::complex<double> csqrt(double radicand) { return std::sqrt(std::complex<double>(radicand, 0.0)); }
}  // namespace detail

// Eigenvalues a0 +- sqrt(K(a)) - (b0 +- sqrt(K(b))), complex when a K is negative.
template <Scalar T>
Spectrum t_eigenvalues(const SplitQuaternion<T>& a, const SplitQuaternion<T>& b) {
  const std::complex<double> sa = detail::csqrt(to_double(k_form(a)));
  const std::complex<double> sb = detail::csqrt(to_double(k_form(b)));
  const double a0 = to_double(a[0]);
  const double b0 = to_double(b[0]);
  return {a0 + sa - (b0 + sb), a0 + sa - (b0 - sb), a0 - sa - (b0 + sb), a0 - sa - (b0 - sb)};
}

// Eigenvalues a0 +- sqrt(K(a) + I_b) and
// a0 + b0 +- sqrt(K(a) + K(b) + 2 (a1 b1 - a2 b2 - a3 b3)).
template <Scalar T>
Spectrum s_eigenvalues(const SplitQuaternion<T>& a, const SplitQuaternion<T>& b) {
  const std::complex<double> s1 = detail::csqrt(to_double(T(k_form(a) + i_norm(b))));
  const T cross = a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
  const std::complex<double> s2 = detail::csqrt(to_double(T(k_form(a) + k_form(b) + T(2) * cross)));
  const double a0 = to_double(a[0]);
  const double b0 = to_double(b[0]);
  return {a0 + s1, a0 - s1, a0 + b0 + s2, a0 + b0 - s2};
}

template <Scalar T>
RankCase t_rank_case(const SplitQuaternion<T>& a, const SplitQuaternion<T>& b, Tolerance tol = {}) {
  if (is_real(a, tol) || is_real(b, tol)) {
    return rank(t_matrix(a, b), tol) == 4 ? RankCase::NonSingular : RankCase::Degenerate;
  }
  if (!is_zero(t_det(a, b), tol)) return RankCase::NonSingular;
  if (scalar_equal(a[0], b[0], tol)) return RankCase::Rank2;
  return RankCase::Rank3;
}

template <Scalar T>
RankCase s_rank_case(const SplitQuaternion<T>& a, const SplitQuaternion<T>& b, Tolerance tol = {}) {
  const SplitQuaternion<T> sum = conjugate(a) + b;
  const bool equal_norms = scalar_equal(i_norm(a), i_norm(b), tol);
  if (is_zero(sum, tol)) return is_zero(a, tol) ? RankCase::Degenerate : RankCase::Rank1;
  const bool sum_lightlike = is_lightlike(sum, tol);
  if (equal_norms) {
    if (!sum_lightlike) return RankCase::Rank3a;
    if (is_zero(i_norm(a), tol) && rank(s_matrix(a, b), tol) == 2) return RankCase::Rank2b;
    return RankCase::Rank3b;
  }
  return sum_lightlike ? RankCase::Rank3c : RankCase::NonSingular;
}

}  // namespace splitq
