#pragma once

#include <string>
#include <utility>
#include <vector>

#include "splitq/matrices.hpp"
#include "splitq/split_quaternion.hpp"

namespace splitq {

// Moore-Penrose inverse of a = c1 + c2 j:
//   0                        if a = 0
//   conj(a) / I(a)           if I(a) != 0
//   (conj(c1) + c2 j) / (4 |c1|^2)   if a != 0 is lightlike.
// In coefficients conj(c1) + c2 j is prime(a), and |c1|^2 = a0^2 + a1^2, which is
// nonzero for every nonzero lightlike a because |c1| = |c2|.
template <Scalar T>
SplitQuaternion<T> mp_inverse(const SplitQuaternion<T>& a, Tolerance tol = {}) {
  if (is_zero(a, tol)) return {};
  const T n = i_norm(a);
  if (!is_zero(n, tol)) return conjugate(a) / n;
  const T c1_sq = a[0] * a[0] + a[1] * a[1];
  return prime(a) / (T(4) * c1_sq);
}

// Floating-point inputs with eps < |I(a)| <= 100 eps sit next to the branch
// switch of mp_inverse and are flagged.
template <Scalar T>
bool is_ill_conditioned(const SplitQuaternion<T>& a, Tolerance tol = {}) {
  if constexpr (ScalarTraits<T>::exact) {
    return false;
  } else {
    const double n = std::abs(to_double(i_norm(a)));
    return n > tol.eps && n <= 100.0 * tol.eps;
  }
}

template <Scalar T>
struct Projectors {
  SplitQuaternion<T> left;   // a a+ = (1 + (c2 / conj(c1)) j) / 2
  SplitQuaternion<T> right;  // a+ a = (1 + (c2 / c1) j) / 2
};

// The idempotents a a+ and a+ a of a nonzero lightlike a, from the complex-pair
// closed forms.
template <Scalar T>
Projectors<T> projectors(const SplitQuaternion<T>& a, Tolerance tol = {}) {
  if (is_zero(a, tol)) throw Error(ErrorKind::ZeroInput, "projectors of zero");
  if (!is_lightlike(a, tol)) {
    throw Error(ErrorKind::NotLightlike, "projectors of an invertible element are both 1");
  }
  const auto [c1, c2] = to_complex_pair(a);
  const T half = T(1) / T(2);
  const SplitQuaternion<T> one = SplitQuaternion<T>::one();
  const SplitQuaternion<T> j = SplitQuaternion<T>::unit_j();
  return {half * (one + embed(c2 / c1.conj()) * j), half * (one + embed(c2 / c1) * j)};
}

struct CheckResult {
  std::string name;
  bool pass = false;
};

struct PenroseReport {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
};

namespace detail {

template <Scalar T>
void penrose_equations(std::vector<CheckResult>& out, const std::string& tag, const Mat4<T>& m,
                       const Mat4<T>& x, Tolerance tol) {
  const Mat4<T> mx = m * x;
  const Mat4<T> xm = x * m;
  out.push_back({tag + "*" + tag + "+*" + tag + " = " + tag, approx_equal(Mat4<T>(mx * m), m, tol)});
  out.push_back({tag + "+*" + tag + "*" + tag + "+ = " + tag + "+", approx_equal(Mat4<T>(xm * x), x, tol)});
  out.push_back({"(" + tag + "*" + tag + "+)^T = " + tag + "*" + tag + "+", approx_equal(mx.transpose(), mx, tol)});
  out.push_back({"(" + tag + "+*" + tag + ")^T = " + tag + "+*" + tag, approx_equal(xm.transpose(), xm, tol)});
}

}  // namespace detail

// Checks that the quaternionic inverse agrees with the matrix Moore-Penrose
// inverse under the left/right representations: the eight Penrose equations
// for L(a), L(a+) and R(a), R(a+), the quaternion identities a a+ a = a and
// a+ a a+ = a+, and L(a)+ = L(a+), R(b)+ = R(b+), (L(a) R(b))+ = L(a+) R(b+)
// against the elimination oracle.
template <Scalar T>
PenroseReport check_penrose_coherence(const SplitQuaternion<T>& a, const SplitQuaternion<T>& b,
                                      Tolerance tol = {}) {
  PenroseReport report;
  const SplitQuaternion<T> ap = mp_inverse(a, tol);
  const SplitQuaternion<T> bp = mp_inverse(b, tol);
  const Mat4<T> la = left_matrix(a);
  const Mat4<T> lap = left_matrix(ap);
  const Mat4<T> ra = right_matrix(a);
  const Mat4<T> rap = right_matrix(ap);
  const Mat4<T> rb = right_matrix(b);
  const Mat4<T> rbp = right_matrix(bp);
  detail::penrose_equations(report.checks, "L(a)", la, lap, tol);
  detail::penrose_equations(report.checks, "R(a)", ra, rap, tol);
  report.checks.push_back({"a*a+*a = a", approx_equal(SplitQuaternion<T>(a * ap * a), a, tol)});
  report.checks.push_back({"a+*a*a+ = a+", approx_equal(SplitQuaternion<T>(ap * a * ap), ap, tol)});
  report.checks.push_back({"L(a)+ = L(a+)", approx_equal(mat_mp_inverse(la, tol), lap, tol)});
  report.checks.push_back({"R(a)+ = R(a+)", approx_equal(mat_mp_inverse(ra, tol), rap, tol)});
  report.checks.push_back({"R(b)+ = R(b+)", approx_equal(mat_mp_inverse(rb, tol), rbp, tol)});
  report.checks.push_back(
      {"(L(a)R(b))+ = L(a+)R(b+)", approx_equal(mat_mp_inverse(Mat4<T>(la * rb), tol), Mat4<T>(lap * rbp), tol)});
  return report;
}

template <Scalar T>
PenroseReport check_penrose_coherence(const SplitQuaternion<T>& a, Tolerance tol = {}) {
  return check_penrose_coherence(a, a, tol);
}

}  // namespace splitq
