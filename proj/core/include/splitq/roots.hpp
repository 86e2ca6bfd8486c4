#pragma once

#include <vector>

#include "splitq/split_quaternion.hpp"

namespace splitq {

// q^n for n >= 1. Lightlike q uses q^n = (2 Re q)^(n-1) q; everything else is
// square-and-multiply.
template <Scalar T>
SplitQuaternion<T> power(const SplitQuaternion<T>& q, unsigned n, Tolerance tol = {}) {
  if (n == 0) throw std::invalid_argument("power needs n >= 1");
  if (is_lightlike(q, tol)) {
    const T two_re = T(2) * q[0];
    T scale(1);
    for (unsigned k = 1; k < n; ++k) scale = scale * two_re;
    return scale * q;
  }
  SplitQuaternion<T> result = SplitQuaternion<T>::one();
  SplitQuaternion<T> base = q;
  for (unsigned e = n; e != 0; e >>= 1) {
    if ((e & 1U) != 0) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

// Nilpotents are q1 i + q2 j + q3 k with q1^2 - q2^2 - q3^2 = 0.
template <Scalar T>
bool is_nilpotent(const SplitQuaternion<T>& q, Tolerance tol = {}) {
  return is_zero(q[0], tol) && is_zero(T(q[1] * q[1] - q[2] * q[2] - q[3] * q[3]), tol);
}

// Idempotents are 0, 1 and 1/2 + q1 i + q2 j + q3 k with 1/4 + q1^2 - q2^2 - q3^2 = 0.
template <Scalar T>
bool is_idempotent(const SplitQuaternion<T>& q, Tolerance tol = {}) {
  if (is_zero(q, tol) || approx_equal(q, SplitQuaternion<T>::one(), tol)) return true;
  const T half = T(1) / T(2);
  return scalar_equal(q[0], half, tol) &&
         is_zero(T(half * half + q[1] * q[1] - q[2] * q[2] - q[3] * q[3]), tol);
}

// q = r (e^{i alpha} + e^{i beta} j) with r > 0 and angles in [0, 2 pi).
struct LightlikePolar {
  double r = 0;
  double alpha = 0;
  double beta = 0;
};

LightlikePolar to_polar(const ApproxQuat& q, Tolerance tol = {});
ApproxQuat from_polar(const LightlikePolar& p);

// All w with w^n = q for nonzero lightlike q and n >= 2. With
// rho = (r / (2 cos alpha)^(n-1))^(1/n) the roots are
//   rho (e^{i alpha} + e^{i beta} j)            if cos alpha > 0, or cos alpha < 0 and n odd
//   -rho (e^{i alpha} + e^{i beta} j)           additionally if cos alpha > 0 and n even
// and there are none when cos alpha = 0 or (cos alpha < 0 and n even).
std::vector<ApproxQuat> nth_roots(const ApproxQuat& q, unsigned n, Tolerance tol = {});

struct RootsOutcome {
  std::vector<ApproxQuat> roots;
  // Always true: root extraction runs in floating point.
  bool escalated = true;
};

RootsOutcome nth_roots(const ExactQuat& q, unsigned n, Tolerance tol = {});

}  // namespace splitq
