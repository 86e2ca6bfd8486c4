#pragma once

// Shared generators and independent oracles for the test suites. Nothing here
// calls into the code paths it is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "splitq/splitq.hpp"

namespace splitq::testing {

using Q = ExactQuat;
using AQ = ApproxQuat;

inline Rational random_rational(std::mt19937_64& rng, long span = 9, long max_den = 5) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline long random_int(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Q random_quat(std::mt19937_64& rng, long span = 9, long max_den = 5) {
  return {random_rational(rng, span, max_den), random_rational(rng, span, max_den),
          random_rational(rng, span, max_den), random_rational(rng, span, max_den)};
}

inline Q random_int_quat(std::mt19937_64& rng, long span = 6) {
  return {Rational(random_int(rng, -span, span)), Rational(random_int(rng, -span, span)),
          Rational(random_int(rng, -span, span)), Rational(random_int(rng, -span, span))};
}

inline Q random_non_real(std::mt19937_64& rng) {
  for (;;) {
    Q q = random_quat(rng);
    if (!is_real(q)) return q;
  }
}

// Nonzero lightlike element with rational coefficients: c2 is c1 rotated by a
// Pythagorean unit complex, so |c1| = |c2|.
inline Q random_lightlike(std::mt19937_64& rng) {
  for (;;) {
    const Rational x = random_rational(rng);
    const Rational y = random_rational(rng);
    if (x.sign() == 0 && y.sign() == 0) continue;
    const long m = random_int(rng, -5, 5);
    const long n = random_int(rng, -5, 5);
    if (m == 0 && n == 0) continue;
    const Rational h(m * m + n * n);
    const Rational cr = Rational(m * m - n * n) / h;
    const Rational ci = Rational(2 * m * n) / h;
    return {x, y, x * cr - y * ci, x * ci + y * cr};
  }
}

inline Q random_of_class(std::mt19937_64& rng, CausalClass c) {
  if (c == CausalClass::Lightlike) return random_lightlike(rng);
  for (;;) {
    Q q = random_quat(rng);
    if (classify(q) == c) return q;
  }
}

// Product from the unit multiplication table i^2 = -j^2 = -k^2 = -1,
// ij = k = -ji, jk = -i = -kj, ki = j = -ik.
template <Scalar T>
SplitQuaternion<T> oracle_mul(const SplitQuaternion<T>& p, const SplitQuaternion<T>& q) {
  struct Entry {
    int sign;
    int unit;
  };
  static constexpr Entry table[4][4] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {1, 0}, {-1, 1}},
      {{1, 3}, {1, 2}, {1, 1}, {1, 0}},
  };
  std::array<T, 4> out{T(0), T(0), T(0), T(0)};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const Entry e = table[a][b];
      const T prod = p[a] * q[b];
      out[e.unit] = e.sign > 0 ? T(out[e.unit] + prod) : T(out[e.unit] - prod);
    }
  return {out[0], out[1], out[2], out[3]};
}

// Leibniz expansion over all 24 permutations.
template <Scalar T>
T oracle_det(const Mat4<T>& m) {
  std::array<int, 4> perm = {0, 1, 2, 3};
  T total(0);
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term(1);
    for (int r = 0; r < 4; ++r) term = term * m(r, perm[r]);
    total = inversions % 2 == 0 ? T(total + term) : T(total - term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

template <Scalar T>
bool penrose_holds(const Mat4<T>& m, const Mat4<T>& x) {
  const Mat4<T> mx = m * x;
  const Mat4<T> xm = x * m;
  return mx * m == m && xm * x == x && mx.transpose() == mx && xm.transpose() == xm;
}

// Laplace expansion of the minor on the given rows and columns.
template <Scalar T>
T oracle_minor(const Mat4<T>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() == 1) return m(rows[0], cols[0]);
  T total(0);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    std::vector<int> sub_cols = cols;
    sub_cols.erase(sub_cols.begin() + static_cast<long>(c));
    const T term = m(rows[0], cols[c]) * oracle_minor(m, sub_rows, sub_cols);
    total = c % 2 == 0 ? T(total + term) : T(total - term);
  }
  return total;
}

// Rank as the size of the largest nonvanishing minor.
template <Scalar T>
std::size_t oracle_rank(const Mat4<T>& m) {
  for (int k = 4; k >= 1; --k) {
    std::vector<std::vector<int>> subsets;
    for (int mask = 0; mask < 16; ++mask) {
      if (__builtin_popcount(mask) != k) continue;
      std::vector<int> s;
      for (int b = 0; b < 4; ++b)
        if ((mask >> b) & 1) s.push_back(b);
      subsets.push_back(s);
    }
    for (const auto& r : subsets)
      for (const auto& c : subsets)
        if (!is_zero(oracle_minor(m, r, c))) return static_cast<std::size_t>(k);
  }
  return 0;
}

inline double distance(const AQ& p, const AQ& q) { return euclidean_norm(AQ(p - q)); }

}  // namespace splitq::testing
