#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "splitq/matrices.hpp"
#include "splitq/pinv.hpp"
#include "splitq/split_quaternion.hpp"

namespace splitq {

// Affine family y -> constant + sum_k left_k * y * right_k.
template <Scalar T>
class SolutionFamily {
 public:
  struct Term {
    SplitQuaternion<T> left;
    SplitQuaternion<T> right;
  };

  SolutionFamily() = default;
  SolutionFamily(SplitQuaternion<T> constant, std::vector<Term> terms, Tolerance tol = {})
      : constant_(std::move(constant)), terms_(std::move(terms)), dimension_(rank(linear_map(), tol)) {}

  const SplitQuaternion<T>& constant() const { return constant_; }
  const std::vector<Term>& terms() const { return terms_; }
  // Dimension of the image of the linear part.
  std::size_t dimension() const { return dimension_; }

  SplitQuaternion<T> at(const SplitQuaternion<T>& y) const {
    SplitQuaternion<T> x = constant_;
    for (const Term& t : terms_) x = x + t.left * y * t.right;
    return x;
  }

  // Matrix of the linear part: sum_k L(left_k) R(right_k).
  Mat4<T> linear_map() const {
    Mat4<T> m;
    for (const Term& t : terms_) m = m + left_matrix(t.left) * right_matrix(t.right);
    return m;
  }

  // Images of the unit basis vectors at the pivot columns of the linear map:
  // a basis of the linear part's image.
  std::vector<SplitQuaternion<T>> basis(Tolerance tol = {}) const {
    const Mat4<T> m = linear_map();
    const linalg::Echelon<T> e = linalg::row_reduce(m.dense(), tol);
    std::vector<SplitQuaternion<T>> out;
    for (std::size_t p : e.pivots) out.push_back(from_vec(m.column(p)));
    return out;
  }

 private:
  SplitQuaternion<T> constant_;
  std::vector<Term> terms_;
  std::size_t dimension_ = 0;
};

// Family whose image is the span of `basis` (which must be linearly
// independent): x(y) = sum_m basis_m * coefficient_m(y). The coefficient
// extraction uses re(z) = (z - i z i + j z j + k z k) / 4 and
// y_m = re(w_m y) with w = (1, -i, j, k), so the family stays in
// left * y * right form.
template <Scalar T>
SolutionFamily<T> family_from_basis(const std::vector<SplitQuaternion<T>>& basis, Tolerance tol = {}) {
  using Q = SplitQuaternion<T>;
  const std::array<Q, 4> units = {Q::one(), Q::unit_i(), Q::unit_j(), Q::unit_k()};
  const std::array<Q, 4> extract = {Q::one(), -Q::unit_i(), Q::unit_j(), Q::unit_k()};
  const std::array<T, 4> signs = {T(1), T(-1), T(1), T(1)};
  const T quarter = T(1) / T(4);
  std::vector<typename SolutionFamily<T>::Term> terms;
  for (std::size_t m = 0; m < basis.size(); ++m) {
    for (std::size_t t = 0; t < 4; ++t) {
      terms.push_back({(quarter * signs[t]) * (units[t] * extract[m]), units[t] * basis[m]});
    }
  }
  return SolutionFamily<T>(Q(), std::move(terms), tol);
}

template <Scalar T>
SolutionFamily<T> zero_family() {
  return SolutionFamily<T>(SplitQuaternion<T>(), {});
}

template <Scalar T>
struct Solvable {
  SolutionFamily<T> family;
};

template <Scalar T>
struct Unsolvable {
  // Projector residual, nonzero exactly when the equation has no solution.
  SplitQuaternion<T> certificate;
};

template <Scalar T>
using SolveOutcome = std::variant<Solvable<T>, Unsolvable<T>>;

template <Scalar T>
bool is_solvable(const SolveOutcome<T>& o) {
  return std::holds_alternative<Solvable<T>>(o);
}

namespace detail {

template <Scalar T>
void require_lightlike_coefficient(const SplitQuaternion<T>& a, Tolerance tol) {
  if (is_zero(a, tol)) throw Error(ErrorKind::ZeroCoefficient, "coefficient is zero");
  if (!is_lightlike(a, tol)) {
    throw Error(ErrorKind::NotLightlike, "coefficient is invertible; divide by it directly");
  }
}

}  // namespace detail

// Solvability condition for a x b = d with a, b nonzero lightlike, in the
// complex-pair form (1 + (c2/conj(c1)) j) d (1 + (u2/u1) j) = 4 d.
template <Scalar T>
bool axb_condition(const SplitQuaternion<T>& a, const SplitQuaternion<T>& b, const SplitQuaternion<T>& d,
                   Tolerance tol = {}) {
  detail::require_lightlike_coefficient(a, tol);
  detail::require_lightlike_coefficient(b, tol);
  using Q = SplitQuaternion<T>;
  const auto [c1, c2] = to_complex_pair(a);
  const auto [u1, u2] = to_complex_pair(b);
  const Q lhs = (Q::one() + embed(c2 / c1.conj()) * Q::unit_j()) * d * (Q::one() + embed(u2 / u1) * Q::unit_j());
  return approx_equal(lhs, Q(T(4) * d), tol);
}

// Simplified particular solution conj(c1) d conj(u1) / (4 |c1|^2 |u1|^2),
// equal to a+ d b+ whenever a x b = d is solvable.
template <Scalar T>
SplitQuaternion<T> axb_simplified_constant(const SplitQuaternion<T>& a, const SplitQuaternion<T>& b,
                                           const SplitQuaternion<T>& d) {
  const auto c1 = to_complex_pair(a).z1;
  const auto u1 = to_complex_pair(b).z1;
  return embed(c1.conj()) * d * embed(u1.conj()) / (T(4) * c1.norm_sq() * u1.norm_sq());
}

// a x b = d: solvable iff a a+ d b+ b = d; then x = a+ d b+ + y - a+ a y b b+.
template <Scalar T>
SolveOutcome<T> solve_axb(const SplitQuaternion<T>& a, const SplitQuaternion<T>& b, const SplitQuaternion<T>& d,
                          Tolerance tol = {}) {
  detail::require_lightlike_coefficient(a, tol);
  detail::require_lightlike_coefficient(b, tol);
  using Q = SplitQuaternion<T>;
  const Q ap = mp_inverse(a, tol);
  const Q bp = mp_inverse(b, tol);
  const Q residual = a * ap * d * bp * b - d;
  if (!is_zero(residual, tol)) return Unsolvable<T>{residual};
  return Solvable<T>{SolutionFamily<T>(ap * d * bp, {{Q::one(), Q::one()}, {-(ap * a), b * bp}}, tol)};
}

// a x = 0: x = (1 - a+ a) y = (1 - (c2/c1) j) y / 2.
template <Scalar T>
SolutionFamily<T> solve_ax0(const SplitQuaternion<T>& a, Tolerance tol = {}) {
  detail::require_lightlike_coefficient(a, tol);
  using Q = SplitQuaternion<T>;
  return SolutionFamily<T>(Q(), {{Q(Q::one() - mp_inverse(a, tol) * a), Q::one()}}, tol);
}

// a x = d: solvable iff a a+ d = d; then x = a+ d + (1 - a+ a) y.
template <Scalar T>
SolveOutcome<T> solve_axd(const SplitQuaternion<T>& a, const SplitQuaternion<T>& d, Tolerance tol = {}) {
  detail::require_lightlike_coefficient(a, tol);
  using Q = SplitQuaternion<T>;
  const Q ap = mp_inverse(a, tol);
  const Q residual = a * ap * d - d;
  if (!is_zero(residual, tol)) return Unsolvable<T>{residual};
  return Solvable<T>{SolutionFamily<T>(ap * d, {{Q(Q::one() - ap * a), Q::one()}}, tol)};
}

// x a = d: solvable iff d a+ a = d; then x = d a+ + y (1 - a a+).
template <Scalar T>
SolveOutcome<T> solve_xad(const SplitQuaternion<T>& a, const SplitQuaternion<T>& d, Tolerance tol = {}) {
  detail::require_lightlike_coefficient(a, tol);
  using Q = SplitQuaternion<T>;
  const Q ap = mp_inverse(a, tol);
  const Q residual = d * ap * a - d;
  if (!is_zero(residual, tol)) return Unsolvable<T>{residual};
  return Solvable<T>{SolutionFamily<T>(d * ap, {{Q::one(), Q(Q::one() - a * ap)}}, tol)};
}

}  // namespace splitq
