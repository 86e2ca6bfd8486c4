#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <variant>

#include "splitq/matrices.hpp"
#include "splitq/solvers.hpp"

namespace splitq {

namespace detail {

template <Scalar T>
void require_non_real(const SplitQuaternion<T>& a, const SplitQuaternion<T>& b, Tolerance tol) {
  if (is_real(a, tol) || is_real(b, tol)) throw Error(ErrorKind::RealInput, "inputs must not be real");
}

// Small random rational with numerator in [-9, 9] and denominator in [1, 4].
template <Scalar T>
T random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  return ScalarTraits<T>::from_rational(Rational(num(rng), den(rng)));
}

template <Scalar T>
SplitQuaternion<T> random_probe(std::mt19937_64& rng) {
  T q0 = random_scalar<T>(rng);
  T q1 = random_scalar<T>(rng);
  T q2 = random_scalar<T>(rng);
  T q3 = random_scalar<T>(rng);
  return {q0, q1, q2, q3};
}

}  // namespace detail

// Deterministic probe list tried before random probes when searching a
// solution family for an invertible element.
template <Scalar T>
std::array<SplitQuaternion<T>, 10> fixed_probes() {
  using Q = SplitQuaternion<T>;
  const Q one = Q::one();
  const Q i = Q::unit_i();
  const Q j = Q::unit_j();
  const Q k = Q::unit_k();
  return {one, i, j, k, one + i, one + j, one + k, i + j, i + k, j + k};
}

inline constexpr int kWitnessSearchCap = 1000;

// x a = b x with a0 = b0 and K(a) = K(b):
//   x = y - (y a a' - b y a' - b' y a + b' b y) / (2 (|Im a|^2 + |Im b|^2)).
template <Scalar T>
SolutionFamily<T> solve_sim_rank2(const SplitQuaternion<T>& a, const SplitQuaternion<T>& b, Tolerance tol = {}) {
  detail::require_non_real(a, b, tol);
  if (!scalar_equal(a[0], b[0], tol) || !scalar_equal(k_form(a), k_form(b), tol)) {
    throw Error(ErrorKind::CaseMismatch, "rank-2 case needs Re(a) = Re(b) and K(a) = K(b)");
  }
  using Q = SplitQuaternion<T>;
  const T s = T(1) / (T(2) * (im_norm_sq(a) + im_norm_sq(b)));
  const Q ap = prime(a);
  const Q bp = prime(b);
  const Q one = Q::one();
  return SolutionFamily<T>(Q(),
                           {{one, one},
                            {Q(-s * one), Q(a * ap)},
                            {Q(s * b), ap},
                            {Q(s * bp), a},
                            {Q(-s * (bp * b)), one}},
                           tol);
}

// x a = b x with a0 != b0 and det T(a, b) = 0. With p = I_b - I_a + 2 (a0 - b0) a,
// which is nonzero lightlike, and f = 1 - (p2 / conj(p1)) j for p = p1 + p2 j:
//   x = y f a - conj(b) y f.
template <Scalar T>
SolutionFamily<T> solve_sim_rank3(const SplitQuaternion<T>& a, const SplitQuaternion<T>& b, Tolerance tol = {}) {
  detail::require_non_real(a, b, tol);
  if (scalar_equal(a[0], b[0], tol)) throw Error(ErrorKind::CaseMismatch, "rank-3 case needs Re(a) != Re(b)");
  if (!is_zero(t_det(a, b), tol)) throw Error(ErrorKind::CaseMismatch, "rank-3 case needs det T(a, b) = 0");
  using Q = SplitQuaternion<T>;
  const T diff = a[0] - b[0];
  const Q p = Q(i_norm(b) - i_norm(a)) + (T(2) * diff) * a;
  if (is_zero(p, tol) || !is_lightlike(p, tol)) {
    throw Error(ErrorKind::CaseMismatch, "I_b - I_a + 2 (a0 - b0) a is not a nonzero zero divisor");
  }
  const auto [p1, p2] = to_complex_pair(p);
  const Q f = Q::one() - embed(p2 / p1.conj()) * Q::unit_j();
  return SolutionFamily<T>(Q(), {{Q::one(), Q(f * a)}, {Q(-conjugate(b)), f}}, tol);
}

// All solutions of x a = b x for non-real a, b; the zero family when T(a, b)
// is nonsingular.
template <Scalar T>
SolutionFamily<T> solve_xa_bx(const SplitQuaternion<T>& a, const SplitQuaternion<T>& b, Tolerance tol = {}) {
  detail::require_non_real(a, b, tol);
  switch (t_rank_case(a, b, tol)) {
    case RankCase::Rank2: return solve_sim_rank2(a, b, tol);
    case RankCase::Rank3: return solve_sim_rank3(a, b, tol);
    default: return zero_family<T>();
  }
}

template <Scalar T>
struct SimilarityVerdict {
  bool similar = false;
  // q with I(q) != 0 and q a = b q.
  std::optional<SplitQuaternion<T>> witness;
};

// First element of the family with nonzero I among the fixed probes and then
// up to kWitnessSearchCap seeded random probes.
template <Scalar T>
SplitQuaternion<T> find_invertible(const SolutionFamily<T>& family, std::uint64_t seed, Tolerance tol = {}) {
  for (const auto& y : fixed_probes<T>()) {
    const SplitQuaternion<T> x = family.at(y);
    if (!is_lightlike(x, tol)) return x;
  }
  std::mt19937_64 rng(seed);
  for (int n = 0; n < kWitnessSearchCap; ++n) {
    const SplitQuaternion<T> x = family.at(detail::random_probe<T>(rng));
    if (!is_lightlike(x, tol)) return x;
  }
  throw Error(ErrorKind::WitnessSearchExhausted, "no invertible element found in the solution family");
}

// a and b are similar iff Re(a) = Re(b) and K(a) = K(b) (both non-real), or
// a = b (both real). A real and a non-real element are never similar.
template <Scalar T>
SimilarityVerdict<T> is_similar(const SplitQuaternion<T>& a, const SplitQuaternion<T>& b, std::uint64_t seed = 0,
                                Tolerance tol = {}) {
  const bool a_real = is_real(a, tol);
  const bool b_real = is_real(b, tol);
  if (a_real || b_real) {
    if (a_real && b_real && approx_equal(a, b, tol)) return {true, SplitQuaternion<T>::one()};
    return {false, std::nullopt};
  }
  if (!scalar_equal(a[0], b[0], tol) || !scalar_equal(k_form(a), k_form(b), tol)) return {false, std::nullopt};
  return {true, find_invertible(solve_sim_rank2(a, b, tol), seed, tol)};
}

template <Scalar T>
struct CanonicalForm {
  // a0 + sqrt(K) j (K > 0), a0 + sqrt(-K) i (K < 0) or a0 + i + j (K = 0).
  SplitQuaternion<T> target;
  // q with I(q) != 0 and q a = target q.
  SplitQuaternion<T> conjugator;
};

namespace detail {

template <Scalar T>
T square_root(const T& x) {
  if constexpr (ScalarTraits<T>::exact) {
    auto r = exact_sqrt(x);
    if (!r) throw Error(ErrorKind::NotRepresentable, "square root is not rational");
    return *r;
  } else {
    return std::sqrt(x);
  }
}

// Conjugator taking a non-real a with K(a) = 0 to a0 + i + j in two steps:
// first to a0 + a1 i - a1 j, then to a0 + i + j.
template <Scalar T>
SplitQuaternion<T> lightcone_conjugator(const SplitQuaternion<T>& a, Tolerance tol) {
  using Q = SplitQuaternion<T>;
  const T& a1 = a[1];
  const T& a2 = a[2];
  const T& a3 = a[3];
  Q p = Q::one();
  if (!is_zero(a3, tol)) {
    p = Q(a1 - a2, a3);  // I(p) = 2 a1 (a1 - a2) != 0
  } else if (scalar_equal(a2, a1, tol)) {
    p = Q::unit_i();  // i (a1 i + a1 j) i^-1 = a1 i - a1 j
  }
  Q q;
  if (scalar_equal(a1, T(1), tol)) {
    q = Q::unit_i();
  } else if (scalar_equal(a1, T(-1), tol)) {
    q = Q::unit_j();
  } else {
    q = Q(T(0), T(1) + a1, T(1) - a1);  // I(q) = 4 a1
  }
  return q * p;
}

}  // namespace detail

template <Scalar T>
CanonicalForm<T> canonical_form(const SplitQuaternion<T>& a, std::uint64_t seed = 0, Tolerance tol = {}) {
  if (is_real(a, tol)) throw Error(ErrorKind::RealInput, "canonical form of a real element");
  using Q = SplitQuaternion<T>;
  const T k = k_form(a);
  switch (sign(k, tol)) {
    case 0: return {Q(a[0], T(1), T(1)), detail::lightcone_conjugator(a, tol)};
    case 1: {
      const Q target(a[0], T(0), detail::square_root(k));
      return {target, *is_similar(a, target, seed, tol).witness};
    }
    default: {
      const Q target(a[0], detail::square_root(T(-k)));
      return {target, *is_similar(a, target, seed, tol).witness};
    }
  }
}

struct CanonicalOutcome {
  std::variant<CanonicalForm<Rational>, CanonicalForm<double>> form;
  // True when K(a) is not a rational square and the computation fell back to
  // floating point.
  bool escalated = false;
};

// Exact canonical form when sqrt |K(a)| is rational, floating point otherwise.
CanonicalOutcome canonical_form_exact_or_approx(const ExactQuat& a, std::uint64_t seed = 0, Tolerance tol = {});

}  // namespace splitq
