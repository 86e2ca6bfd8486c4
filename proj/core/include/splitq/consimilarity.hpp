#pragma once

#include <optional>
#include <vector>

#include "splitq/matrices.hpp"
#include "splitq/solvers.hpp"

namespace splitq {

// All solutions of x a = b conj(x), i.e. the kernel of S(a, b). conj(a) + b
// is a solution exactly when I_a = I_b; when it is nonzero and the kernel is a
// line, it is used as the basis.
template <Scalar T>
SolutionFamily<T> solve_xa_bxbar(const SplitQuaternion<T>& a, const SplitQuaternion<T>& b, Tolerance tol = {}) {
  const auto kernel = nullspace_basis(s_matrix(a, b), tol);
  const SplitQuaternion<T> sum = conjugate(a) + b;
  std::vector<SplitQuaternion<T>> basis;
  if (kernel.size() == 1 && !is_zero(sum, tol) && scalar_equal(i_norm(a), i_norm(b), tol)) {
    basis.push_back(sum);
  } else {
    for (const auto& v : kernel) basis.push_back(from_vec(v));
  }
  return family_from_basis(basis, tol);
}

template <Scalar T>
struct ConsimilarityVerdict {
  bool consimilar = false;
  // x with I(x) != 0 and x a = b conj(x).
  std::optional<SplitQuaternion<T>> witness;
};

// Candidates used when conj(a) + b = 0; at least one has nonzero I for
// non-real a.
template <Scalar T>
std::array<SplitQuaternion<T>, 3> consimilarity_candidates(const SplitQuaternion<T>& a) {
  return {SplitQuaternion<T>(T(0), a[3], T(0), a[1]), SplitQuaternion<T>(T(0), a[2], a[1], T(0)),
          SplitQuaternion<T>(a[1], a[0])};
}

// Non-real a, b are consimilar iff conj(a) + b = 0, or I_a = I_b and
// I(conj(a) + b) != 0.
template <Scalar T>
ConsimilarityVerdict<T> is_consimilar(const SplitQuaternion<T>& a, const SplitQuaternion<T>& b, Tolerance tol = {}) {
  if (is_real(a, tol) || is_real(b, tol)) throw Error(ErrorKind::RealInput, "inputs must not be real");
  const SplitQuaternion<T> sum = conjugate(a) + b;
  if (is_zero(sum, tol)) {
    for (const auto& x : consimilarity_candidates(a)) {
      if (!is_lightlike(x, tol)) return {true, x};
    }
    // Unreachable for non-real a.
    return {false, std::nullopt};
  }
  if (scalar_equal(i_norm(a), i_norm(b), tol) && !is_lightlike(sum, tol)) return {true, sum};
  return {false, std::nullopt};
}

}  // namespace splitq
