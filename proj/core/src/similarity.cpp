#include "splitq/similarity.hpp"

namespace splitq {

CanonicalOutcome canonical_form_exact_or_approx(const ExactQuat& a, std::uint64_t seed, Tolerance tol) {
  const Rational k = k_form(a);
  if (k.sign() == 0 || exact_sqrt(k.sign() > 0 ? k : -k)) return {canonical_form(a, seed, tol), false};
  return {canonical_form(convert<Rational, double>(a), seed, tol), true};
}

}  // namespace splitq
