#include "splitq/roots.hpp"

#include <cmath>
#include <numbers>

namespace splitq {

namespace {

double wrap_angle(double theta) {
  constexpr double two_pi = 2 * std::numbers::pi;
  double t = std::fmod(theta, two_pi);
  if (t < 0) t += two_pi;
  if (t >= two_pi) t = 0;
  return t;
}

}  // namespace

LightlikePolar to_polar(const ApproxQuat& q, Tolerance tol) {
  if (is_zero(q, tol)) throw Error(ErrorKind::ZeroInput, "polar form of zero");
  if (!is_lightlike(q, tol)) throw Error(ErrorKind::NotLightlike, "polar form needs I(q) = 0");
  return {std::hypot(q[0], q[1]), wrap_angle(std::atan2(q[1], q[0])), wrap_angle(std::atan2(q[3], q[2]))};
}

ApproxQuat from_polar(const LightlikePolar& p) {
  return {p.r * std::cos(p.alpha), p.r * std::sin(p.alpha), p.r * std::cos(p.beta), p.r * std::sin(p.beta)};
}

std::vector<ApproxQuat> nth_roots(const ApproxQuat& q, unsigned n, Tolerance tol) {
  if (n < 2) throw std::invalid_argument("nth_roots needs n >= 2");
  const LightlikePolar polar = to_polar(q, tol);
  const double cos_alpha = q[0] / polar.r;
  if (std::abs(cos_alpha) <= tol.eps) return {};
  const bool even = n % 2 == 0;
  if (cos_alpha < 0 && even) return {};
  const double rho = std::pow(polar.r / std::pow(2 * cos_alpha, static_cast<double>(n - 1)), 1.0 / n);
  // e^{i alpha} + e^{i beta} j = q / r
  const ApproxQuat w = (rho / polar.r) * q;
  if (cos_alpha > 0 && even) return {w, -w};
  return {w};
}

RootsOutcome nth_roots(const ExactQuat& q, unsigned n, Tolerance tol) {
  return {nth_roots(convert<Rational, double>(q), n, tol), true};
}

}  // namespace splitq
