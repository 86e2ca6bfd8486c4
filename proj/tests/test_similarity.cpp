#include "doctest.h"
#include "support.hpp"

using namespace splitq;
using namespace splitq::testing;

namespace {

void check_family_solves(const SolutionFamily<Rational>& fam, const Q& a, const Q& b, std::mt19937_64& rng) {
  for (const Q& y : fixed_probes<Rational>()) CHECK(fam.at(y) * a == b * fam.at(y));
  for (int n = 0; n < 20; ++n) {
    const Q x = fam.at(random_quat(rng));
    CHECK(x * a == b * x);
  }
  CHECK(fam.dimension() == 4 - rank(t_matrix(a, b)));
}

// Random non-real a with K(a) = 0: a1 from a Pythagorean triple.
Q random_lightcone_imaginary(std::mt19937_64& rng) {
  for (;;) {
    const long m = random_int(rng, -4, 4);
    const long n = random_int(rng, -4, 4);
    if (m == 0 && n == 0) continue;
    const Rational s = random_rational(rng, 3, 2);
    if (s.sign() == 0) continue;
    const long sign = random_int(rng, 0, 1) == 0 ? 1 : -1;
    return {random_rational(rng), s * Rational(sign * (m * m + n * n)), s * Rational(m * m - n * n),
            s * Rational(2 * m * n)};
  }
}

}  // namespace

TEST_CASE("rank-2 family") {
  std::mt19937_64 rng(61);
  const Q a(0, 1, 2, 2);
  CHECK(k_form(a) == Rational(7));
  CHECK(solve_sim_rank2(a, a).at(Q::one()) == Q::one());

  const Q a1(1, 5, 3, 4);
  const Q b1(1, 13, 12, 5);
  CHECK(k_form(a1) == Rational(0));
  CHECK(k_form(b1) == Rational(0));
  const auto f1 = solve_sim_rank2(a1, b1);
  CHECK(f1.dimension() == 2);
  check_family_solves(f1, a1, b1, rng);

  const Q a2(1, 3, 2, 1);
  const Q b2(1, 3, 1, 2);
  const auto f2 = solve_sim_rank2(a2, b2);
  CHECK(f2.dimension() == 2);
  check_family_solves(f2, a2, b2, rng);

  CHECK_THROWS_AS(solve_sim_rank2(Q(1), b2), Error);
  CHECK_THROWS_AS(solve_sim_rank2(Q(2, 3, 2, 1), b2), Error);
}

TEST_CASE("rank-2 family equals the Moore-Penrose projector form") {
  // E - T+ T with T+ = (R(a') - L(b')) / (2 (|Im a|^2 + |Im b|^2)).
  std::mt19937_64 rng(62);
  for (int n = 0; n < 30; ++n) {
    const Q a = random_non_real(rng);
    const Q b = random_of_class(rng, classify(a)) * Rational(1);
    const Q g = random_of_class(rng, CausalClass::Timelike);
    const Q bb = g * a * inverse(g);
    const Mat4<Rational> t = t_matrix(a, bb);
    const Rational s = Rational(2) * (im_norm_sq(a) + im_norm_sq(bb));
    Mat4<Rational> tplus = right_matrix(prime(a)) - left_matrix(prime(bb));
    tplus = tplus * Mat4<Rational>::diagonal({Rational(1) / s, Rational(1) / s, Rational(1) / s, Rational(1) / s});
    CHECK(tplus == mat_mp_inverse(t));
    CHECK(solve_sim_rank2(a, bb).linear_map() == Mat4<Rational>::identity() - tplus * t);
    (void)b;
  }
}

TEST_CASE("rank-3 family") {
  std::mt19937_64 rng(63);
  const Q a(1, 5, 5, 2);
  const Q b(2, 1, 1, 3);
  const auto fam = solve_sim_rank3(a, b);
  CHECK(fam.dimension() == 1);
  const Q line(-3, 1, 1, 3);
  CHECK(fam.at(Q::one()) == Rational(2) * line);
  for (int n = 0; n < 20; ++n) {
    const Q x = fam.at(random_quat(rng));
    // x = r (-3 + i + j + 3k)
    const Rational r = x[1];
    CHECK(x == r * line);
  }
  check_family_solves(fam, a, b, rng);

  const Q a2(2, 1, 0, 1);
  const Q b2(1, 0, 0, 1);
  const auto fam2 = solve_sim_rank3(a2, b2);
  CHECK(fam2.dimension() == 1);
  check_family_solves(fam2, a2, b2, rng);

  CHECK_THROWS_AS(solve_sim_rank3(a, Q(1, 5, 3, 4)), Error);
  CHECK_THROWS_AS(solve_sim_rank3(Q(0, 1), Q(2, 0, 1)), Error);
}

TEST_CASE("x a = b x dispatch") {
  std::mt19937_64 rng(64);
  const auto none = solve_xa_bx(Q(0, 1), Q(0, 0, 1));
  CHECK(none.dimension() == 0);
  CHECK(rank(t_matrix(Q(0, 1), Q(0, 0, 1))) == 4);
  CHECK(solve_xa_bx(Q(1, 3, 2, 1), Q(1, 3, 1, 2)).dimension() == 2);
  CHECK(solve_xa_bx(Q(1, 5, 5, 2), Q(2, 1, 1, 3)).dimension() == 1);
  CHECK_THROWS_AS(solve_xa_bx(Q(3), Q(0, 1)), Error);

  for (int n = 0; n < 200; ++n) {
    const Q a = random_non_real(rng);
    Q b = random_non_real(rng);
    if (n % 3 == 0) {
      const Q g = random_of_class(rng, CausalClass::Spacelike);
      b = g * a * inverse(g);
    }
    const auto fam = solve_xa_bx(a, b);
    check_family_solves(fam, a, b, rng);
    CHECK(fam.dimension() == nullspace_basis(t_matrix(a, b)).size());
  }
}

TEST_CASE("similarity verdicts and witnesses") {
  const Q a(1, 5, 3, 4);
  const Q b(1, 13, 12, 5);
  const auto v = is_similar(a, b);
  REQUIRE(v.similar);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness * a == b * *v.witness);
  CHECK_FALSE(is_lightlike(*v.witness));

  CHECK_FALSE(is_similar(Q(0, 1), Q(0, 0, 1)).similar);
  const Q q(2, -1, 3, 5);
  const auto self = is_similar(q, q);
  CHECK(self.similar);
  CHECK(*self.witness == Q::one());
  CHECK(is_similar(Q(3), Q(3)).similar);
  CHECK_FALSE(is_similar(Q(3), Q(4)).similar);
  CHECK_FALSE(is_similar(Q(1), Q(1, 1, 1, 0)).similar);
}

TEST_CASE("similarity is an equivalence on random samples") {
  std::mt19937_64 rng(65);
  for (int n = 0; n < 20; ++n) {
    const Q a = random_non_real(rng);
    const Q g1 = random_of_class(rng, CausalClass::Timelike);
    const Q g2 = random_of_class(rng, CausalClass::Spacelike);
    const Q b = g1 * a * inverse(g1);
    const Q c = g2 * b * inverse(g2);
    CHECK(is_similar(a, a).similar);
    CHECK(is_similar(a, b).similar == is_similar(b, a).similar);
    CHECK(is_similar(a, b).similar);
    CHECK(is_similar(b, c).similar);
    CHECK(is_similar(a, c).similar);
    const Q d = random_non_real(rng);
    CHECK(is_similar(a, d).similar == is_similar(d, a).similar);
  }
}

TEST_CASE("conjugation preserves Re and K") {
  std::mt19937_64 rng(66);
  for (int n = 0; n < 50; ++n) {
    const Q a = random_quat(rng);
    const Q g = random_of_class(rng, n % 2 == 0 ? CausalClass::Timelike : CausalClass::Spacelike);
    const Q b = g * a * inverse(g);
    CHECK(re(b) == re(a));
    CHECK(k_form(b) == k_form(a));
  }
}

TEST_CASE("witness search is deterministic per seed") {
  const Q a(1, 5, 3, 4);
  const Q b(1, 13, 12, 5);
  CHECK(*is_similar(a, b, 7).witness == *is_similar(a, b, 7).witness);
}

TEST_CASE("canonical forms") {
  const Q a(1, 5, 3, 4);
  const auto cf = canonical_form(a);
  CHECK(cf.target == Q(1, 1, 1, 0));
  CHECK(cf.conjugator * a == cf.target * cf.conjugator);
  CHECK_FALSE(is_lightlike(cf.conjugator));

  const Q b(1, 3, 2, 1);
  const auto cb = canonical_form(b);
  CHECK(cb.target == Q(1, 2));
  CHECK(cb.conjugator * b == cb.target * cb.conjugator);

  const Q c(2, 0, 3, 4);  // K = 25
  const auto cc = canonical_form(c);
  CHECK(cc.target == Q(2, 0, 5));
  CHECK(cc.conjugator * c == cc.target * cc.conjugator);

  const CanonicalOutcome irr = canonical_form_exact_or_approx(Q(2, 1, 2, 2));
  CHECK(irr.escalated);
  const auto& approx = std::get<CanonicalForm<double>>(irr.form);
  CHECK(std::abs(approx.target[2] - std::sqrt(7.0)) < 1e-12);
  const AQ ad(2, 1, 2, 2);
  CHECK(distance(AQ(approx.conjugator * ad), AQ(approx.target * approx.conjugator)) <= 1e-9);
  CHECK(std::abs(i_norm(approx.conjugator)) > 1e-9);

  CHECK_THROWS_AS(canonical_form(Q(2, 1, 2, 2)), Error);
  CHECK_THROWS_AS(canonical_form(Q(5)), Error);
}

TEST_CASE("lightcone conjugation steps") {
  // Step 1 for a3 != 0: p = a1 - a2 + a3 i is the rank-2 family at y = 2 a1 (1 + k).
  std::mt19937_64 rng(67);
  for (int n = 0; n < 40; ++n) {
    const Q a = random_lightcone_imaginary(rng);
    REQUIRE(k_form(a) == Rational(0));
    const Q mid(a[0], a[1], -a[1]);
    if (a[3].sign() != 0) {
      const Q p(a[1] - a[2], a[3]);
      CHECK(i_norm(p) == Rational(2) * a[1] * (a[1] - a[2]));
      CHECK(p * a == mid * p);
      CHECK(solve_sim_rank2(a, mid).at(Rational(2) * a[1] * Q(1, 0, 0, 1)) == p);
    }
    if (a[1] != Rational(1) && a[1] != Rational(-1)) {
      const Q q(0, Rational(1) + a[1], Rational(1) - a[1]);
      const Q target(a[0], 1, 1);
      CHECK(q * mid == target * q);
      const Q y = (Rational(2) * (a[1] * a[1] + Rational(1)) / (a[1] + Rational(1))) * Q::unit_i();
      if (a[1] != Rational(-1)) CHECK(solve_sim_rank2(mid, target).at(y) == q);
    }
    const auto cf = canonical_form(a);
    CHECK(cf.target == Q(a[0], 1, 1));
    CHECK(cf.conjugator * a == cf.target * cf.conjugator);
    CHECK_FALSE(is_lightlike(cf.conjugator));
  }
  // a3 = 0 branches and a1 = +-1 branches.
  for (const Q& a : {Q(3, 2, 2, 0), Q(3, 2, -2, 0), Q(0, 1, 1, 0), Q(0, 1, -1, 0), Q(0, -1, 1, 0), Q(0, -1, -1, 0),
                     Q(1, 1, 0, 1), Q(1, -1, 0, -1), Q(1, -1, 0, 1)}) {
    const auto cf = canonical_form(a);
    CHECK(cf.target == Q(a[0], 1, 1));
    CHECK(cf.conjugator * a == cf.target * cf.conjugator);
    CHECK_FALSE(is_lightlike(cf.conjugator));
  }
}

TEST_CASE("canonical idempotence") {
  for (const Q& t : {Q(1, 1, 1, 0), Q(-2, 3), Q(0, 0, 4)}) {
    const auto cf = canonical_form(t);
    CHECK(cf.target == t);
    CHECK_FALSE(is_lightlike(cf.conjugator));
  }
}
