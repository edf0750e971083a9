#include <gtest/gtest.h>

#include <random>

#include "lcgl2/curve_model.hpp"
#include "lcgl2/primality.hpp"
#include "support.hpp"

using namespace lcgl2;

namespace {

// Affine solutions of the long Weierstrass equation over F_ell plus infinity.
std::uint64_t brute_force_count(const CurveModel& m, unsigned long ell) {
  const Integer L(ell);
  std::array<Integer, 5> a;
  for (std::size_t i = 0; i < 5; ++i) a[i] = reduce_rational(m.coefficients()[i], L);
  std::uint64_t count = 1;
  for (unsigned long x = 0; x < ell; ++x)
    for (unsigned long y = 0; y < ell; ++y) {
      const Integer X(x), Y(y);
      const Integer lhs = Y * Y + a[0] * X * Y + a[2] * Y;
      const Integer rhs = X * X * X + a[1] * X * X + a[3] * X + a[4];
      if (mod(lhs - rhs, L) == 0) ++count;
    }
  return count;
}

Rational fraction(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

CurveModel random_model(std::mt19937_64& rng, long bound) {
  for (;;) {
    try {
      return CurveModel(Rational(test_support::random_integer(rng, -bound, bound)),
                        Rational(test_support::random_integer(rng, -bound, bound)),
                        Rational(test_support::random_integer(rng, -bound, bound)),
                        Rational(test_support::random_integer(rng, -bound, bound)),
                        Rational(test_support::random_integer(rng, -bound, bound)));
    } catch (const SingularCurve&) {
    }
  }
}

}  // namespace

TEST(KnownCurve, SeventeenA2) {
  const CurveModel e = CurveModel::split(0, 1, 17);
  EXPECT_EQ(e.j(), Rational(20346417, 289));
  EXPECT_EQ(e.discriminant(), Rational(1183744));
  const CurveModel m = transform(e, kTwoAdicChange);
  EXPECT_TRUE(m.integral());
  EXPECT_EQ(m.discriminant(), Rational(289));
  EXPECT_EQ(m.j(), e.j());
  EXPECT_EQ(two_model(0, 1, 17), m);
}

TEST(CurveModel, SingularRejected) {
  EXPECT_THROW(CurveModel(0, 0, 0, 0, 0), SingularCurve);
  EXPECT_THROW(CurveModel::split(1, 1, 2), SingularCurve);
  EXPECT_THROW(split_delta_and_reduced_c4(3, 3, 5), SingularCurve);
}

TEST(CurveModel, ReducedC4Examples) {
  EXPECT_EQ(split_delta_and_reduced_c4(0, 1, 17).c4_reduced, 273);
  EXPECT_EQ(split_delta_and_reduced_c4(0, 1, 2).c4_reduced, 3);
  EXPECT_EQ(CurveModel::split(0, 1, 17).c4(), Rational(16 * 273));
}

TEST(CurveModel, IdentityTransform) {
  std::mt19937_64 rng(2);
  const CurveModel m = random_model(rng, 50);
  EXPECT_EQ(transform(m, ChangeOfVariables{}), m);
}

TEST(CurveModelProperty, C4CubedMinusC6Squared) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const CurveModel m = random_model(rng, 1000);
    const auto& in = m.invariants();
    ASSERT_EQ(in.c4 * in.c4 * in.c4 - in.c6 * in.c6, 1728 * in.delta);
    ASSERT_EQ(4 * in.b8, in.b2 * in.b6 - in.b4 * in.b4);
  }
}

TEST(CurveModelProperty, SplitIdentities) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    const Integer a = test_support::random_integer(rng, -100000, 100000);
    const Integer b = test_support::random_integer(rng, -100000, 100000);
    const Integer c = test_support::random_integer(rng, -100000, 100000);
    if (a == b || b == c || a == c) continue;
    const CurveModel m = CurveModel::split(a, b, c);
    const SplitInvariants si = split_delta_and_reduced_c4(a, b, c);
    const Integer ab = a - b, bc = b - c, ca = c - a;
    ASSERT_EQ(m.discriminant(), Rational(16 * ab * ab * bc * bc * ca * ca));
    ASSERT_EQ(m.discriminant(), Rational(si.delta));
    ASSERT_EQ(m.c4(), Rational(16 * si.c4_reduced));
  }
}

TEST(CurveModelProperty, TransformLaws) {
  std::mt19937_64 rng(6);
  const auto random_change = [&] {
    Rational u = fraction(test_support::random_integer(rng, 1, 6), test_support::random_integer(rng, 1, 6));
    if (rng() % 2) u = -u;
    return ChangeOfVariables{u, fraction(test_support::random_integer(rng, -9, 9), 3),
                             fraction(test_support::random_integer(rng, -9, 9), 2),
                             fraction(test_support::random_integer(rng, -9, 9), 5)};
  };
  for (int i = 0; i < 300; ++i) {
    const CurveModel m = random_model(rng, 30);
    const ChangeOfVariables g = random_change(), h = random_change();
    const CurveModel mg = transform(m, g);
    ASSERT_EQ(transform(mg, h), transform(m, g.then(h)));
    ASSERT_EQ(mg.j(), m.j());
    const Rational u2 = g.u * g.u, u6 = u2 * u2 * u2;
    ASSERT_EQ(mg.discriminant() * u6 * u6, m.discriminant());
    ASSERT_EQ(mg.c4() * u2 * u2, m.c4());
  }
}

TEST(TwoModel, Examples) {
  const CurveModel m = two_model(64, 65, 81);
  EXPECT_TRUE(m.integral());
  EXPECT_TRUE(mpz_odd_p(m.discriminant().get_num_mpz_t()));
  EXPECT_THROW(two_model(1, 1, 17), PreconditionError);
  EXPECT_THROW(two_model(0, 2, 17), PreconditionError);
}

// For every (t1, t2, t3) the transformed model is integral with odd discriminant.
TEST(TwoModelProperty, GoodReductionAtTwo) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 1000; ++i) {
    const Integer t1 = test_support::random_integer(rng, -1000000, 1000000);
    const Integer t2 = test_support::random_integer(rng, -1000000, 1000000);
    const Integer t3 = test_support::random_integer(rng, -1000000, 1000000);
    const Integer a = 64 * t1, b = 1 + 64 * t2, c = 17 + 64 * t3;
    if (a == b || b == c || a == c) continue;
    const CurveModel m = two_model(a, b, c);
    ASSERT_TRUE(m.integral());
    ASSERT_TRUE(mpz_odd_p(m.discriminant().get_num_mpz_t()));
    ASSERT_EQ(m.discriminant() * 4096, CurveModel::split(a, b, c).discriminant());
    ASSERT_EQ(reduction_type(m, 2).kind, ReductionKind::good);
  }
}

TEST(Reduction, Examples) {
  EXPECT_EQ(reduction_type(two_model(0, 1, 17), 2).kind, ReductionKind::good);
  const ReductionType r17 = reduction_type(CurveModel::split(0, 1, 17), 17);
  EXPECT_EQ(r17.kind, ReductionKind::multiplicative);
  EXPECT_EQ(r17.v_delta, 2);
  ASSERT_TRUE(r17.v_c4.has_value());
  EXPECT_EQ(*r17.v_c4, 0);
  const CurveModel cm(0, 0, 0, -1, 0);  // y^2 = x^3 - x
  EXPECT_EQ(cm.discriminant(), Rational(64));
  EXPECT_EQ(reduction_type(cm, 5).kind, ReductionKind::good);
  // c4 = 48 has v_2 = 4 and v_2(64) = 6 < 12: minimal, additive.
  EXPECT_EQ(reduction_type(cm, 2).kind, ReductionKind::additive_or_undetermined);
  EXPECT_THROW(reduction_type(CurveModel(0, 0, 0, Rational(1, 3), 1), 3), PreconditionError);
}

TEST(PointCount, Examples) {
  const CurveModel e = CurveModel::split(0, 1, 17);
  EXPECT_EQ(count_points_mod_ell(e, 3), 4u);
  EXPECT_EQ(count_points_mod_ell(e, 5), brute_force_count(e, 5));
  EXPECT_THROW(count_points_mod_ell(e, 17), PreconditionError);
  EXPECT_THROW(count_points_mod_ell(e, 9), PreconditionError);
  EXPECT_THROW(count_points_mod_ell(e, 101, 100), PreconditionError);
}

TEST(PointCountProperty, MatchesBruteForceAndHasse) {
  std::mt19937_64 rng(9);
  const auto primes = primes_up_to(60);
  for (int i = 0; i < 150; ++i) {
    const CurveModel m = random_model(rng, 40);
    const Integer disc = m.discriminant().get_num();
    for (unsigned long ell : primes) {
      if (ell == 2 || divides(Integer(ell), disc)) continue;
      const std::uint64_t n = count_points_mod_ell(m, ell);
      ASSERT_EQ(n, brute_force_count(m, ell)) << "ell=" << ell;
      ASSERT_TRUE(within_hasse_bound(n, ell));
    }
  }
}

TEST(PointCountProperty, FullTwoTorsionDividesByFour) {
  std::mt19937_64 rng(10);
  const auto primes = primes_up_to(400);
  for (int i = 0; i < 100; ++i) {
    const Integer a = test_support::random_integer(rng, -500, 500);
    const Integer b = test_support::random_integer(rng, -500, 500);
    const Integer c = test_support::random_integer(rng, -500, 500);
    if (a == b || b == c || a == c) continue;
    const CurveModel m = CurveModel::split(a, b, c);
    for (unsigned long ell : primes) {
      if (ell == 2 || divides(Integer(ell), m.discriminant().get_num())) continue;
      const std::uint64_t n = count_points_mod_ell(m, ell);
      ASSERT_EQ(n % 4, 0u);
      ASSERT_TRUE(within_hasse_bound(n, ell));
    }
  }
}
