#include <gtest/gtest.h>

#include "trilin/polynomial.hpp"

using namespace trilin;

namespace {
GaussianRational gr(long nr, long dr, long ni = 0, long di = 1) {
  return GaussianRational::make(nr, dr, ni, di);
}
}  // namespace

TEST(Bch, OrderZeroIsSeed) {
  auto p = bch_evolve(trilinear_generator(), BosonMonomial::a(), 0);
  EXPECT_EQ(p, OperatorPolynomial::monomial(BosonMonomial::a()));
}

TEST(Bch, FirstOrderSignal) {
  // a - i chi b†c
  auto p = bch_evolve(trilinear_generator(), BosonMonomial::a(), 1);
  auto want = OperatorPolynomial::monomial(BosonMonomial::a()) +
              OperatorPolynomial::monomial(BosonMonomial{0, 0, 1, 0, 0, 1}, 1, gr(0, 1, -1, 1));
  EXPECT_EQ(p, want);
}

TEST(Bch, EighthOrderSpotCoefficients) {
  auto ao = bch_evolve(trilinear_generator(), BosonMonomial::a(), 8);
  // + a c†4 c4 at chi^8 with coefficient 1/8!
  EXPECT_EQ(ao.coeff(BosonMonomial{0, 1, 0, 0, 4, 4}, 8), gr(1, 40320));
  // - 91 a b†b c†2 c2 at chi^6
  EXPECT_EQ(ao.coeff(BosonMonomial{0, 1, 1, 1, 2, 2}, 6), gr(-91, 720));
  // - 10 a b†b c†c at chi^4
  EXPECT_EQ(ao.coeff(BosonMonomial{0, 1, 1, 1, 1, 1}, 4), gr(-10, 24));
  // order-0 slice is exactly {a: 1}
  EXPECT_EQ(ao.order_slice(0), OperatorPolynomial::monomial(BosonMonomial::a()));
}

TEST(Bch, EighthOrderPumpSpotCoefficients) {
  auto co = bch_evolve(trilinear_generator(), BosonMonomial::c(), 8);
  // bare c reappears at chi^4 with +1/4!
  EXPECT_EQ(co.coeff(BosonMonomial::c(), 4), gr(1, 24));
  // - 4 a2 b2 c† at chi^4: -4/4!
  EXPECT_EQ(co.coeff(BosonMonomial{0, 2, 0, 2, 1, 0}, 4), gr(-4, 24));
}

TEST(Bch, PrefixStability) {
  auto g = trilinear_generator();
  auto p8 = bch_evolve(g, BosonMonomial::a(), 8);
  for (int n = 0; n < 8; ++n)
    EXPECT_EQ(p8.truncated(n), bch_evolve(g, BosonMonomial::a(), n)) << "order " << n;
}

TEST(Bch, DaggerCommutesWithEvolution) {
  auto g = trilinear_generator();
  EXPECT_EQ(dagger(bch_evolve(g, BosonMonomial::a(), 8)),
            bch_evolve(g, BosonMonomial::a_dag(), 8));
}

TEST(Bch, IdlerIsSwappedSignal) {
  auto g = trilinear_generator();
  EXPECT_EQ(bch_evolve(g, BosonMonomial::b(), 7), swap_ab(bch_evolve(g, BosonMonomial::a(), 7)));
}

TEST(Bch, GeneratorMustBeFirstOrder) {
  auto bad = OperatorPolynomial::monomial(BosonMonomial{1, 0, 1, 0, 0, 1}, 2);
  EXPECT_THROW(bch_evolve(bad, BosonMonomial::a(), 3), std::invalid_argument);
}

TEST(CommutatorOrder, TruncationPreservesCanonicalPairThroughN) {
  auto r2 = verify_commutator_order('a', 2);
  EXPECT_TRUE(r2.pass);
  ASSERT_TRUE(r2.lowest_residual_order.has_value());
  EXPECT_GE(*r2.lowest_residual_order, 3);

  auto r0 = verify_commutator_order('c', 0);
  EXPECT_TRUE(r0.pass);
  EXPECT_FALSE(r0.lowest_residual_order.has_value());  // [c, c†] = 1 exactly

  auto r8 = verify_commutator_order('a', 8);
  EXPECT_TRUE(r8.pass);
  ASSERT_TRUE(r8.lowest_residual_order.has_value());
  EXPECT_GE(*r8.lowest_residual_order, 9);
}
