#include "trilin/polynomial.hpp"

#include <gtest/gtest.h>
#include <random>

#include "matrix_oracle.hpp"

using namespace trilin;

namespace {

GaussianRational gr(long nr, long dr, long ni = 0, long di = 1) {
  return GaussianRational::make(nr, dr, ni, di);
}

OperatorPolynomial mono(unsigned p, unsigned q, unsigned r, unsigned s, unsigned t, unsigned u,
                        int order = 0, GaussianRational c = GaussianRational(1)) {
  return OperatorPolynomial::monomial(BosonMonomial{p, q, r, s, t, u}, order, c);
}

BosonMonomial rand_monomial(std::mt19937& rng, int max_exp) {
  std::uniform_int_distribution<int> d(0, max_exp);
  return BosonMonomial{unsigned(d(rng)), unsigned(d(rng)), unsigned(d(rng)),
                       unsigned(d(rng)), unsigned(d(rng)), unsigned(d(rng))};
}

OperatorPolynomial rand_poly(std::mt19937& rng, int nterms, int max_exp) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
  OperatorPolynomial p;
  for (int k = 0; k < nterms; ++k)
    p += OperatorPolynomial::monomial(rand_monomial(rng, max_exp), 0,
                                      gr(num(rng), den(rng), num(rng), den(rng)));
  return p;
}

}  // namespace

TEST(Normalize, AnnihilatorPastCreator) {
  // a a† = a†a + 1
  auto p = normalize({BosonMonomial::a(), BosonMonomial::a_dag()});
  auto want = mono(1, 1, 0, 0, 0, 0) + OperatorPolynomial::identity();
  EXPECT_EQ(p, want);
}

TEST(Normalize, SingleRewriteOnPumpMode) {
  // c c† c = c†c² + c
  auto p = normalize({BosonMonomial::c(), BosonMonomial::c_dag(), BosonMonomial::c()});
  auto want = mono(0, 0, 0, 0, 1, 2) + mono(0, 0, 0, 0, 0, 1);
  EXPECT_EQ(p, want);
}

TEST(Normalize, DoubleNestedCommutatorOfGenerator) {
  // (1/2!)[G,[G,a]] = (chi^2/2)(-a b†b + a c†c)
  auto g = trilinear_generator();
  auto inner = commutator(g, OperatorPolynomial::monomial(BosonMonomial::a()));
  auto outer = commutator(g, inner) * gr(1, 2);
  auto want = mono(0, 1, 1, 1, 0, 0, 2, gr(-1, 2)) + mono(0, 1, 0, 0, 1, 1, 2, gr(1, 2));
  EXPECT_EQ(outer, want);
}

TEST(Multiply, CanonicalCommutatorPair) {
  auto p = multiply(mono(0, 1, 0, 0, 0, 0), mono(1, 0, 0, 0, 0, 0));
  EXPECT_EQ(p, mono(1, 1, 0, 0, 0, 0) + OperatorPolynomial::identity());
}

TEST(Multiply, IdentityIsNeutral) {
  std::mt19937 rng(7);
  auto q = rand_poly(rng, 6, 3);
  EXPECT_EQ(multiply(OperatorPolynomial::identity(), q), q);
  EXPECT_EQ(multiply(q, OperatorPolynomial::identity()), q);
}

TEST(Multiply, TrilinearProductMatchesDenseOracle) {
  // (a†b†c)(abc†) against the brute-force matrix product on a truncated
  // Fock space, interior block only
  auto P = mono(1, 0, 1, 0, 0, 1);
  auto Q = mono(0, 1, 0, 1, 1, 0);
  auto PQ = multiply(P, Q);
  double defect = oracle::interior_product_defect(P, Q, PQ, 1.0, 6, 3);
  EXPECT_LT(defect, 1e-9);
}

TEST(Multiply, MatrixHomomorphismOnRandomPolynomials) {
  std::mt19937 rng(12345);
  for (int iter = 0; iter < 12; ++iter) {
    auto P = rand_poly(rng, 3, 2);
    auto Q = rand_poly(rng, 3, 2);
    auto PQ = multiply(P, Q);
    double defect = oracle::interior_product_defect(P, Q, PQ, 1.0, 7, 5);
    EXPECT_LT(defect, 1e-8) << "iteration " << iter;
  }
}

TEST(Multiply, AssociativeUpToTruncation) {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 8; ++iter) {
    auto P = rand_poly(rng, 3, 2);
    auto Q = rand_poly(rng, 3, 2);
    auto R = rand_poly(rng, 3, 2);
    EXPECT_EQ(multiply(multiply(P, Q), R), multiply(P, multiply(Q, R)));
  }
}

TEST(Multiply, TruncationDropsHighOrders) {
  auto p = mono(0, 1, 0, 0, 0, 0, 3);
  auto q = mono(1, 0, 0, 0, 0, 0, 2);
  EXPECT_TRUE(multiply(p, q, 4).empty());
  EXPECT_EQ(multiply(p, q, 5).term_count(), 2u);
}

TEST(Multiply, TermCapSurfacesAsError) {
  std::mt19937 rng(5);
  auto P = rand_poly(rng, 8, 3);
  auto Q = rand_poly(rng, 8, 3);
  EXPECT_THROW(multiply(P, Q, kUnboundedOrder, 4), TermCapError);
}

TEST(Commutator, GeneratorWithSignalSeed) {
  // [G, a] = -i chi b†c
  auto g = trilinear_generator();
  auto r = commutator(g, OperatorPolynomial::monomial(BosonMonomial::a()));
  EXPECT_EQ(r, mono(0, 0, 1, 0, 0, 1, 1, gr(0, 1, -1, 1)));
}

TEST(Commutator, GeneratorWithPumpSeed) {
  // [G, c] = -i chi ab
  auto g = trilinear_generator();
  auto r = commutator(g, OperatorPolynomial::monomial(BosonMonomial::c()));
  EXPECT_EQ(r, mono(0, 1, 0, 1, 0, 0, 1, gr(0, 1, -1, 1)));
}

TEST(Commutator, Antisymmetry) {
  std::mt19937 rng(21);
  auto P = rand_poly(rng, 4, 2);
  auto Q = rand_poly(rng, 4, 2);
  EXPECT_TRUE(commutator(P, P).empty());
  EXPECT_EQ(commutator(P, Q), commutator(Q, P) * GaussianRational(-1));
}

TEST(Commutator, MonomialCommutatorsKeepGaussianIntegerCoefficients) {
  std::mt19937 rng(31);
  for (int iter = 0; iter < 20; ++iter) {
    auto m = rand_monomial(rng, 3);
    auto p = OperatorPolynomial::monomial(m);
    auto r = commutator(p, dagger(p));
    for (const auto& [k, c] : r.terms()) {
      EXPECT_EQ(c.re().get_den(), 1);
      EXPECT_EQ(c.im().get_den(), 1);
    }
  }
}

TEST(Dagger, TermwiseAdjointReorders) {
  // (-i chi b†c)† = +i chi c†b
  auto p = mono(0, 0, 1, 0, 0, 1, 1, gr(0, 1, -1, 1));
  EXPECT_EQ(dagger(p), mono(0, 0, 0, 1, 1, 0, 1, gr(0, 1, 1, 1)));
}

TEST(Dagger, NumberOperatorSelfAdjoint) {
  auto p = mono(1, 1, 0, 0, 0, 0);
  EXPECT_EQ(dagger(p), p);
}

TEST(Dagger, Involution) {
  std::mt19937 rng(77);
  auto P = rand_poly(rng, 6, 3);
  EXPECT_EQ(dagger(dagger(P)), P);
}

TEST(Dagger, AntihomomorphismAgainstMultiply) {
  std::mt19937 rng(78);
  auto P = rand_poly(rng, 4, 2);
  auto Q = rand_poly(rng, 4, 2);
  EXPECT_EQ(dagger(multiply(P, Q)), multiply(dagger(Q), dagger(P)));
}
