#include "trilin/expansion.hpp"

#include <gtest/gtest.h>
#include <random>
#include <set>

#include "trilin/polynomial.hpp"

using namespace trilin;

namespace {
GaussianRational gr(long nr, long dr, long ni = 0, long di = 1) {
  return GaussianRational::make(nr, dr, ni, di);
}

GaussianRational coeff_of(const ExpandedPolynomial& e, const BosonMonomial& ops, int adeg,
                          int order) {
  auto it = e.find(ExpandedKey{ops, adeg, order});
  return it == e.end() ? GaussianRational() : it->second;
}
}  // namespace

TEST(SubstitutePump, FirstOrderSignalTerm) {
  // -i chi b†c -> -i chi alpha b† - i chi b† dc
  auto p = OperatorPolynomial::monomial(BosonMonomial{0, 0, 1, 0, 0, 1}, 1, gr(0, 1, -1, 1));
  auto e = substitute_pump(p);
  EXPECT_EQ(e.size(), 2u);
  EXPECT_EQ(coeff_of(e, BosonMonomial{0, 0, 1, 0, 0, 0}, 1, 1), gr(0, 1, -1, 1));
  EXPECT_EQ(coeff_of(e, BosonMonomial{0, 0, 1, 0, 0, 1}, 0, 1), gr(0, 1, -1, 1));
}

TEST(SubstitutePump, IdentityStaysIdentity) {
  auto e = substitute_pump(OperatorPolynomial::identity());
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e.begin()->first.alpha_degree, 0);
  EXPECT_EQ(e.begin()->first.ops, BosonMonomial::identity());
}

TEST(SubstitutePump, SecondOrderSignalTerm) {
  // (chi^2/2) a c†c -> (chi^2/2)(alpha^2 a + alpha a dc† + alpha a dc + a dc† dc)
  auto p = OperatorPolynomial::monomial(BosonMonomial{0, 1, 0, 0, 1, 1}, 2, gr(1, 2));
  auto e = substitute_pump(p);
  EXPECT_EQ(e.size(), 4u);
  EXPECT_EQ(coeff_of(e, BosonMonomial{0, 1, 0, 0, 0, 0}, 2, 2), gr(1, 2));
  EXPECT_EQ(coeff_of(e, BosonMonomial{0, 1, 0, 0, 1, 0}, 1, 2), gr(1, 2));
  EXPECT_EQ(coeff_of(e, BosonMonomial{0, 1, 0, 0, 0, 1}, 1, 2), gr(1, 2));
  EXPECT_EQ(coeff_of(e, BosonMonomial{0, 1, 0, 0, 1, 1}, 0, 2), gr(1, 2));
}

TEST(SubstitutePump, RoundTripOnEvolvedModes) {
  auto g = trilinear_generator();
  for (char mode : {'a', 'c'}) {
    auto p = bch_evolve(g, mode_seed(mode), 8);
    EXPECT_EQ(back_substitute(substitute_pump(p)), p) << mode;
  }
}

TEST(SubstitutePump, RoundTripOnRandomPolynomials) {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> d(0, 3), num(-3, 3), den(1, 5);
  for (int iter = 0; iter < 20; ++iter) {
    OperatorPolynomial p;
    for (int t = 0; t < 5; ++t)
      p += OperatorPolynomial::monomial(
          BosonMonomial{unsigned(d(rng)), unsigned(d(rng)), unsigned(d(rng)), unsigned(d(rng)),
                        unsigned(d(rng)), unsigned(d(rng))},
          d(rng), gr(num(rng), den(rng), num(rng), den(rng)));
    EXPECT_EQ(back_substitute(substitute_pump(p)), p);
  }
}

TEST(SubstitutePump, SignalSubordersNonNegative) {
  // no term of a_o has the alpha power above the chi power
  auto e = substitute_pump(bch_evolve(trilinear_generator(), BosonMonomial::a(), 10));
  for (const auto& [k, c] : e) EXPECT_GE(k.suborder(), 0);
}

TEST(SubstitutePump, PumpSubordersBottomOutAtBareAlpha) {
  // for c_o the seed itself contributes alpha at suborder -1; nothing deeper
  auto e = substitute_pump(bch_evolve(trilinear_generator(), BosonMonomial::c(), 10));
  int min_s = 100;
  for (const auto& [k, c] : e) min_s = std::min(min_s, k.suborder());
  EXPECT_EQ(min_s, -1);
  for (const auto& [k, c] : e)
    if (k.suborder() == -1) {
      EXPECT_EQ(k.ops, BosonMonomial::identity());
      EXPECT_EQ(k.chi_order, 0);
    }
}

TEST(Classify, SignalUpToSuborderOneHasExactlyTheFivePatternGroups) {
  auto e = substitute_pump(bch_evolve(trilinear_generator(), BosonMonomial::a(), 8));
  auto res = classify(e, 1);
  std::set<std::pair<BosonMonomial, int>> got;
  for (const auto& s : res.series) got.insert({s.pattern, s.suborder});
  const std::set<std::pair<BosonMonomial, int>> want = {
      {BosonMonomial{0, 1, 0, 0, 0, 0}, 0},  // a
      {BosonMonomial{0, 0, 1, 0, 0, 0}, 0},  // b†
      {BosonMonomial{0, 1, 0, 0, 0, 1}, 1},  // a dc
      {BosonMonomial{0, 1, 0, 0, 1, 0}, 1},  // a dc†
      {BosonMonomial{0, 0, 1, 0, 0, 1}, 1},  // b† dc
      {BosonMonomial{0, 0, 1, 0, 1, 0}, 1},  // b† dc†
  };
  EXPECT_EQ(got, want);
  EXPECT_GT(res.discarded_terms, 0u);
}

TEST(Classify, UndepletedSignalSeriesIsTheCoshExpansion) {
  auto e = substitute_pump(bch_evolve(trilinear_generator(), BosonMonomial::a(), 8));
  auto s = extract_series(e, BosonMonomial{0, 1, 0, 0, 0, 0}, 0);
  ASSERT_EQ(s.entries.size(), 5u);
  long fact[5] = {1, 2, 24, 720, 40320};
  for (int n = 0; n < 5; ++n) {
    EXPECT_EQ(s.entries[n].first, 2 * n);
    EXPECT_EQ(s.entries[n].second, gr(1, fact[n]));
  }
}

TEST(Classify, PumpIdentityDepletionSeries) {
  // coefficients -1/2!, -4/4!, -16/6!, -64/8! at chi-orders 2,4,6,8
  auto e = substitute_pump(bch_evolve(trilinear_generator(), BosonMonomial::c(), 8));
  auto s = extract_series(e, BosonMonomial::identity(), 1);
  ASSERT_EQ(s.entries.size(), 4u);
  const long num[4] = {-1, -4, -16, -64};
  const long den[4] = {2, 24, 720, 40320};
  for (int n = 0; n < 4; ++n) {
    EXPECT_EQ(s.entries[n].first, 2 * n + 2);
    EXPECT_EQ(s.entries[n].second, gr(num[n], den[n]));
  }
}

TEST(Classify, TrivialPolynomialGivesSingleUnitSeries) {
  auto e = substitute_pump(OperatorPolynomial::monomial(BosonMonomial::a()));
  auto res = classify(e, 2);
  ASSERT_EQ(res.series.size(), 1u);
  EXPECT_EQ(res.series[0].suborder, 0);
  ASSERT_EQ(res.series[0].entries.size(), 1u);
  EXPECT_EQ(res.series[0].entries[0].first, 0);
  EXPECT_EQ(res.series[0].entries[0].second, GaussianRational(1));
}

TEST(Classify, PumpAmplitudeCorrectionSitsAtSuborderThree) {
  auto e = substitute_pump(bch_evolve(trilinear_generator(), BosonMonomial::c(), 8));
  auto s = extract_series(e, BosonMonomial::identity(), 3);
  // chi^3 C_alpha: entries at chi-orders 4,6,8 with Z(n)/(2n+2)!
  ASSERT_EQ(s.entries.size(), 3u);
  EXPECT_EQ(s.entries[0].first, 4);
  EXPECT_EQ(s.entries[0].second, gr(1, 24));  // Z(1)/4!
  EXPECT_EQ(s.entries[1].second, gr(60, 720));
  EXPECT_EQ(s.entries[2].second, gr(1552, 40320));
}
