#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "intseq/oracle.hpp"
#include "support/corpus.hpp"

namespace intseq {
namespace {

TEST(DurandKerner, Examples) {
  const auto pell = oracle::durand_kerner(make_polynomial({1, 2, -1}));
  ASSERT_TRUE(pell.converged);
  const auto real = oracle::real_roots(pell);
  ASSERT_EQ(real.size(), 2u);
  EXPECT_NEAR(real[0], -1 - std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(real[1], -1 + std::sqrt(2.0), 1e-12);

  const auto cube = oracle::durand_kerner(make_polynomial({1, 0, 0, -2}));
  const auto cube_real = oracle::real_roots(cube);
  ASSERT_EQ(cube_real.size(), 1u);
  EXPECT_NEAR(cube_real[0], 1.259921, 1e-6);
  EXPECT_NEAR(cube_real[0], std::cbrt(2.0), 1e-12);

  const auto linear = oracle::durand_kerner(make_polynomial({1, -5}));
  ASSERT_EQ(linear.roots.size(), 1u);
  EXPECT_EQ(linear.roots[0], oracle::Complex(5.0, 0.0));
}

TEST(DominanceGap, Examples) {
  EXPECT_NEAR(oracle::dominance_gap(oracle::durand_kerner(make_polynomial({1, 2, -1}))),
              (1 + std::sqrt(2.0)) / (std::sqrt(2.0) - 1), 1e-9);
  EXPECT_NEAR(oracle::dominance_gap(oracle::durand_kerner(make_polynomial({1, 2, -1}))), 5.8284, 1e-4);
  EXPECT_NEAR(oracle::dominance_gap(oracle::durand_kerner(make_polynomial({1, 0, 0, -2}))), 1.0, 1e-9);
  EXPECT_EQ(oracle::dominance_gap(oracle::durand_kerner(make_polynomial({1, -5}))),
            std::numeric_limits<double>::infinity());
}

TEST(DurandKerner, ResidualsAreSmall) {
  testing::Corpus corpus(41, 1, 6);
  for (int i = 0; i < 100; ++i) {
    const MonicIntPolynomial p = corpus.polynomial();
    const auto rs = oracle::durand_kerner(p);
    ASSERT_EQ(rs.roots.size(), p.degree());
    for (double r : rs.residuals) {
      EXPECT_TRUE(std::isfinite(r));
      if (rs.converged) {
        EXPECT_LT(r, 1e-12);
      }
    }
  }
}

TEST(DurandKerner, VietaRelations) {
  testing::Corpus corpus(42, 2, 5);
  for (int i = 0; i < 100; ++i) {
    const MonicIntPolynomial p = corpus.polynomial();
    const auto rs = oracle::durand_kerner(p);
    if (!testing::well_separated(rs, 1e-3)) continue;
    oracle::Complex sum(0, 0);
    oracle::Complex product(1, 0);
    for (const auto& z : rs.roots) {
      sum += z;
      product *= z;
    }
    const double a1 = p.coeff(1).convert_to<double>();
    const double am = p.constant_term().convert_to<double>();
    const double sign = p.degree() % 2 == 0 ? 1.0 : -1.0;
    EXPECT_NEAR(sum.real(), -a1, 1e-6 * std::max(1.0, std::abs(a1)));
    EXPECT_NEAR(sum.imag(), 0.0, 1e-6);
    EXPECT_NEAR(product.real(), sign * am, 1e-6 * std::abs(am));
    EXPECT_NEAR(product.imag(), 0.0, 1e-6 * std::abs(am));
  }
}

TEST(DurandKerner, ConjugateClosure) {
  testing::Corpus corpus(43, 2, 6);
  for (int i = 0; i < 100; ++i) {
    const auto rs = oracle::durand_kerner(corpus.polynomial());
    if (!testing::well_separated(rs, 1e-3)) continue;
    for (const auto& z : rs.roots) {
      if (std::abs(z.imag()) < 1e-7) continue;
      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& w : rs.roots) nearest = std::min(nearest, std::abs(w - std::conj(z)));
      EXPECT_LT(nearest, 1e-8 * std::max(1.0, std::abs(z)));
    }
  }
}

TEST(NewtonPolish, ConvergesFromOracleGuess) {
  const MonicIntPolynomial p = make_polynomial({1, 0, 0, -2});
  int iters = 0;
  const double x = oracle::newton_polish(p, 1.3, 12, &iters);
  EXPECT_NEAR(x, std::cbrt(2.0), 1e-14);
  EXPECT_GT(iters, 0);
}

}  // namespace
}  // namespace intseq
