#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "colormosaic/metrics.hpp"
#include "oracles.hpp"

namespace colormosaic {
namespace {

TEST(EmeTest, ConstantImageIsZero) {
  EXPECT_EQ(eme(GrayImage(16, 16, 42.0)), 0.0);
  EXPECT_EQ(eme(GrayImage(16, 16, 0.0)), 0.0);
  const GrayImage c(9, 9, 3.0);
  EXPECT_EQ(ceme(ColorImage(c, c, c, ColorModel::RGB)), 0.0);
}

TEST(EmeTest, SingleBlockClosedForm) {
  GrayImage g(8, 8, 150.0);
  g(0, 0) = 200.0;
  g(7, 7) = 100.0;
  EXPECT_NEAR(eme(g, {8, 8}, 0.0), 20.0 * std::log10(2.0), 1e-12);
  EXPECT_NEAR(eme(g, {8, 8}, 0.0), 6.0206, 5e-5);
}

TEST(EmeTest, TwoBlocksAverage) {
  GrayImage g(8, 16, 60.0);
  g(3, 3) = 100.0;
  g(4, 4) = 50.0;   // left block ratio 2
  g(0, 8) = 200.0;  // right block ratio 200/50 = 4
  g(5, 12) = 50.0;
  const double expected = testing::brute_block_measure({&g}, 8, 8, 0.0);
  EXPECT_NEAR(expected, 30.0 * std::log10(2.0), 1e-12);
  EXPECT_NEAR(eme(g, {8, 8}, 0.0), expected, 1e-12);
  EXPECT_NEAR(eme(g, {8, 8}, 0.0), 9.0309, 5e-5);
}

TEST(EmeTest, PartialTrailingBlocksIgnored) {
  GrayImage g(10, 9, 100.0);
  g(9, 8) = 0.0;  // outside the single 8x8 block
  EXPECT_EQ(eme(g), 0.0);
}

TEST(EmeTest, Errors) {
  EXPECT_THROW(eme(GrayImage(7, 20)), ShapeError);
  EXPECT_THROW(eme(GrayImage(8, 8), {0, 8}), ConfigError);
  EXPECT_THROW(eme(GrayImage(8, 8), {8, 8}, -1.0), ConfigError);
}

TEST(EmeTest, MatchesBruteForceOracle) {
  std::mt19937_64 rng(61);
  for (std::size_t l : {2u, 4u, 8u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const GrayImage g = testing::random_plane(rng, 17 + trial, 23);
      EXPECT_NEAR(eme(g, {l, l}), testing::brute_block_measure({&g}, l, l, 1e-4), 1e-12);
    }
  }
  const GrayImage g = testing::random_plane(rng, 12, 30);
  EXPECT_NEAR(eme(g, {3, 5}, 0.5), testing::brute_block_measure({&g}, 3, 5, 0.5), 1e-12);
}

TEST(EmeTest, ScaleInvariantWithoutEpsilon) {
  std::mt19937_64 rng(62);
  const GrayImage g = testing::random_plane(rng, 16, 24, 1.0, 255.0);
  const GrayImage scaled = transform(g, [](double v) { return 0.37 * v; });
  EXPECT_NEAR(eme(scaled, {4, 4}, 0.0), eme(g, {4, 4}, 0.0), 1e-12);
}

TEST(CemeTest, JointExtremesClosedForm) {
  GrayImage r(8, 8, 100.0), g(8, 8, 100.0), b(8, 8, 100.0);
  r(2, 2) = 200.0;
  g(5, 1) = 50.0;
  EXPECT_NEAR(ceme(ColorImage(r, g, b, ColorModel::RGB), {8, 8}, 0.0), 20.0 * std::log10(4.0),
              1e-12);
}

TEST(CemeTest, GrayAsColorEqualsEme) {
  std::mt19937_64 rng(63);
  const GrayImage p = testing::random_plane(rng, 16, 16);
  EXPECT_EQ(ceme(ColorImage(p, p, p, ColorModel::RGB)), eme(p));
}

TEST(CemeTest, MatchesBruteForceOracle) {
  std::mt19937_64 rng(64);
  for (std::size_t l : {2u, 4u, 8u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const ColorImage x = testing::random_color(rng, 16, 16);
      EXPECT_NEAR(ceme(x, {l, l}),
                  testing::brute_block_measure({&x.plane(0), &x.plane(1), &x.plane(2)}, l, l,
                                               1e-4),
                  1e-12);
    }
  }
}

TEST(CemeTest, BlockRatioDominatesEachChannel) {
  std::mt19937_64 rng(65);
  for (int trial = 0; trial < 20; ++trial) {
    const ColorImage x = testing::random_color(rng, 6, 6);
    const double joint = ceme(x, {6, 6});  // one block
    for (const auto& p : x.planes()) EXPECT_GE(joint, eme(p, {6, 6}));
  }
}

TEST(MetricsTest, NonNegative) {
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 10; ++trial) {
    const ColorImage x = testing::random_color(rng, 16, 16);
    EXPECT_GE(ceme(x), 0.0);
    EXPECT_GE(eme(x.plane(1)), 0.0);
  }
}

}  // namespace
}  // namespace colormosaic
