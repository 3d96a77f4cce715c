#include <algorithm>
#include <random>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "colormosaic/spatial.hpp"
#include "oracles.hpp"

namespace colormosaic {
namespace {

TEST(HistogramTest, Counts) {
  const Histogram h = histogram(GrayImage(2, 2, std::vector<double>{0, 0, 255, 255}));
  EXPECT_EQ(h.total, 4u);
  EXPECT_EQ(h.counts[0], 2u);
  EXPECT_EQ(h.counts[255], 2u);
  EXPECT_EQ(std::count(h.counts.begin(), h.counts.end(), 0u), 254);

  const Histogram c = histogram(GrayImage(3, 3, 7.0));
  EXPECT_EQ(c.counts[7], 9u);
}

TEST(HistogramTest, QuantizesBeforeCounting) {
  const Histogram h = histogram(GrayImage(1, 4, std::vector<double>{-5.0, 2.5, 2.49, 400.0}));
  EXPECT_EQ(h.counts[0], 1u);
  EXPECT_EQ(h.counts[3], 1u);
  EXPECT_EQ(h.counts[2], 1u);
  EXPECT_EQ(h.counts[255], 1u);
}

TEST(HistogramTest, CountsPartitionPixels) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 10; ++i) {
    const Histogram h = histogram(testing::random_plane(rng, 3, 3, -10, 265));
    std::uint64_t sum = 0;
    for (auto c : h.counts) sum += c;
    EXPECT_EQ(sum, 9u);
    EXPECT_EQ(h.total, 9u);
  }
}

TEST(EqualizationMapTest, TwoLevelExample) {
  const EqualizationMap m =
      equalization_map(histogram(GrayImage(2, 2, std::vector<double>{0, 0, 255, 255})));
  EXPECT_EQ(m.table[0], 128.0);  // round(255 * 0.5)
  EXPECT_EQ(m.table[254], 128.0);
  EXPECT_EQ(m.table[255], 255.0);
}

TEST(EqualizationMapTest, ConstantImage) {
  const EqualizationMap m = equalization_map(histogram(GrayImage(4, 4, 40.0)));
  EXPECT_EQ(m.table[39], 0.0);  // below the lowest occupied level
  EXPECT_EQ(m.table[40], 255.0);
}

TEST(EqualizationMapTest, MonotoneOnRandomHistograms) {
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<int> count(0, 50);
  std::bernoulli_distribution sparse(0.7);
  for (int trial = 0; trial < 300; ++trial) {
    Histogram h;
    for (auto& c : h.counts) {
      c = sparse(rng) ? 0 : static_cast<std::uint64_t>(count(rng));
      h.total += c;
    }
    if (h.total == 0) continue;
    const EqualizationMap m = equalization_map(h);
    for (std::size_t r = 1; r < kLevels; ++r) ASSERT_LE(m.table[r - 1], m.table[r]);
    EXPECT_EQ(m.table[255], 255.0);
    EXPECT_GE(m.table[0], 0.0);
  }
}

TEST(EqualizationMapTest, CustomOutputRange) {
  const EqualizationMap m =
      equalization_map(histogram(GrayImage(1, 4, std::vector<double>{0, 10, 20, 30})), 50, 150);
  EXPECT_EQ(m.table[0], 75.0);
  EXPECT_EQ(m.table[10], 100.0);
  EXPECT_EQ(m.table[30], 150.0);
  EXPECT_THROW(equalization_map(histogram(GrayImage(1, 1)), 200, 100), ConfigError);
}

TEST(EqualizationMapTest, EmptyHistogramRejected) {
  EXPECT_THROW(equalization_map(Histogram{}), ConfigError);
}

TEST(EqualizeTest, Examples) {
  EXPECT_EQ(equalize(GrayImage(2, 2, std::vector<double>{0, 0, 255, 255})),
            GrayImage(2, 2, std::vector<double>{128, 128, 255, 255}));
  EXPECT_EQ(equalize(GrayImage(3, 2, 17.3)), GrayImage(3, 2, 255.0));
}

std::size_t occupied(const GrayImage& g) {
  return std::set<double>(g.values().begin(), g.values().end()).size();
}

TEST(EqualizeTest, PropertiesOnRandomImages) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const GrayImage x = testing::random_plane(rng, 7, 9, 40.0, 120.0);
    const GrayImage y = equalize(x);
    for (double v : y.values()) {
      EXPECT_EQ(v, std::round(v));
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 255.0);
    }
    // Rank preservation on the quantized input.
    const GrayImage q = quantized(x);
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (q.values()[i] < q.values()[j]) EXPECT_LE(y.values()[i], y.values()[j]);
      }
    }
    EXPECT_LE(occupied(equalize(y)), occupied(y));
  }
}

TEST(EqualizeTest, DependsOnlyOnSampleMultiset) {
  std::mt19937_64 rng(54);
  const GrayImage x = testing::random_plane(rng, 5, 8);
  std::vector<double> v(x.values().begin(), x.values().end());
  std::vector<std::size_t> perm(v.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<double> shuffled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) shuffled[i] = v[perm[i]];
  const GrayImage y = equalize(x);
  const GrayImage z = equalize(GrayImage(8, 5, shuffled));
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(z.values()[i], y.values()[perm[i]]);
}

}  // namespace
}  // namespace colormosaic
