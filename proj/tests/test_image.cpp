#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "colormosaic/image.hpp"

namespace colormosaic {
namespace {

TEST(QuantizeTest, RoundsHalfAwayFromZero) {
  EXPECT_EQ(quantize_sample(127.5), 128);
  EXPECT_EQ(quantize_sample(127.49), 127);
  EXPECT_EQ(quantize_sample(0.5), 1);
  EXPECT_EQ(quantize_sample(-0.5), 0);
}

TEST(QuantizeTest, Clamps) {
  EXPECT_EQ(quantize_sample(-3.2), 0);
  EXPECT_EQ(quantize_sample(255.0), 255);
  EXPECT_EQ(quantize_sample(254.5), 255);
  EXPECT_EQ(quantize_sample(1e9), 255);
}

TEST(ColorImageTest, RejectsMismatchedPlanes) {
  EXPECT_THROW(ColorImage(GrayImage(2, 2), GrayImage(2, 3), GrayImage(2, 2), ColorModel::RGB),
               ShapeError);
}

TEST(ColorImageTest, RejectsEmpty) {
  EXPECT_THROW(ColorImage(GrayImage(0, 2), GrayImage(0, 2), GrayImage(0, 2), ColorModel::RGB),
               ShapeError);
}

TEST(ColorImageTest, RejectsNonFinite) {
  GrayImage bad(1, 1, std::numeric_limits<double>::quiet_NaN());
  EXPECT_THROW(ColorImage(bad, GrayImage(1, 1), GrayImage(1, 1), ColorModel::RGB), ConfigError);
  GrayImage inf(1, 1, std::numeric_limits<double>::infinity());
  EXPECT_THROW(ColorImage(GrayImage(1, 1), inf, GrayImage(1, 1), ColorModel::RGB), ConfigError);
}

TEST(ColorImageTest, ClampedStaysInRange) {
  GrayImage p(1, 3);
  p(0, 0) = -4.0;
  p(0, 1) = 12.25;
  p(0, 2) = 300.0;
  const ColorImage c = clamped(ColorImage(p, p, p, ColorModel::XYZ));
  EXPECT_EQ(c.model(), ColorModel::XYZ);
  EXPECT_EQ(c.plane(1)(0, 0), 0.0);
  EXPECT_EQ(c.plane(1)(0, 1), 12.25);
  EXPECT_EQ(c.plane(1)(0, 2), 255.0);
}

TEST(MatrixTest, DataSizeChecked) {
  EXPECT_THROW(Matrix<double>(2, 2, std::vector<double>{1, 2, 3}), ShapeError);
  Matrix<double> m(2, 3, std::vector<double>{1, 2, 3, 4, 5, 6});
  EXPECT_EQ(m(1, 0), 4.0);
  EXPECT_EQ(m.row(1)[2], 6.0);
}

}  // namespace
}  // namespace colormosaic
