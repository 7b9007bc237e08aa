#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "sbdsal/color.hpp"
#include "sbdsal/features.hpp"
#include "sbdsal/image.hpp"
#include "sbdsal/saliency_map.hpp"

#include "synthetic.hpp"

using namespace sbdsal;
namespace st = sbdsal::testing;

TEST_CASE("srgb_to_lab reference colors") {
  double L, a, b;

  srgb_to_lab(255, 255, 255, L, a, b);
  CHECK(std::abs(L - 100.0) < 1e-3);
  CHECK(std::abs(a) < 1e-3);
  CHECK(std::abs(b) < 1e-3);

  srgb_to_lab(0, 0, 0, L, a, b);
  CHECK(std::abs(L) < 1e-9);
  CHECK(std::abs(a) < 1e-9);
  CHECK(std::abs(b) < 1e-9);

  // Frozen from an independent D65 reference conversion.
  srgb_to_lab(255, 0, 0, L, a, b);
  CHECK(L == doctest::Approx(53.240794).epsilon(1e-5));
  CHECK(a == doctest::Approx(80.092460).epsilon(1e-5));
  CHECK(b == doctest::Approx(67.203197).epsilon(1e-5));
}

TEST_CASE("gray input maps to the neutral axis in both color spaces") {
  for (int v : {1, 64, 128, 200, 254}) {
    double L, a, b;
    srgb_to_lab(static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(v),
                static_cast<std::uint8_t>(v), L, a, b);
    CHECK(std::abs(a) < 1e-6);
    CHECK(std::abs(b) < 1e-6);
  }
  RgbImage gray = st::constant_image(4, 4, {90, 90, 90});
  ColorPlanes irgby = rgb_to_irgby(gray);
  CHECK(irgby.ch[0][0] == 90.0);
  CHECK(irgby.ch[1][0] == 0.0);
  CHECK(irgby.ch[2][0] == 0.0);
}

TEST_CASE("rgb_to_irgby saturated channels") {
  RgbImage img(2, 1);
  img.pixel(0, 0)[0] = 255;  // red
  img.pixel(1, 0)[1] = 255;  // green
  ColorPlanes p = rgb_to_irgby(img);
  CHECK(p.ch[0][0] == doctest::Approx(85.0));
  CHECK(p.ch[1][0] == 255.0);
  CHECK(p.ch[2][0] == -127.5);
  CHECK(p.ch[0][1] == doctest::Approx(85.0));
  CHECK(p.ch[1][1] == -255.0);
  CHECK(p.ch[2][1] == -127.5);
}

TEST_CASE("build_pyramid dimensions and identity") {
  RgbImage img = st::noise_image(400, 300, 7);
  auto pyr = build_pyramid(img, {1.0, 0.5, 0.25});
  REQUIRE(pyr.size() == 3);
  CHECK(pyr[0].width == 400);
  CHECK(pyr[0].height == 300);
  CHECK(pyr[0].data == img.data);  // ratio 1.0 is the input, untouched
  CHECK(pyr[1].width == 200);
  CHECK(pyr[1].height == 150);
  CHECK(pyr[2].width == 100);
  CHECK(pyr[2].height == 75);

  RgbImage small = st::noise_image(20, 20, 9);
  CHECK_THROWS_AS(build_pyramid(small, {0.25}), std::invalid_argument);
  CHECK_THROWS_AS(build_pyramid(img, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(build_pyramid(img, {1.5}), std::invalid_argument);
}

TEST_CASE("patch feature dimension is 6 * patch^2") {
  RgbImage img = st::noise_image(16, 16, 3);
  MultiChannelImage mc = make_multichannel(img);
  for (int p : {3, 5, 7}) {
    PatchFeatureGrid grid = extract_patch_features(mc, p);
    CHECK(grid.dim() == 6 * p * p);
    CHECK(grid.features.cols() == 16 * 16);
  }
  CHECK(extract_patch_features(mc, 7).dim() == 294);
  CHECK_THROWS_AS(extract_patch_features(mc, 4), std::invalid_argument);
  CHECK_THROWS_AS(extract_patch_features(mc, 1), std::invalid_argument);
  CHECK_THROWS_AS(extract_patch_features(mc, 17), std::invalid_argument);
}

TEST_CASE("constant image gives identical patch features") {
  RgbImage img = st::constant_image(16, 16, {40, 90, 160});
  MultiChannelImage mc = make_multichannel(img);
  PatchFeatureGrid grid = extract_patch_features(mc, 7);
  for (Eigen::Index c = 1; c < grid.features.cols(); ++c)
    CHECK((grid.features.col(c) - grid.features.col(0)).norm() == 0.0);
}

TEST_CASE("center patch feature is the channel-major row-major neighborhood") {
  // 3x3 ramp with distinct pixel values.
  RgbImage img(3, 3);
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 3; ++x) {
      std::uint8_t* p = img.pixel(x, y);
      p[0] = static_cast<std::uint8_t>(10 + 25 * (y * 3 + x));
      p[1] = static_cast<std::uint8_t>(5 + 20 * (y * 3 + x));
      p[2] = static_cast<std::uint8_t>(2 + 15 * (y * 3 + x));
    }
  }
  MultiChannelImage mc = make_multichannel(img);
  PatchFeatureGrid grid = extract_patch_features(mc, 3);
  REQUIRE(grid.dim() == 54);

  // For the center pixel the 3x3 patch covers the whole image, so the feature
  // must equal each channel's plane in row-major order, channels in sequence.
  Eigen::VectorXd center = grid.features.col(4);
  for (int c = 0; c < kNumChannels; ++c)
    for (int i = 0; i < 9; ++i)
      CHECK(center[c * 9 + i] == mc.plane(c)[i]);

  // Corner pixel (0,0): replication clamps out-of-range samples to the edge.
  Eigen::VectorXd corner = grid.features.col(0);
  CHECK(corner[0] == mc.at(0, 0, 0));  // (-1,-1) -> (0,0)
  CHECK(corner[1] == mc.at(0, 0, 0));  // (0,-1)  -> (0,0)
  CHECK(corner[2] == mc.at(0, 1, 0));  // (1,-1)  -> (1,0)
  CHECK(corner[3] == mc.at(0, 0, 0));  // (-1,0)  -> (0,0)
  CHECK(corner[4] == mc.at(0, 0, 0));
  CHECK(corner[5] == mc.at(0, 1, 0));
}

TEST_CASE("normalize_map") {
  SaliencyMap m(3, 1);
  m.values = {2.0, 4.0, 6.0};
  SaliencyMap n = normalize_map(m);
  CHECK(n.values[0] == 0.0);
  CHECK(n.values[1] == 0.5);
  CHECK(n.values[2] == 1.0);

  SaliencyMap constant(4, 4, 3.7);
  SaliencyMap z = normalize_map(constant);
  for (double v : z.values) CHECK(v == 0.0);

  // Idempotence: a map already spanning [0,1] is unchanged.
  SaliencyMap again = normalize_map(n);
  CHECK(again.values == n.values);

  SaliencyMap bad(2, 1);
  bad.values = {0.0, std::numeric_limits<double>::quiet_NaN()};
  CHECK_THROWS_AS(normalize_map(bad), std::invalid_argument);
  bad.values = {0.0, std::numeric_limits<double>::infinity()};
  CHECK_THROWS_AS(normalize_map(bad), std::invalid_argument);
}

TEST_CASE("map_entropy") {
  SaliencyMap constant(8, 8, 0.3);
  CHECK(map_entropy(constant) == 0.0);

  SaliencyMap two(16, 16);
  for (std::size_t i = 0; i < two.values.size(); ++i) two.values[i] = i % 2 ? 1.0 : 0.0;
  CHECK(map_entropy(two) == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  // One value per histogram bin -> uniform occupancy.
  SaliencyMap uniform(256, 1);
  for (int i = 0; i < 256; ++i) uniform.values[i] = (i + 0.5) / 256.0;
  CHECK(map_entropy(uniform) == doctest::Approx(std::log(256.0)).epsilon(1e-12));

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int rep = 0; rep < 20; ++rep) {
    SaliencyMap m(17, 13);
    for (double& v : m.values) v = unif(rng);
    double e = map_entropy(m);
    CHECK(e >= 0.0);
    CHECK(e <= std::log(256.0) + 1e-12);
  }
}

TEST_CASE("resize_map") {
  SaliencyMap m(5, 4);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (double& v : m.values) v = unif(rng);
  SaliencyMap same = resize_map(m, 5, 4);
  CHECK(same.values == m.values);

  SaliencyMap flat(3, 3, 0.5);
  SaliencyMap stretched = resize_map(flat, 9, 6);
  for (double v : stretched.values) CHECK(v == doctest::Approx(0.5).epsilon(1e-12));

  // Bilinear keeps a left-to-right ramp monotone when widened.
  SaliencyMap ramp(2, 2);
  ramp.values = {0.0, 1.0, 0.0, 1.0};
  SaliencyMap wide = resize_map(ramp, 4, 2);
  for (int y = 0; y < 2; ++y)
    for (int x = 1; x < 4; ++x) CHECK(wide.at(x, y) >= wide.at(x - 1, y));
  for (double v : wide.values) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}
