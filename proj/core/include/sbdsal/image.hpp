#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace sbdsal {

// Minimum side length an image must have to go through the full pipeline.
inline constexpr int kMinPipelineSize = 16;

/// 8-bit sRGB image, interleaved R,G,B, row-major.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  RgbImage() = default;
  RgbImage(int w, int h);

  std::uint8_t* pixel(int x, int y) { return data.data() + 3 * (static_cast<std::size_t>(y) * width + x); }
  const std::uint8_t* pixel(int x, int y) const {
    return data.data() + 3 * (static_cast<std::size_t>(y) * width + x);
  }
  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
  bool valid() const { return width > 0 && height > 0 && data.size() == pixel_count() * 3; }
};

/// Per-pixel binary labels (0 = background, 1 = foreground), row-major.
struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> values;

  BinaryMask() = default;
  BinaryMask(int w, int h, std::uint8_t fill = 0);

  std::uint8_t at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
  std::size_t count_set() const;
};

// Channel layout of MultiChannelImage planes.
enum Channel : int { kChanL = 0, kChanA, kChanB, kChanI, kChanRG, kChanBY };
inline constexpr int kNumChannels = 6;

/// Six float planes (L, a, b, I, RG, BY) sharing one geometry.
struct MultiChannelImage {
  int width = 0;
  int height = 0;
  std::vector<double> data;  // plane-major: 6 planes of width*height doubles

  MultiChannelImage() = default;
  MultiChannelImage(int w, int h);

  std::span<double> plane(int c) {
    return {data.data() + static_cast<std::size_t>(c) * plane_size(), plane_size()};
  }
  std::span<const double> plane(int c) const {
    return {data.data() + static_cast<std::size_t>(c) * plane_size(), plane_size()};
  }
  double at(int c, int x, int y) const {
    return data[static_cast<std::size_t>(c) * plane_size() + static_cast<std::size_t>(y) * width + x];
  }
  std::size_t plane_size() const { return static_cast<std::size_t>(width) * height; }
};

/// Bilinear resample to the exact target size. Same-size calls return a copy.
RgbImage scale_image(const RgbImage& img, int out_width, int out_height);

/// Downscaled copies of `img`, one per ratio. Ratios must lie in (0,1] and
/// every scaled side must stay >= kMinPipelineSize. Ratio 1.0 copies the input
/// untouched.
std::vector<RgbImage> build_pyramid(const RgbImage& img, const std::vector<double>& scales);

}  // namespace sbdsal
