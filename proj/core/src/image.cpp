#include "sbdsal/image.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sbdsal {

RgbImage::RgbImage(int w, int h) : width(w), height(h) {
  if (w <= 0 || h <= 0) throw std::invalid_argument("RgbImage: non-positive size");
  data.assign(pixel_count() * 3, 0);
}

BinaryMask::BinaryMask(int w, int h, std::uint8_t fill) : width(w), height(h) {
  if (w <= 0 || h <= 0) throw std::invalid_argument("BinaryMask: non-positive size");
  values.assign(static_cast<std::size_t>(w) * h, fill);
}

std::size_t BinaryMask::count_set() const {
  return static_cast<std::size_t>(std::count_if(values.begin(), values.end(),
                                                [](std::uint8_t v) { return v != 0; }));
}

MultiChannelImage::MultiChannelImage(int w, int h) : width(w), height(h) {
  if (w <= 0 || h <= 0) throw std::invalid_argument("MultiChannelImage: non-positive size");
  data.assign(plane_size() * kNumChannels, 0.0);
}

namespace {

// Source sample position for bilinear resampling with pixel-center alignment.
inline void bilinear_coords(int out, int out_size, int in_size, int& i0, int& i1, double& frac) {
  double pos = (out + 0.5) * static_cast<double>(in_size) / out_size - 0.5;
  pos = std::clamp(pos, 0.0, static_cast<double>(in_size - 1));
  i0 = static_cast<int>(pos);
  i1 = std::min(i0 + 1, in_size - 1);
  frac = pos - i0;
}

}  // namespace

RgbImage scale_image(const RgbImage& img, int out_width, int out_height) {
  if (!img.valid()) throw std::invalid_argument("scale_image: invalid image");
  if (out_width < 1 || out_height < 1)
    throw std::invalid_argument("scale_image: non-positive target size");
  if (out_width == img.width && out_height == img.height) return img;

  RgbImage out(out_width, out_height);
  for (int y = 0; y < out_height; ++y) {
    int y0, y1;
    double fy;
    bilinear_coords(y, out_height, img.height, y0, y1, fy);
    for (int x = 0; x < out_width; ++x) {
      int x0, x1;
      double fx;
      bilinear_coords(x, out_width, img.width, x0, x1, fx);
      const std::uint8_t* p00 = img.pixel(x0, y0);
      const std::uint8_t* p10 = img.pixel(x1, y0);
      const std::uint8_t* p01 = img.pixel(x0, y1);
      const std::uint8_t* p11 = img.pixel(x1, y1);
      std::uint8_t* dst = out.pixel(x, y);
      for (int c = 0; c < 3; ++c) {
        double top = p00[c] + fx * (p10[c] - p00[c]);
        double bot = p01[c] + fx * (p11[c] - p01[c]);
        double v = top + fy * (bot - top);
        dst[c] = static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
      }
    }
  }
  return out;
}

std::vector<RgbImage> build_pyramid(const RgbImage& img, const std::vector<double>& scales) {
  if (!img.valid()) throw std::invalid_argument("build_pyramid: invalid image");
  std::vector<RgbImage> out;
  out.reserve(scales.size());
  for (double s : scales) {
    if (!(s > 0.0) || s > 1.0)
      throw std::invalid_argument("build_pyramid: scale ratio must lie in (0,1]");
    if (s == 1.0) {
      out.push_back(img);
      continue;
    }
    int w = static_cast<int>(std::lround(img.width * s));
    int h = static_cast<int>(std::lround(img.height * s));
    if (w < kMinPipelineSize || h < kMinPipelineSize)
      throw std::invalid_argument("build_pyramid: ratio " + std::to_string(s) +
                                  " yields " + std::to_string(w) + "x" + std::to_string(h) +
                                  ", below the " + std::to_string(kMinPipelineSize) +
                                  "px minimum");
    out.push_back(scale_image(img, w, h));
  }
  return out;
}

}  // namespace sbdsal
