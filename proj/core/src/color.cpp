#include "sbdsal/color.hpp"

#include <cmath>
#include <stdexcept>

namespace sbdsal {

namespace {

// sRGB companding curve, 8-bit in, linear [0,1] out.
inline double srgb_linearize(std::uint8_t v) {
  double c = v / 255.0;
  return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
}

// D65 reference white in XYZ.
constexpr double kXn = 0.95047;
constexpr double kYn = 1.0;
constexpr double kZn = 1.08883;

inline double lab_f(double t) {
  constexpr double kDelta = 6.0 / 29.0;
  constexpr double kDelta3 = kDelta * kDelta * kDelta;
  return t > kDelta3 ? std::cbrt(t) : t / (3.0 * kDelta * kDelta) + 4.0 / 29.0;
}

}  // namespace

void srgb_to_lab(std::uint8_t r, std::uint8_t g, std::uint8_t b, double& L, double& a, double& B) {
  double lr = srgb_linearize(r);
  double lg = srgb_linearize(g);
  double lb = srgb_linearize(b);
  // sRGB -> XYZ (D65)
  double X = 0.4124564 * lr + 0.3575761 * lg + 0.1804375 * lb;
  double Y = 0.2126729 * lr + 0.7151522 * lg + 0.0721750 * lb;
  double Z = 0.0193339 * lr + 0.1191920 * lg + 0.9503041 * lb;
  double fx = lab_f(X / kXn);
  double fy = lab_f(Y / kYn);
  double fz = lab_f(Z / kZn);
  L = 116.0 * fy - 16.0;
  a = 500.0 * (fx - fy);
  B = 200.0 * (fy - fz);
}

ColorPlanes srgb_to_lab(const RgbImage& img) {
  if (!img.valid()) throw std::invalid_argument("srgb_to_lab: invalid image");
  ColorPlanes out;
  out.width = img.width;
  out.height = img.height;
  std::size_t n = img.pixel_count();
  for (auto& p : out.ch) p.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t* px = img.data.data() + 3 * i;
    srgb_to_lab(px[0], px[1], px[2], out.ch[0][i], out.ch[1][i], out.ch[2][i]);
  }
  return out;
}

ColorPlanes rgb_to_irgby(const RgbImage& img) {
  if (!img.valid()) throw std::invalid_argument("rgb_to_irgby: invalid image");
  ColorPlanes out;
  out.width = img.width;
  out.height = img.height;
  std::size_t n = img.pixel_count();
  for (auto& p : out.ch) p.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t* px = img.data.data() + 3 * i;
    double r = px[0], g = px[1], b = px[2];
    out.ch[0][i] = (r + g + b) / 3.0;
    out.ch[1][i] = r - g;
    out.ch[2][i] = b - (r + g) / 2.0;
  }
  return out;
}

MultiChannelImage make_multichannel(const RgbImage& img) {
  ColorPlanes lab = srgb_to_lab(img);
  ColorPlanes irgby = rgb_to_irgby(img);
  MultiChannelImage mc(img.width, img.height);
  std::size_t n = mc.plane_size();
  for (int c = 0; c < 3; ++c) {
    std::copy(lab.ch[c].begin(), lab.ch[c].end(), mc.data.begin() + c * n);
    std::copy(irgby.ch[c].begin(), irgby.ch[c].end(), mc.data.begin() + (3 + c) * n);
  }
  return mc;
}

}  // namespace sbdsal
