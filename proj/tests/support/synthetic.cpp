#include "synthetic.hpp"

#include <algorithm>

namespace sbdsal::testing {

RgbImage constant_image(int w, int h, Rgb color) {
  RgbImage img(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      std::uint8_t* p = img.pixel(x, y);
      p[0] = color.r;
      p[1] = color.g;
      p[2] = color.b;
    }
  }
  return img;
}

RgbImage rectangle_image(int w, int h, Rgb background, Rgb foreground, int x0, int y0,
                         int rect_w, int rect_h) {
  RgbImage img = constant_image(w, h, background);
  for (int y = y0; y < std::min(h, y0 + rect_h); ++y) {
    for (int x = x0; x < std::min(w, x0 + rect_w); ++x) {
      std::uint8_t* p = img.pixel(x, y);
      p[0] = foreground.r;
      p[1] = foreground.g;
      p[2] = foreground.b;
    }
  }
  return img;
}

RgbImage centered_square_image(int w, int h, Rgb background, Rgb foreground, int side) {
  return rectangle_image(w, h, background, foreground, (w - side) / 2, (h - side) / 2, side,
                         side);
}

BinaryMask centered_square_mask(int w, int h, int side) {
  BinaryMask mask(w, h);
  int x0 = (w - side) / 2, y0 = (h - side) / 2;
  for (int y = y0; y < y0 + side; ++y)
    for (int x = x0; x < x0 + side; ++x) mask.values[static_cast<std::size_t>(y) * w + x] = 1;
  return mask;
}

RgbImage two_halves_image(int w, int h, Rgb left, Rgb right) {
  RgbImage img(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      Rgb c = x < w / 2 ? left : right;
      std::uint8_t* p = img.pixel(x, y);
      p[0] = c.r;
      p[1] = c.g;
      p[2] = c.b;
    }
  }
  return img;
}

RgbImage gradient_image(int w, int h, bool horizontal) {
  RgbImage img(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      int v = horizontal ? (255 * x) / std::max(1, w - 1) : (255 * y) / std::max(1, h - 1);
      std::uint8_t* p = img.pixel(x, y);
      p[0] = p[1] = p[2] = static_cast<std::uint8_t>(v);
    }
  }
  return img;
}

RgbImage noise_image(int w, int h, std::uint32_t seed) {
  RgbImage img(w, h);
  std::uint32_t state = seed * 2654435761u + 1u;
  auto next = [&state] {
    state = state * 1664525u + 1013904223u;
    return static_cast<std::uint8_t>(state >> 24);
  };
  for (std::uint8_t& v : img.data) v = next();
  return img;
}

}  // namespace sbdsal::testing
