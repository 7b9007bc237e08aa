#pragma once

// Synthetic inputs shared by the unit, acceptance and benchmark targets.

#include <cstdint>

#include "sbdsal/image.hpp"

namespace sbdsal::testing {

struct Rgb {
  std::uint8_t r, g, b;
};

inline constexpr Rgb kGray{128, 128, 128};
inline constexpr Rgb kRed{255, 0, 0};

RgbImage constant_image(int w, int h, Rgb color);

/// Uniform background with an axis-aligned filled rectangle.
RgbImage rectangle_image(int w, int h, Rgb background, Rgb foreground, int x0, int y0,
                         int rect_w, int rect_h);

/// Background with a centered square of the given side.
RgbImage centered_square_image(int w, int h, Rgb background, Rgb foreground, int side);

/// Mask matching centered_square_image's foreground.
BinaryMask centered_square_mask(int w, int h, int side);

/// Left half one color, right half another.
RgbImage two_halves_image(int w, int h, Rgb left, Rgb right);

/// Intensity ramp; horizontal if `horizontal`, else vertical.
RgbImage gradient_image(int w, int h, bool horizontal);

/// Deterministic per-pixel noise from a small LCG.
RgbImage noise_image(int w, int h, std::uint32_t seed);

}  // namespace sbdsal::testing
