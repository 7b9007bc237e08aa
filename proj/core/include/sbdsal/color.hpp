#pragma once

#include <array>
#include <vector>

#include "sbdsal/image.hpp"

namespace sbdsal {

/// Three float planes produced by a color-space conversion.
struct ColorPlanes {
  int width = 0;
  int height = 0;
  std::array<std::vector<double>, 3> ch;
};

/// sRGB (D65) -> CIE-Lab for one pixel. L in [0,100], a/b roughly [-128,127].
void srgb_to_lab(std::uint8_t r, std::uint8_t g, std::uint8_t b, double& L, double& a, double& B);

/// Per-pixel sRGB -> CIE-Lab planes (L, a, b).
ColorPlanes srgb_to_lab(const RgbImage& img);

/// Per-pixel I-RG-BY planes: I = (R+G+B)/3, RG = R-G, BY = B-(R+G)/2,
/// computed on the raw 8-bit values.
ColorPlanes rgb_to_irgby(const RgbImage& img);

/// All six feature channels (L, a, b, I, RG, BY) of an image.
MultiChannelImage make_multichannel(const RgbImage& img);

}  // namespace sbdsal
