#pragma once

#include <cstddef>
#include <vector>

namespace sbdsal {

/// Single-channel float map, row-major. Pipeline maps live in [0,1] once
/// normalized; intermediate distance maps may exceed 1.
struct SaliencyMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  SaliencyMap() = default;
  SaliencyMap(int w, int h, double fill = 0.0);

  double& at(int x, int y) { return values[static_cast<std::size_t>(y) * width + x]; }
  double at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
  std::size_t size() const { return values.size(); }
};

/// Mean of all values.
double map_mean(const SaliencyMap& m);

/// Affine min-max rescale to [0,1]. A constant map becomes all zeros.
/// Throws std::invalid_argument on NaN/Inf input.
SaliencyMap normalize_map(const SaliencyMap& m);

/// Shannon entropy (natural log) of the 256-bin histogram of values in [0,1].
/// 0 for a map occupying a single bin, at most ln(256).
double map_entropy(const SaliencyMap& m);

/// Bilinear resample to the target size, output clamped to [0,1].
SaliencyMap resize_map(const SaliencyMap& m, int out_width, int out_height);

}  // namespace sbdsal
