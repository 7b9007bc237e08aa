#pragma once

#include <span>

#include <Eigen/Dense>

#include "sbdsal/image.hpp"

namespace sbdsal {

/// Dense per-pixel patch features: one column per pixel (row-major pixel
/// order), feature length 6 * patch_size^2. A patch feature concatenates the
/// patch_size x patch_size neighborhood of all six channels in channel-major,
/// row-major order; borders are handled by edge replication.
struct PatchFeatureGrid {
  int width = 0;
  int height = 0;
  int patch_size = 0;
  Eigen::MatrixXd features;  // dim x (width*height)

  int dim() const { return static_cast<int>(features.rows()); }
};

/// Features for every pixel of the image. patch_size must be odd, >= 3 and
/// <= min(width, height).
PatchFeatureGrid extract_patch_features(const MultiChannelImage& mc, int patch_size);

/// Features for a subset of pixels (row-major indices), one column per entry.
/// This is the streaming building block the pipeline uses so that full-size
/// grids never have to be materialized.
Eigen::MatrixXd extract_features_at(const MultiChannelImage& mc, int patch_size,
                                    std::span<const int> pixels);

}  // namespace sbdsal
