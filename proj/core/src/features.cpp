#include "sbdsal/features.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sbdsal {

namespace {

void check_patch_size(const MultiChannelImage& mc, int patch_size) {
  if (patch_size < 3 || patch_size % 2 == 0)
    throw std::invalid_argument("patch size must be odd and >= 3");
  if (patch_size > std::min(mc.width, mc.height))
    throw std::invalid_argument("patch size exceeds image size");
}

}  // namespace

Eigen::MatrixXd extract_features_at(const MultiChannelImage& mc, int patch_size,
                                    std::span<const int> pixels) {
  check_patch_size(mc, patch_size);
  const int radius = patch_size / 2;
  const int dim = kNumChannels * patch_size * patch_size;
  const int w = mc.width;
  const int h = mc.height;

  Eigen::MatrixXd out(dim, static_cast<Eigen::Index>(pixels.size()));
  for (std::size_t col = 0; col < pixels.size(); ++col) {
    int idx = pixels[col];
    if (idx < 0 || idx >= static_cast<int>(mc.plane_size()))
      throw std::invalid_argument("extract_features_at: pixel index out of range");
    int x = idx % w;
    int y = idx / w;
    double* dst = out.col(static_cast<Eigen::Index>(col)).data();
    for (int c = 0; c < kNumChannels; ++c) {
      const double* plane = mc.data.data() + static_cast<std::size_t>(c) * mc.plane_size();
      for (int dy = -radius; dy <= radius; ++dy) {
        int sy = std::clamp(y + dy, 0, h - 1);
        const double* row = plane + static_cast<std::size_t>(sy) * w;
        for (int dx = -radius; dx <= radius; ++dx) {
          int sx = std::clamp(x + dx, 0, w - 1);
          *dst++ = row[sx];
        }
      }
    }
  }
  return out;
}

PatchFeatureGrid extract_patch_features(const MultiChannelImage& mc, int patch_size) {
  check_patch_size(mc, patch_size);
  std::vector<int> all(mc.plane_size());
  std::iota(all.begin(), all.end(), 0);

  PatchFeatureGrid grid;
  grid.width = mc.width;
  grid.height = mc.height;
  grid.patch_size = patch_size;
  grid.features = extract_features_at(mc, patch_size, all);
  return grid;
}

}  // namespace sbdsal
