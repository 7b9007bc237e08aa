#pragma once

#include <array>
#include <vector>

#include "sbdsal/image.hpp"
#include "sbdsal/saliency_map.hpp"

namespace sbdsal {

struct SuperpixelEdge {
  int a = 0;
  int b = 0;        // a < b
  double weight = 0.0;  // Euclidean distance of the two mean Lab colors
};

/// Superpixel over-segmentation plus its region adjacency graph.
struct SuperpixelGraph {
  int width = 0;
  int height = 0;
  int count = 0;
  std::vector<int> labels;                       // per pixel, 0..count-1
  std::vector<int> sizes;                        // pixels per superpixel
  std::vector<std::array<double, 3>> mean_lab;   // per superpixel
  std::vector<double> mean_posterior;            // filled by set_mean_posterior
  std::vector<SuperpixelEdge> edges;             // unique, a < b
};

/// Compact, connectivity-enforced local clustering (SLIC-style k-means on
/// Lab + position). Produces roughly target_count 4-connected superpixels.
/// Requires 2 <= target_count <= width*height/4.
SuperpixelGraph superpixel_segment(const RgbImage& img, int target_count);

/// Average the posterior map over each superpixel's member pixels.
void set_mean_posterior(SuperpixelGraph& g, const SaliencyMap& posterior);

}  // namespace sbdsal
