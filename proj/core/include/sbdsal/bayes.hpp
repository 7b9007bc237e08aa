#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sbdsal/image.hpp"
#include "sbdsal/saliency_map.hpp"

namespace sbdsal {

/// Threshold the coarse map at its mean value. If the split is degenerate
/// (all foreground or all background) the threshold falls back to 0.5.
BinaryMask extract_foreground_mask(const SaliencyMap& coarse);

/// Per-channel L/a/b color histograms of the foreground and background
/// regions. Bins are uniform over each channel's observed range across the
/// whole image, so a pixel lands in the same bin for both regions.
struct RegionHistograms {
  int bins = 0;
  std::int64_t fg_pixels = 0;
  std::int64_t bg_pixels = 0;
  std::array<double, 3> lo{};  // per-channel bin range
  std::array<double, 3> hi{};
  std::array<std::vector<std::int64_t>, 3> fg;  // counts per channel
  std::array<std::vector<std::int64_t>, 3> bg;

  int bin_index(int channel, double value) const;
};

/// Build both regions' histograms. Throws if either region is empty.
RegionHistograms build_histograms(const MultiChannelImage& mc, const BinaryMask& foreground,
                                  int bins);

struct Likelihood {
  double fg = 0.0;
  double bg = 0.0;
};

/// Naive-Bayes color likelihood of one (L,a,b) observation under each region:
/// the product of the three per-channel bin frequencies.
Likelihood likelihood(const RegionHistograms& h, double L, double a, double b);

/// Posterior for one pixel given its prior and likelihoods. A 0/0 collision
/// returns the prior unchanged.
double bayes_posterior(double prior, double fg_likelihood, double bg_likelihood);

/// Bayes update of the whole prior map using per-pixel color likelihoods.
SaliencyMap posterior_map(const SaliencyMap& prior, const RegionHistograms& h,
                          const MultiChannelImage& mc);

}  // namespace sbdsal
