#include "sbdsal/bayes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sbdsal {

BinaryMask extract_foreground_mask(const SaliencyMap& coarse) {
  if (coarse.values.empty()) throw std::invalid_argument("extract_foreground_mask: empty map");
  BinaryMask mask(coarse.width, coarse.height);
  auto fill = [&](double threshold) {
    std::size_t set = 0;
    for (std::size_t i = 0; i < coarse.values.size(); ++i) {
      mask.values[i] = coarse.values[i] >= threshold ? 1 : 0;
      set += mask.values[i];
    }
    return set;
  };
  std::size_t set = fill(map_mean(coarse));
  if (set == 0 || set == mask.values.size()) fill(0.5);  // degenerate split
  return mask;
}

int RegionHistograms::bin_index(int channel, double value) const {
  double lo_c = lo[channel], hi_c = hi[channel];
  if (hi_c <= lo_c) return 0;
  int bin = static_cast<int>((value - lo_c) / (hi_c - lo_c) * bins);
  return std::clamp(bin, 0, bins - 1);
}

RegionHistograms build_histograms(const MultiChannelImage& mc, const BinaryMask& foreground,
                                  int bins) {
  if (bins < 2) throw std::invalid_argument("build_histograms: needs at least 2 bins");
  if (foreground.width != mc.width || foreground.height != mc.height)
    throw std::invalid_argument("build_histograms: mask/image size mismatch");

  RegionHistograms h;
  h.bins = bins;
  for (int c = 0; c < 3; ++c) {
    auto plane = mc.plane(c);
    auto [mn, mx] = std::minmax_element(plane.begin(), plane.end());
    h.lo[c] = *mn;
    h.hi[c] = *mx;
    h.fg[c].assign(bins, 0);
    h.bg[c].assign(bins, 0);
  }

  std::size_t n = mc.plane_size();
  for (std::size_t i = 0; i < n; ++i) {
    bool fg = foreground.values[i] != 0;
    (fg ? h.fg_pixels : h.bg_pixels)++;
    for (int c = 0; c < 3; ++c) {
      int bin = h.bin_index(c, mc.plane(c)[i]);
      (fg ? h.fg[c] : h.bg[c])[bin]++;
    }
  }
  if (h.fg_pixels == 0 || h.bg_pixels == 0)
    throw std::invalid_argument("build_histograms: a region is empty");
  return h;
}

Likelihood likelihood(const RegionHistograms& h, double L, double a, double b) {
  const double obs[3] = {L, a, b};
  Likelihood out{1.0, 1.0};
  for (int c = 0; c < 3; ++c) {
    int bin = h.bin_index(c, obs[c]);
    out.fg *= static_cast<double>(h.fg[c][bin]) / h.fg_pixels;
    out.bg *= static_cast<double>(h.bg[c][bin]) / h.bg_pixels;
  }
  return out;
}

double bayes_posterior(double prior, double fg_likelihood, double bg_likelihood) {
  double num = fg_likelihood * prior;
  double den = num + bg_likelihood * (1.0 - prior);
  return den == 0.0 ? prior : num / den;
}

SaliencyMap posterior_map(const SaliencyMap& prior, const RegionHistograms& h,
                          const MultiChannelImage& mc) {
  if (prior.width != mc.width || prior.height != mc.height)
    throw std::invalid_argument("posterior_map: prior/image size mismatch");
  SaliencyMap out(prior.width, prior.height);
  auto L = mc.plane(kChanL);
  auto A = mc.plane(kChanA);
  auto B = mc.plane(kChanB);
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    Likelihood like = likelihood(h, L[i], A[i], B[i]);
    out.values[i] = bayes_posterior(prior.values[i], like.fg, like.bg);
  }
  return out;
}

}  // namespace sbdsal
