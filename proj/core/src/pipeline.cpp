#include "sbdsal/pipeline.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sbdsal/bayes.hpp"
#include "sbdsal/color.hpp"
#include "sbdsal/refine.hpp"
#include "sbdsal/sbd.hpp"
#include "sbdsal/superpixels.hpp"

namespace sbdsal {

namespace {

template <typename Fn>
auto run_stage(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string(name) + ": " + e.what());
  }
}

}  // namespace

PipelineResult run_pipeline(const RgbImage& img, const PipelineConfig& cfg) {
  cfg.validate();
  if (!img.valid()) throw std::invalid_argument("imagecore: invalid image");
  if (std::min(img.width, img.height) < kMinPipelineSize)
    throw std::invalid_argument("imagecore: image " + std::to_string(img.width) + "x" +
                                std::to_string(img.height) + " below the " +
                                std::to_string(kMinPipelineSize) + "x" +
                                std::to_string(kMinPipelineSize) + " pipeline minimum");

  PipelineResult result;
  result.coarse = run_stage("sbd", [&] { return coarse_saliency_multiscale(img, cfg); });

  result.posterior = run_stage("bayes", [&] {
    BinaryMask mask = extract_foreground_mask(result.coarse);
    std::size_t set = mask.count_set();
    // No usable split even after the fallback (constant coarse map):
    // the enhancement is an identity then.
    if (set == 0 || set == mask.values.size()) return result.coarse;
    MultiChannelImage mc = make_multichannel(img);
    RegionHistograms hist = build_histograms(mc, mask, cfg.histogram_bins);
    return posterior_map(result.coarse, hist, mc);
  });

  result.refined = run_stage("refine", [&] {
    int max_target = std::max(2, img.width * img.height / 16);
    int target = std::clamp(cfg.superpixel_target, 2, max_target);
    SuperpixelGraph graph = superpixel_segment(img, target);
    set_mean_posterior(graph, result.posterior);
    GeodesicMatrix geo = geodesic_distances(graph);
    return refine_map(graph, geo);
  });

  return result;
}

}  // namespace sbdsal
