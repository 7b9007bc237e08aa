#pragma once

#include "sbdsal/config.hpp"
#include "sbdsal/image.hpp"
#include "sbdsal/saliency_map.hpp"

namespace sbdsal {

/// The three maps the pipeline produces, in stage order.
struct PipelineResult {
  SaliencyMap coarse;     // multi-scale background-distance fusion
  SaliencyMap posterior;  // Bayes-enhanced map
  SaliencyMap refined;    // geodesic-refined final map
};

/// Full detection pipeline: background-distance scoring, Bayes enhancement,
/// geodesic refinement. Deterministic for fixed input and config. Errors are
/// rethrown with the failing stage named.
PipelineResult run_pipeline(const RgbImage& img, const PipelineConfig& cfg);

}  // namespace sbdsal
