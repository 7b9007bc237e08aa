#pragma once

#include <vector>

#include "sbdsal/image.hpp"
#include "sbdsal/saliency_map.hpp"

namespace sbdsal {

inline constexpr double kFMeasureBeta2 = 0.3;
inline constexpr int kCurveThresholds = 256;  // integer thresholds 0..255

struct PrPoint {
  double precision = 0.0;
  double recall = 0.0;
};

struct AdaptiveMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double fmeasure = 0.0;
};

/// Threshold-sweep curves plus scalar metrics for one saliency map against a
/// binary ground truth.
struct EvalReport {
  std::vector<double> precision;  // size 256, index = threshold
  std::vector<double> recall;
  std::vector<double> fmeasure;
  AdaptiveMetrics adaptive;
  double mae = 0.0;
  double auc = 0.0;
};

/// (precision, recall) for every integer threshold t in [0,255]. The map is
/// quantized to round(255*value) and a pixel counts positive when its level
/// is >= t, so equal values share thresholds exactly. Precision is defined as
/// 1 when nothing is predicted positive. Ground truth needs >= 1 positive.
std::vector<PrPoint> pr_curve(const SaliencyMap& s, const BinaryMask& gt);

/// F_beta with beta^2 = 0.3; zero when precision = recall = 0.
double f_measure(double precision, double recall);

/// Metrics at the adaptive threshold min(2 * mean saliency, 1).
AdaptiveMetrics adaptive_threshold_metrics(const SaliencyMap& s, const BinaryMask& gt);

/// Mean absolute difference between the map and the 0/1 ground truth.
double mae(const SaliencyMap& s, const BinaryMask& gt);

/// Area under the ROC curve from the 256-threshold sweep (trapezoidal, with
/// the all-negative endpoint appended). Ground truth needs both classes.
double auc(const SaliencyMap& s, const BinaryMask& gt);

/// All of the above in one report.
EvalReport evaluate(const SaliencyMap& s, const BinaryMask& gt);

/// Field-wise arithmetic mean across reports (per-threshold for curves).
EvalReport aggregate(const std::vector<EvalReport>& reports);

}  // namespace sbdsal
