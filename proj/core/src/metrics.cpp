#include "sbdsal/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace sbdsal {

namespace {

void check_sizes(const SaliencyMap& s, const BinaryMask& gt) {
  if (s.width != gt.width || s.height != gt.height)
    throw std::invalid_argument("evaluation: map/ground-truth size mismatch");
  if (s.values.empty()) throw std::invalid_argument("evaluation: empty map");
}

inline int quantize(double v) {
  return static_cast<int>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

// Histograms of quantized saliency levels, split by ground-truth class.
// Suffix sums give the confusion counts of every threshold in one pass, and
// equal map values share thresholds exactly.
struct SweepCounts {
  std::array<std::int64_t, kCurveThresholds> pos{};
  std::array<std::int64_t, kCurveThresholds> neg{};
  std::int64_t npos = 0;
  std::int64_t nneg = 0;
};

SweepCounts sweep_counts(const SaliencyMap& s, const BinaryMask& gt) {
  check_sizes(s, gt);
  SweepCounts c;
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    int level = quantize(s.values[i]);
    if (gt.values[i]) {
      c.pos[level]++;
      c.npos++;
    } else {
      c.neg[level]++;
      c.nneg++;
    }
  }
  return c;
}

}  // namespace

std::vector<PrPoint> pr_curve(const SaliencyMap& s, const BinaryMask& gt) {
  SweepCounts c = sweep_counts(s, gt);
  if (c.npos == 0) throw std::invalid_argument("pr_curve: ground truth has no positives");

  std::vector<PrPoint> out(kCurveThresholds);
  std::int64_t tp = 0, fp = 0;
  for (int t = kCurveThresholds - 1; t >= 0; --t) {
    tp += c.pos[t];
    fp += c.neg[t];
    out[t].precision = (tp + fp) > 0 ? static_cast<double>(tp) / (tp + fp) : 1.0;
    out[t].recall = static_cast<double>(tp) / c.npos;
  }
  return out;
}

double f_measure(double precision, double recall) {
  if (precision == 0.0 && recall == 0.0) return 0.0;
  return (1.0 + kFMeasureBeta2) * precision * recall / (kFMeasureBeta2 * precision + recall);
}

AdaptiveMetrics adaptive_threshold_metrics(const SaliencyMap& s, const BinaryMask& gt) {
  check_sizes(s, gt);
  double threshold = std::min(2.0 * map_mean(s), 1.0);
  std::int64_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    bool predicted = s.values[i] >= threshold;
    bool actual = gt.values[i] != 0;
    if (predicted && actual) tp++;
    else if (predicted) fp++;
    else if (actual) fn++;
  }
  if (tp + fn == 0)
    throw std::invalid_argument("adaptive_threshold_metrics: ground truth has no positives");
  AdaptiveMetrics m;
  m.precision = (tp + fp) > 0 ? static_cast<double>(tp) / (tp + fp) : 1.0;
  m.recall = static_cast<double>(tp) / (tp + fn);
  m.fmeasure = f_measure(m.precision, m.recall);
  return m;
}

double mae(const SaliencyMap& s, const BinaryMask& gt) {
  check_sizes(s, gt);
  double sum = 0.0;
  for (std::size_t i = 0; i < s.values.size(); ++i)
    sum += std::abs(s.values[i] - (gt.values[i] ? 1.0 : 0.0));
  return sum / s.values.size();
}

double auc(const SaliencyMap& s, const BinaryMask& gt) {
  SweepCounts c = sweep_counts(s, gt);
  if (c.npos == 0 || c.nneg == 0)
    throw std::invalid_argument("auc: ground truth needs both classes");

  // ROC points for t = 255..0 plus the all-negative endpoint, trapezoidal.
  double area = 0.0;
  double prev_tpr = 0.0, prev_fpr = 0.0;
  std::int64_t tp = 0, fp = 0;
  for (int t = kCurveThresholds - 1; t >= 0; --t) {
    tp += c.pos[t];
    fp += c.neg[t];
    double tpr = static_cast<double>(tp) / c.npos;
    double fpr = static_cast<double>(fp) / c.nneg;
    area += (fpr - prev_fpr) * (tpr + prev_tpr) / 2.0;
    prev_tpr = tpr;
    prev_fpr = fpr;
  }
  return area;
}

EvalReport evaluate(const SaliencyMap& s, const BinaryMask& gt) {
  EvalReport r;
  std::vector<PrPoint> pr = pr_curve(s, gt);
  r.precision.resize(kCurveThresholds);
  r.recall.resize(kCurveThresholds);
  r.fmeasure.resize(kCurveThresholds);
  for (int t = 0; t < kCurveThresholds; ++t) {
    r.precision[t] = pr[t].precision;
    r.recall[t] = pr[t].recall;
    r.fmeasure[t] = f_measure(pr[t].precision, pr[t].recall);
  }
  r.adaptive = adaptive_threshold_metrics(s, gt);
  r.mae = mae(s, gt);
  r.auc = auc(s, gt);
  return r;
}

EvalReport aggregate(const std::vector<EvalReport>& reports) {
  if (reports.empty()) throw std::invalid_argument("aggregate: no reports");
  EvalReport out;
  out.precision.assign(kCurveThresholds, 0.0);
  out.recall.assign(kCurveThresholds, 0.0);
  out.fmeasure.assign(kCurveThresholds, 0.0);
  for (const EvalReport& r : reports) {
    for (int t = 0; t < kCurveThresholds; ++t) {
      out.precision[t] += r.precision[t];
      out.recall[t] += r.recall[t];
      out.fmeasure[t] += r.fmeasure[t];
    }
    out.adaptive.precision += r.adaptive.precision;
    out.adaptive.recall += r.adaptive.recall;
    out.adaptive.fmeasure += r.adaptive.fmeasure;
    out.mae += r.mae;
    out.auc += r.auc;
  }
  double n = static_cast<double>(reports.size());
  for (int t = 0; t < kCurveThresholds; ++t) {
    out.precision[t] /= n;
    out.recall[t] /= n;
    out.fmeasure[t] /= n;
  }
  out.adaptive.precision /= n;
  out.adaptive.recall /= n;
  out.adaptive.fmeasure /= n;
  out.mae /= n;
  out.auc /= n;
  return out;
}

}  // namespace sbdsal
