#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sbdsal/config.hpp"
#include "sbdsal/metrics.hpp"

namespace sbdsal {

/// Outcome of one image in a batch run.
struct ImageResult {
  std::string name;  // file stem
  bool ok = false;
  std::string error;
  bool evaluated = false;
  EvalReport report;
  double seconds = 0.0;
};

/// Outcome of a whole batch run.
struct DatasetRun {
  std::vector<ImageResult> images;
  bool has_aggregate = false;
  EvalReport aggregate_report;
  int processed = 0;
  int failed = 0;
  int evaluated = 0;
};

/// Process every readable PNG/JPEG in input_dir: write one saliency PNG per
/// image into out_dir (plus _scm/_sp intermediates when configured), score
/// images whose ground-truth mate (same file stem under gt_dir) exists, and
/// write report.json plus the aggregate pr_curve.csv. gt_dir may be empty.
/// Unreadable or failing images are skipped with a warning and counted as
/// failures. jobs > 1 processes images concurrently.
DatasetRun run_dataset(const std::filesystem::path& input_dir,
                       const std::filesystem::path& gt_dir,
                       const std::filesystem::path& out_dir, const PipelineConfig& cfg,
                       int jobs = 1);

/// Single-image variant: write the map (and intermediates) for one file,
/// evaluate against gt_path when given, and write a one-image report.json
/// and pr_curve.csv into out_dir.
ImageResult run_single(const std::filesystem::path& image_path,
                       const std::filesystem::path& gt_path,
                       const std::filesystem::path& out_dir, const PipelineConfig& cfg);

}  // namespace sbdsal
