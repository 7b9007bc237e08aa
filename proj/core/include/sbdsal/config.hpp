#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace sbdsal {

/// Knobs for the whole detection pipeline. Defaults are the reference
/// parameter set: 7x7 patches, scales 100/50/25%, border band as wide as a
/// patch, 16 histogram bins, ~200 superpixels.
struct PipelineConfig {
  int patch_size = 7;
  std::vector<double> scales = {1.0, 0.5, 0.25};
  int border_width = 0;  // 0 = use patch_size
  int histogram_bins = 16;
  int superpixel_target = 200;
  double eig_floor_rel = 1e-6;   // eigenvalue floor, relative to trace/dim
  double eig_floor_abs = 1e-12;  // absolute eigenvalue floor
  bool emit_intermediate = false;

  int effective_border_width() const { return border_width > 0 ? border_width : patch_size; }

  /// Throws std::invalid_argument if any field is out of contract.
  void validate() const;
};

/// Parse a flat key=value config file ('#' starts a comment). Unknown keys
/// are rejected. Keys: patch_size, scales (comma separated), border_width,
/// histogram_bins, superpixel_target, eig_floor_rel, eig_floor_abs,
/// emit_intermediate.
PipelineConfig load_config_file(const std::filesystem::path& path);

/// Parse "1.0,0.5,0.25" into scale ratios.
std::vector<double> parse_scale_list(const std::string& text);

}  // namespace sbdsal
