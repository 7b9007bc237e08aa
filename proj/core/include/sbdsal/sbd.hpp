#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "sbdsal/config.hpp"
#include "sbdsal/features.hpp"
#include "sbdsal/image.hpp"
#include "sbdsal/saliency_map.hpp"

namespace sbdsal {

/// Border patch-index sets. The four sides are the top/bottom/left/right
/// bands of the given width (corner pixels belong to both adjacent sides);
/// the four groups are the unions of neighboring sides:
///   groups[0] = top+left, groups[1] = top+right,
///   groups[2] = bottom+left, groups[3] = bottom+right.
struct BorderGroups {
  std::array<std::vector<int>, 4> sides;   // top, bottom, left, right
  std::array<std::vector<int>, 4> groups;  // sorted, duplicate-free pixel ids
};

/// Border sets for a width x height grid. Requires border_width >= 1 and
/// 2*border_width < min(width, height).
BorderGroups select_border_groups(int width, int height, int border_width);

/// Eigenvalue floor policy for near-singular border covariances.
struct EigenFloor {
  double rel = 1e-6;   // times trace(C)/dim
  double abs = 1e-12;  // hard lower bound
  double floor_for(double trace, int dim) const;
};

/// Gaussian-style model of one border group: mean patch, eigenvectors and
/// (floored) eigenvalues of the patch covariance, and the mean projected into
/// the eigenbasis.
struct BackgroundModel {
  Eigen::VectorXd mean_feature;
  Eigen::MatrixXd eigenvectors;   // columns, descending eigenvalue order
  Eigen::VectorXd eigenvalues;    // floored, descending
  Eigen::VectorXd projected_mean; // eigenvectors' * mean_feature

  int dim() const { return static_cast<int>(mean_feature.size()); }
  /// diag(eigenvalues)^(-1/2) * eigenvectors' — maps a feature offset into
  /// whitened coordinates where the model distance is the plain 2-norm.
  Eigen::MatrixXd whitening() const;
};

/// Fit from a dim x n matrix of feature columns (n >= 2). Covariance is the
/// 1/n sample covariance; eigenvalues are clamped from below by the floor.
BackgroundModel fit_background_model(const Eigen::MatrixXd& features, EigenFloor floor = {});

/// Fit from precomputed moments (mean and covariance).
BackgroundModel background_model_from_moments(const Eigen::VectorXd& mean,
                                              const Eigen::MatrixXd& covariance,
                                              EigenFloor floor = {});

/// Mahalanobis distance of a feature from the model:
/// || diag(eigenvalues)^(-1/2) (eigenvectors' f - projected_mean) ||_2.
double mahalanobis_distance(const BackgroundModel& model, const Eigen::VectorXd& f);

/// Per-pixel Mahalanobis distance to each of the four models, streamed in
/// pixel blocks.
std::array<SaliencyMap, 4> mahalanobis_distance_maps(const MultiChannelImage& mc,
                                                     const std::array<BackgroundModel, 4>& models,
                                                     int patch_size);

/// Zero every value strictly below the map mean; values at or above it pass
/// through unchanged.
SaliencyMap apply_mean_threshold(const SaliencyMap& d);

/// apply_mean_threshold followed by normalize_map — the adjusted distance map.
SaliencyMap threshold_distance_map(const SaliencyMap& d);

/// Binary fusion weights: weight q is 1 iff entropy(map q) <= mean entropy.
/// At least one weight is always 1.
std::array<int, 4> entropy_weights(const std::array<SaliencyMap, 4>& maps);
std::array<int, 4> entropy_weights_from(const std::array<double, 4>& entropies);

/// Everything the single-scale stage produces, for inspection and tests.
struct SingleScaleResult {
  std::array<SaliencyMap, 4> distance;     // raw Mahalanobis maps
  std::array<SaliencyMap, 4> thresholded;  // adjusted distance maps
  std::array<double, 4> entropy{};
  std::array<int, 4> weight{};
  SaliencyMap coarse;                      // entropy-weighted fusion
};

SingleScaleResult coarse_saliency_single_scale_detail(const RgbImage& img,
                                                      const PipelineConfig& cfg);

/// Entropy-weighted average of the four adjusted distance maps, normalized.
SaliencyMap coarse_saliency_single_scale(const RgbImage& img, const PipelineConfig& cfg);

/// Single-scale maps at each configured ratio, resized to full resolution,
/// averaged and normalized. Ratios whose scaled size falls below the pipeline
/// minimum are skipped with a warning; ratio 1.0 must be present.
SaliencyMap coarse_saliency_multiscale(const RgbImage& img, const PipelineConfig& cfg);

}  // namespace sbdsal
