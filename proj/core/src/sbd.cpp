#include "sbdsal/sbd.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sbdsal/color.hpp"
#include "sbdsal/linalg.hpp"

namespace sbdsal {

BorderGroups select_border_groups(int width, int height, int border_width) {
  if (border_width < 1) throw std::invalid_argument("select_border_groups: border width < 1");
  if (2 * border_width >= std::min(width, height))
    throw std::invalid_argument("select_border_groups: border width " +
                                std::to_string(border_width) + " too wide for " +
                                std::to_string(width) + "x" + std::to_string(height));

  BorderGroups bg;
  auto& [top, bottom, left, right] = bg.sides;
  for (int y = 0; y < border_width; ++y)
    for (int x = 0; x < width; ++x) top.push_back(y * width + x);
  for (int y = height - border_width; y < height; ++y)
    for (int x = 0; x < width; ++x) bottom.push_back(y * width + x);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < border_width; ++x) left.push_back(y * width + x);
  for (int y = 0; y < height; ++y)
    for (int x = width - border_width; x < width; ++x) right.push_back(y * width + x);

  // Groups pair neighboring connective sides; corner patches appear once.
  auto unite = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> u;
    u.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
  };
  bg.groups[0] = unite(top, left);
  bg.groups[1] = unite(top, right);
  bg.groups[2] = unite(bottom, left);
  bg.groups[3] = unite(bottom, right);
  return bg;
}

double EigenFloor::floor_for(double trace, int dim) const {
  return std::max(rel * std::max(trace, 0.0) / dim, abs);
}

Eigen::MatrixXd BackgroundModel::whitening() const {
  return eigenvalues.array().rsqrt().matrix().asDiagonal() * eigenvectors.transpose();
}

BackgroundModel background_model_from_moments(const Eigen::VectorXd& mean,
                                              const Eigen::MatrixXd& covariance,
                                              EigenFloor floor) {
  if (covariance.rows() != covariance.cols() || covariance.rows() != mean.size())
    throw std::invalid_argument("background model: covariance/mean size mismatch");
  SymmetricEigen se = eigen_sym(covariance);
  double eps = floor.floor_for(covariance.trace(), static_cast<int>(mean.size()));

  BackgroundModel model;
  model.mean_feature = mean;
  model.eigenvectors = std::move(se.vectors);
  model.eigenvalues = se.values.cwiseMax(eps);
  model.projected_mean = model.eigenvectors.transpose() * mean;
  return model;
}

BackgroundModel fit_background_model(const Eigen::MatrixXd& features, EigenFloor floor) {
  const Eigen::Index n = features.cols();
  if (n < 2) throw std::invalid_argument("fit_background_model: needs at least 2 patches");
  Eigen::VectorXd mean = features.rowwise().mean();
  Eigen::MatrixXd centered = features.colwise() - mean;
  Eigen::MatrixXd cov = (centered * centered.transpose()) / static_cast<double>(n);
  return background_model_from_moments(mean, cov, floor);
}

double mahalanobis_distance(const BackgroundModel& model, const Eigen::VectorXd& f) {
  if (f.size() != model.mean_feature.size())
    throw std::invalid_argument("mahalanobis_distance: feature dimension mismatch");
  Eigen::VectorXd offset = model.eigenvectors.transpose() * f - model.projected_mean;
  return (model.eigenvalues.array().rsqrt() * offset.array()).matrix().norm();
}

std::array<SaliencyMap, 4> mahalanobis_distance_maps(const MultiChannelImage& mc,
                                                     const std::array<BackgroundModel, 4>& models,
                                                     int patch_size) {
  const int n = static_cast<int>(mc.plane_size());
  std::array<SaliencyMap, 4> maps;
  for (auto& m : maps) m = SaliencyMap(mc.width, mc.height);

  std::array<Eigen::MatrixXd, 4> whiten;
  std::array<Eigen::VectorXd, 4> center;
  for (int q = 0; q < 4; ++q) {
    whiten[q] = models[q].whitening();
    center[q] = whiten[q] * models[q].mean_feature;
  }

  constexpr int kBlock = 4096;
  std::vector<int> ids(kBlock);
  for (int start = 0; start < n; start += kBlock) {
    int count = std::min(kBlock, n - start);
    ids.resize(count);
    std::iota(ids.begin(), ids.end(), start);
    Eigen::MatrixXd block = extract_features_at(mc, patch_size, ids);
    for (int q = 0; q < 4; ++q) {
      Eigen::MatrixXd projected = whiten[q] * block;
      projected.colwise() -= center[q];
      Eigen::VectorXd norms = projected.colwise().norm();
      std::copy(norms.data(), norms.data() + count, maps[q].values.begin() + start);
    }
  }
  return maps;
}

SaliencyMap apply_mean_threshold(const SaliencyMap& d) {
  double mean = map_mean(d);
  SaliencyMap out = d;
  for (double& v : out.values)
    if (v < mean) v = 0.0;
  return out;
}

SaliencyMap threshold_distance_map(const SaliencyMap& d) {
  return normalize_map(apply_mean_threshold(d));
}

std::array<int, 4> entropy_weights_from(const std::array<double, 4>& entropies) {
  double avg = (entropies[0] + entropies[1] + entropies[2] + entropies[3]) / 4.0;
  std::array<int, 4> w{};
  for (int q = 0; q < 4; ++q) w[q] = entropies[q] <= avg ? 1 : 0;
  return w;
}

std::array<int, 4> entropy_weights(const std::array<SaliencyMap, 4>& maps) {
  std::array<double, 4> e{};
  for (int q = 0; q < 4; ++q) e[q] = map_entropy(maps[q]);
  return entropy_weights_from(e);
}

SingleScaleResult coarse_saliency_single_scale_detail(const RgbImage& img,
                                                      const PipelineConfig& cfg) {
  cfg.validate();
  if (!img.valid()) throw std::invalid_argument("coarse_saliency: invalid image");
  if (std::min(img.width, img.height) < kMinPipelineSize)
    throw std::invalid_argument("coarse_saliency: image below " +
                                std::to_string(kMinPipelineSize) + "px minimum");

  const int bw = cfg.effective_border_width();
  MultiChannelImage mc = make_multichannel(img);
  BorderGroups groups = select_border_groups(img.width, img.height, bw);

  // Extract each border patch once, then gather per-group columns.
  std::vector<int> band;
  for (const auto& side : groups.sides) band.insert(band.end(), side.begin(), side.end());
  std::sort(band.begin(), band.end());
  band.erase(std::unique(band.begin(), band.end()), band.end());
  Eigen::MatrixXd band_features = extract_features_at(mc, cfg.patch_size, band);
  std::vector<int> band_col(mc.plane_size(), -1);
  for (std::size_t i = 0; i < band.size(); ++i) band_col[band[i]] = static_cast<int>(i);

  EigenFloor floor{cfg.eig_floor_rel, cfg.eig_floor_abs};
  std::array<BackgroundModel, 4> models;
  for (int q = 0; q < 4; ++q) {
    const auto& member = groups.groups[q];
    Eigen::MatrixXd group_features(band_features.rows(),
                                   static_cast<Eigen::Index>(member.size()));
    for (std::size_t i = 0; i < member.size(); ++i)
      group_features.col(static_cast<Eigen::Index>(i)) = band_features.col(band_col[member[i]]);
    models[q] = fit_background_model(group_features, floor);
  }

  SingleScaleResult res;
  res.distance = mahalanobis_distance_maps(mc, models, cfg.patch_size);
  for (int q = 0; q < 4; ++q) {
    res.thresholded[q] = threshold_distance_map(res.distance[q]);
    res.entropy[q] = map_entropy(res.thresholded[q]);
  }
  res.weight = entropy_weights_from(res.entropy);

  int weight_sum = res.weight[0] + res.weight[1] + res.weight[2] + res.weight[3];
  SaliencyMap fused(img.width, img.height);
  for (int q = 0; q < 4; ++q) {
    if (!res.weight[q]) continue;
    for (std::size_t i = 0; i < fused.values.size(); ++i)
      fused.values[i] += res.thresholded[q].values[i];
  }
  for (double& v : fused.values) v /= weight_sum;
  res.coarse = normalize_map(fused);
  return res;
}

SaliencyMap coarse_saliency_single_scale(const RgbImage& img, const PipelineConfig& cfg) {
  return coarse_saliency_single_scale_detail(img, cfg).coarse;
}

SaliencyMap coarse_saliency_multiscale(const RgbImage& img, const PipelineConfig& cfg) {
  cfg.validate();
  if (!img.valid()) throw std::invalid_argument("coarse_saliency: invalid image");
  if (std::min(img.width, img.height) < kMinPipelineSize)
    throw std::invalid_argument("coarse_saliency: image below " +
                                std::to_string(kMinPipelineSize) + "px minimum");

  SaliencyMap sum(img.width, img.height);
  int ran = 0;
  for (double ratio : cfg.scales) {
    int w = static_cast<int>(std::lround(img.width * ratio));
    int h = static_cast<int>(std::lround(img.height * ratio));
    if (std::min(w, h) < kMinPipelineSize) {
      std::cerr << "sbdsal: warning: scale " << ratio << " skipped (" << w << "x" << h
                << " below " << kMinPipelineSize << "px minimum)\n";
      continue;
    }
    RgbImage scaled = ratio == 1.0 ? img : scale_image(img, w, h);
    SaliencyMap per_scale = coarse_saliency_single_scale(scaled, cfg);
    SaliencyMap full = resize_map(per_scale, img.width, img.height);
    for (std::size_t i = 0; i < sum.values.size(); ++i) sum.values[i] += full.values[i];
    ++ran;
  }
  if (ran == 0) throw std::runtime_error("coarse_saliency: no scale could run");
  for (double& v : sum.values) v /= ran;
  return normalize_map(sum);
}

}  // namespace sbdsal
