#include "sbdsal/refine.hpp"

#include <cmath>
#include <stdexcept>

namespace sbdsal {

std::vector<double> refine_scores(const SuperpixelGraph& g, const GeodesicMatrix& gd) {
  const int n = g.count;
  if (static_cast<int>(g.mean_posterior.size()) != n)
    throw std::invalid_argument("refine_scores: mean_posterior not filled");
  if (gd.dist.rows() != n || gd.dist.cols() != n)
    throw std::invalid_argument("refine_scores: geodesic matrix size mismatch");

  const double denom = 2.0 * gd.sigma_col * gd.sigma_col;
  std::vector<double> scores(n);
  for (int q = 0; q < n; ++q) {
    double acc = 0.0, wsum = 0.0;
    for (int j = 0; j < n; ++j) {
      double d = gd.dist(q, j);
      double w = std::exp(-d * d / denom);
      acc += w * g.mean_posterior[j];
      wsum += w;
    }
    scores[q] = acc / wsum;  // wsum >= 1 from the self term
  }
  return scores;
}

SaliencyMap refine_map(const SuperpixelGraph& g, const GeodesicMatrix& gd) {
  std::vector<double> scores = refine_scores(g, gd);
  SaliencyMap painted(g.width, g.height);
  for (std::size_t i = 0; i < painted.values.size(); ++i)
    painted.values[i] = scores[g.labels[i]];
  return normalize_map(painted);
}

}  // namespace sbdsal
