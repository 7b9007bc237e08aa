#pragma once

#include <vector>

#include "sbdsal/geodesic.hpp"
#include "sbdsal/saliency_map.hpp"
#include "sbdsal/superpixels.hpp"

namespace sbdsal {

/// Per-superpixel refined saliency: a convex combination of the superpixel
/// posteriors with weights exp(-d_geo^2 / (2 sigma_col^2)), row-normalized.
/// Requires mean_posterior to be filled.
std::vector<double> refine_scores(const SuperpixelGraph& g, const GeodesicMatrix& gd);

/// Paint the refined scores back onto the pixel grid and normalize to [0,1].
SaliencyMap refine_map(const SuperpixelGraph& g, const GeodesicMatrix& gd);

}  // namespace sbdsal
