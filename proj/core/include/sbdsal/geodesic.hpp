#pragma once

#include <Eigen/Dense>

#include "sbdsal/superpixels.hpp"

namespace sbdsal {

/// All-pairs geodesic distances between superpixels: accumulated color-edge
/// weights along shortest paths in the adjacency graph.
struct GeodesicMatrix {
  Eigen::MatrixXd dist;     // count x count, zero diagonal, symmetric
  double sigma_col = 0.0;   // std deviation of all edge weights, floored at 1e-6
};

/// Dijkstra from every superpixel. Only count, edges and mean_lab of the
/// graph are consulted. A disconnected graph is first bridged by adding
/// minimum-color-distance edges between components.
GeodesicMatrix geodesic_distances(const SuperpixelGraph& g);

}  // namespace sbdsal
