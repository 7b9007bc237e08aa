#include "sbdsal/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <vector>

namespace sbdsal {

namespace {

constexpr double kSigmaFloor = 1e-6;

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

double lab_distance(const SuperpixelGraph& g, int a, int b) {
  double dl = g.mean_lab[a][0] - g.mean_lab[b][0];
  double da = g.mean_lab[a][1] - g.mean_lab[b][1];
  double db = g.mean_lab[a][2] - g.mean_lab[b][2];
  return std::sqrt(dl * dl + da * da + db * db);
}

}  // namespace

GeodesicMatrix geodesic_distances(const SuperpixelGraph& g) {
  const int n = g.count;
  if (n < 1) throw std::invalid_argument("geodesic_distances: empty graph");

  std::vector<SuperpixelEdge> edges = g.edges;
  for (const auto& e : edges) {
    if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n)
      throw std::invalid_argument("geodesic_distances: edge endpoint out of range");
    if (!(e.weight >= 0.0)) throw std::invalid_argument("geodesic_distances: negative weight");
  }

  // Bridge disconnected components with their nearest-color pair.
  DisjointSet ds(n);
  int components = n;
  for (const auto& e : edges)
    if (ds.unite(e.a, e.b)) --components;
  while (components > 1) {
    int best_a = -1, best_b = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (ds.find(a) == ds.find(b)) continue;
        double d = lab_distance(g, a, b);
        if (d < best) {
          best = d;
          best_a = a;
          best_b = b;
        }
      }
    }
    edges.push_back({best_a, best_b, best});
    ds.unite(best_a, best_b);
    --components;
  }

  // sigma over every color-edge weight in the graph actually used.
  double sum = 0.0, sum2 = 0.0;
  for (const auto& e : edges) {
    sum += e.weight;
    sum2 += e.weight * e.weight;
  }
  double sigma = 0.0;
  if (!edges.empty()) {
    double mean = sum / edges.size();
    sigma = std::sqrt(std::max(0.0, sum2 / edges.size() - mean * mean));
  }

  GeodesicMatrix out;
  out.sigma_col = std::max(sigma, kSigmaFloor);
  out.dist.setConstant(n, n, std::numeric_limits<double>::infinity());

  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (const auto& e : edges) {
    adj[e.a].push_back({e.b, e.weight});
    adj[e.b].push_back({e.a, e.weight});
  }

  using Item = std::pair<double, int>;
  std::vector<double> dist(n);
  for (int src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    dist[src] = 0.0;
    queue.push({0.0, src});
    while (!queue.empty()) {
      auto [d, u] = queue.top();
      queue.pop();
      if (d > dist[u]) continue;
      for (auto [v, w] : adj[u]) {
        double nd = d + w;
        if (nd < dist[v]) {
          dist[v] = nd;
          queue.push({nd, v});
        }
      }
    }
    for (int j = 0; j < n; ++j) out.dist(src, j) = dist[j];
  }
  return out;
}

}  // namespace sbdsal
