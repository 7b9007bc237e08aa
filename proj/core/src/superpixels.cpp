#include "sbdsal/superpixels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include "sbdsal/color.hpp"

namespace sbdsal {

namespace {

constexpr double kCompactness = 10.0;  // color/position trade-off in Lab units
constexpr int kIterations = 10;

struct Cluster {
  double l = 0, a = 0, b = 0, x = 0, y = 0;
};

inline double color_dist2(const ColorPlanes& lab, std::size_t i, const Cluster& c) {
  double dl = lab.ch[0][i] - c.l;
  double da = lab.ch[1][i] - c.a;
  double db = lab.ch[2][i] - c.b;
  return dl * dl + da * da + db * db;
}

double gradient_at(const ColorPlanes& lab, int x, int y) {
  int w = lab.width, h = lab.height;
  auto at = [&](int c, int px, int py) {
    px = std::clamp(px, 0, w - 1);
    py = std::clamp(py, 0, h - 1);
    return lab.ch[c][static_cast<std::size_t>(py) * w + px];
  };
  double g = 0.0;
  for (int c = 0; c < 3; ++c) {
    double dx = at(c, x + 1, y) - at(c, x - 1, y);
    double dy = at(c, x, y + 1) - at(c, x, y - 1);
    g += dx * dx + dy * dy;
  }
  return g;
}

// Relabel into 4-connected components; fragments smaller than min_size are
// absorbed into the component that precedes them in scan order.
int enforce_connectivity(int w, int h, std::vector<int>& labels, int min_size) {
  const int n = w * h;
  std::vector<int> out(n, -1);
  std::vector<int> stack, component;
  int next = 0;
  const int dx[4] = {-1, 1, 0, 0};
  const int dy[4] = {0, 0, -1, 1};

  for (int i = 0; i < n; ++i) {
    if (out[i] >= 0) continue;
    int adjacent = -1;
    int x0 = i % w, y0 = i / w;
    if (x0 > 0 && out[i - 1] >= 0) adjacent = out[i - 1];
    else if (y0 > 0 && out[i - w] >= 0) adjacent = out[i - w];

    component.clear();
    stack.assign(1, i);
    out[i] = next;
    while (!stack.empty()) {
      int p = stack.back();
      stack.pop_back();
      component.push_back(p);
      int px = p % w, py = p / w;
      for (int d = 0; d < 4; ++d) {
        int qx = px + dx[d], qy = py + dy[d];
        if (qx < 0 || qx >= w || qy < 0 || qy >= h) continue;
        int q = qy * w + qx;
        if (out[q] < 0 && labels[q] == labels[i]) {
          out[q] = next;
          stack.push_back(q);
        }
      }
    }
    if (static_cast<int>(component.size()) < min_size && adjacent >= 0) {
      for (int p : component) out[p] = adjacent;
    } else {
      ++next;
    }
  }
  labels.swap(out);
  return next;
}

}  // namespace

SuperpixelGraph superpixel_segment(const RgbImage& img, int target_count) {
  if (!img.valid()) throw std::invalid_argument("superpixel_segment: invalid image");
  if (target_count < 2) throw std::invalid_argument("superpixel_segment: target count < 2");
  const int w = img.width, h = img.height;
  const int n = w * h;
  if (target_count * 4 > n)
    throw std::invalid_argument("superpixel_segment: image too small for target count");

  ColorPlanes lab = srgb_to_lab(img);
  const double interval = std::sqrt(static_cast<double>(n) / target_count);
  const int nx = std::max(1, static_cast<int>(std::lround(w / interval)));
  const int ny = std::max(1, static_cast<int>(std::lround(h / interval)));

  // Grid seeds, nudged to the lowest-gradient spot in a 3x3 neighborhood.
  std::vector<Cluster> clusters;
  clusters.reserve(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      int sx = std::clamp(static_cast<int>((i + 0.5) * w / nx), 0, w - 1);
      int sy = std::clamp(static_cast<int>((j + 0.5) * h / ny), 0, h - 1);
      double best = gradient_at(lab, sx, sy);
      int bx = sx, by = sy;
      for (int oy = -1; oy <= 1; ++oy) {
        for (int ox = -1; ox <= 1; ++ox) {
          int px = std::clamp(sx + ox, 0, w - 1);
          int py = std::clamp(sy + oy, 0, h - 1);
          double grad = gradient_at(lab, px, py);
          if (grad < best) {
            best = grad;
            bx = px;
            by = py;
          }
        }
      }
      std::size_t idx = static_cast<std::size_t>(by) * w + bx;
      clusters.push_back({lab.ch[0][idx], lab.ch[1][idx], lab.ch[2][idx],
                          static_cast<double>(bx), static_cast<double>(by)});
    }
  }
  const int k = static_cast<int>(clusters.size());

  // Initial assignment by seed grid cell so no pixel is ever unlabeled.
  std::vector<int> labels(n);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      labels[y * w + x] = std::min(ny - 1, y * ny / h) * nx + std::min(nx - 1, x * nx / w);

  const double spatial_scale = (kCompactness / interval) * (kCompactness / interval);
  std::vector<double> dist(n);
  for (int iter = 0; iter < kIterations; ++iter) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
    for (int c = 0; c < k; ++c) {
      const Cluster& cl = clusters[c];
      int x0 = std::max(0, static_cast<int>(std::floor(cl.x - interval)));
      int x1 = std::min(w - 1, static_cast<int>(std::ceil(cl.x + interval)));
      int y0 = std::max(0, static_cast<int>(std::floor(cl.y - interval)));
      int y1 = std::min(h - 1, static_cast<int>(std::ceil(cl.y + interval)));
      for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
          std::size_t i = static_cast<std::size_t>(y) * w + x;
          double dxp = x - cl.x, dyp = y - cl.y;
          double d = color_dist2(lab, i, cl) + (dxp * dxp + dyp * dyp) * spatial_scale;
          if (d < dist[i]) {
            dist[i] = d;
            labels[i] = c;
          }
        }
      }
    }
    // Recenter clusters on their members.
    std::vector<Cluster> sums(k);
    std::vector<int> counts(k, 0);
    for (int i = 0; i < n; ++i) {
      Cluster& s = sums[labels[i]];
      s.l += lab.ch[0][i];
      s.a += lab.ch[1][i];
      s.b += lab.ch[2][i];
      s.x += i % w;
      s.y += i / w;
      counts[labels[i]]++;
    }
    for (int c = 0; c < k; ++c) {
      if (counts[c] == 0) continue;
      clusters[c] = {sums[c].l / counts[c], sums[c].a / counts[c], sums[c].b / counts[c],
                     sums[c].x / counts[c], sums[c].y / counts[c]};
    }
  }

  int min_size = std::max(1, static_cast<int>(interval * interval / 4.0));
  int count = enforce_connectivity(w, h, labels, min_size);

  SuperpixelGraph g;
  g.width = w;
  g.height = h;
  g.count = count;
  g.labels = std::move(labels);
  g.sizes.assign(count, 0);
  g.mean_lab.assign(count, {0.0, 0.0, 0.0});
  for (int i = 0; i < n; ++i) {
    int s = g.labels[i];
    g.sizes[s]++;
    g.mean_lab[s][0] += lab.ch[0][i];
    g.mean_lab[s][1] += lab.ch[1][i];
    g.mean_lab[s][2] += lab.ch[2][i];
  }
  for (int s = 0; s < count; ++s)
    for (double& v : g.mean_lab[s]) v /= g.sizes[s];

  // Region adjacency from 4-neighbor label changes.
  std::set<std::pair<int, int>> pairs;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      int a = g.labels[y * w + x];
      if (x + 1 < w) {
        int b = g.labels[y * w + x + 1];
        if (a != b) pairs.insert({std::min(a, b), std::max(a, b)});
      }
      if (y + 1 < h) {
        int b = g.labels[(y + 1) * w + x];
        if (a != b) pairs.insert({std::min(a, b), std::max(a, b)});
      }
    }
  }
  g.edges.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    double dl = g.mean_lab[a][0] - g.mean_lab[b][0];
    double da = g.mean_lab[a][1] - g.mean_lab[b][1];
    double db = g.mean_lab[a][2] - g.mean_lab[b][2];
    g.edges.push_back({a, b, std::sqrt(dl * dl + da * da + db * db)});
  }
  return g;
}

void set_mean_posterior(SuperpixelGraph& g, const SaliencyMap& posterior) {
  if (posterior.width != g.width || posterior.height != g.height)
    throw std::invalid_argument("set_mean_posterior: map/graph size mismatch");
  g.mean_posterior.assign(g.count, 0.0);
  for (std::size_t i = 0; i < posterior.values.size(); ++i)
    g.mean_posterior[g.labels[i]] += posterior.values[i];
  for (int s = 0; s < g.count; ++s) g.mean_posterior[s] /= g.sizes[s];
}

}  // namespace sbdsal
