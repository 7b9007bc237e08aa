#include "sbdsal/saliency_map.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace sbdsal {

SaliencyMap::SaliencyMap(int w, int h, double fill) : width(w), height(h) {
  if (w <= 0 || h <= 0) throw std::invalid_argument("SaliencyMap: non-positive size");
  values.assign(static_cast<std::size_t>(w) * h, fill);
}

double map_mean(const SaliencyMap& m) {
  if (m.values.empty()) throw std::invalid_argument("map_mean: empty map");
  double sum = 0.0;
  for (double v : m.values) sum += v;
  return sum / m.values.size();
}

SaliencyMap normalize_map(const SaliencyMap& m) {
  if (m.values.empty()) throw std::invalid_argument("normalize_map: empty map");
  double lo = m.values[0], hi = m.values[0];
  for (double v : m.values) {
    if (!std::isfinite(v)) throw std::invalid_argument("normalize_map: non-finite value");
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  SaliencyMap out(m.width, m.height);
  if (hi == lo) return out;  // constant map -> all zeros
  double scale = 1.0 / (hi - lo);
  for (std::size_t i = 0; i < m.values.size(); ++i) out.values[i] = (m.values[i] - lo) * scale;
  return out;
}

double map_entropy(const SaliencyMap& m) {
  if (m.values.empty()) throw std::invalid_argument("map_entropy: empty map");
  std::array<std::size_t, 256> hist{};
  for (double v : m.values) {
    int bin = static_cast<int>(v * 256.0);
    hist[std::clamp(bin, 0, 255)]++;
  }
  double n = static_cast<double>(m.values.size());
  double entropy = 0.0;
  for (std::size_t c : hist) {
    if (c == 0) continue;
    double p = c / n;
    entropy -= p * std::log(p);
  }
  return entropy;
}

SaliencyMap resize_map(const SaliencyMap& m, int out_width, int out_height) {
  if (m.values.empty()) throw std::invalid_argument("resize_map: empty map");
  if (out_width < 1 || out_height < 1)
    throw std::invalid_argument("resize_map: non-positive target size");
  if (out_width == m.width && out_height == m.height) return m;

  SaliencyMap out(out_width, out_height);
  for (int y = 0; y < out_height; ++y) {
    double py = (y + 0.5) * static_cast<double>(m.height) / out_height - 0.5;
    py = std::clamp(py, 0.0, static_cast<double>(m.height - 1));
    int y0 = static_cast<int>(py);
    int y1 = std::min(y0 + 1, m.height - 1);
    double fy = py - y0;
    for (int x = 0; x < out_width; ++x) {
      double px = (x + 0.5) * static_cast<double>(m.width) / out_width - 0.5;
      px = std::clamp(px, 0.0, static_cast<double>(m.width - 1));
      int x0 = static_cast<int>(px);
      int x1 = std::min(x0 + 1, m.width - 1);
      double fx = px - x0;
      double top = m.at(x0, y0) + fx * (m.at(x1, y0) - m.at(x0, y0));
      double bot = m.at(x0, y1) + fx * (m.at(x1, y1) - m.at(x0, y1));
      out.at(x, y) = std::clamp(top + fy * (bot - top), 0.0, 1.0);
    }
  }
  return out;
}

}  // namespace sbdsal
