#include "sbdsal/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sbdsal {

void PipelineConfig::validate() const {
  if (patch_size < 3 || patch_size % 2 == 0)
    throw std::invalid_argument("config: patch_size must be odd and >= 3");
  if (scales.empty()) throw std::invalid_argument("config: scales must not be empty");
  bool has_full = false;
  for (double s : scales) {
    if (!std::isfinite(s) || s <= 0.0 || s > 1.0)
      throw std::invalid_argument("config: scale ratios must lie in (0,1]");
    if (s == 1.0) has_full = true;
  }
  if (!has_full) throw std::invalid_argument("config: scales must include 1.0");
  if (border_width < 0) throw std::invalid_argument("config: border_width must be >= 0");
  if (histogram_bins < 2) throw std::invalid_argument("config: histogram_bins must be >= 2");
  if (superpixel_target < 2)
    throw std::invalid_argument("config: superpixel_target must be >= 2");
  if (!(eig_floor_rel > 0.0) || !(eig_floor_abs > 0.0))
    throw std::invalid_argument("config: eigenvalue floors must be positive");
}

std::vector<double> parse_scale_list(const std::string& text) {
  std::vector<double> scales;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    scales.push_back(std::stod(item));
  }
  if (scales.empty()) throw std::invalid_argument("scales: empty list");
  return scales;
}

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::invalid_argument("config: invalid boolean '" + v + "'");
}

}  // namespace

PipelineConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path.string());

  PipelineConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config: line " + std::to_string(lineno) + " is not key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));

    if (key == "patch_size") cfg.patch_size = std::stoi(value);
    else if (key == "scales") cfg.scales = parse_scale_list(value);
    else if (key == "border_width") cfg.border_width = std::stoi(value);
    else if (key == "histogram_bins") cfg.histogram_bins = std::stoi(value);
    else if (key == "superpixel_target") cfg.superpixel_target = std::stoi(value);
    else if (key == "eig_floor_rel") cfg.eig_floor_rel = std::stod(value);
    else if (key == "eig_floor_abs") cfg.eig_floor_abs = std::stod(value);
    else if (key == "emit_intermediate") cfg.emit_intermediate = parse_bool(value);
    else throw std::runtime_error("config: unknown key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

}  // namespace sbdsal
