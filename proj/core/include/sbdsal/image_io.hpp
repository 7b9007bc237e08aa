#pragma once

#include <filesystem>

#include "sbdsal/image.hpp"
#include "sbdsal/saliency_map.hpp"

namespace sbdsal {

/// Load an 8-bit PNG or JPEG (detected by magic bytes) as RGB. Gray, palette
/// and alpha variants are converted. Throws std::runtime_error on failure.
RgbImage read_image(const std::filesystem::path& path);

/// Load a ground-truth mask: the image is reduced to a single channel and any
/// value > 127 counts as foreground.
BinaryMask read_mask(const std::filesystem::path& path);

/// Load an 8-bit grayscale PNG back as a map with values level/255.
SaliencyMap read_gray_png(const std::filesystem::path& path);

/// Write a map as 8-bit grayscale PNG, level = round(255 * clamp(value,0,1)).
void write_gray_png(const std::filesystem::path& path, const SaliencyMap& map);

}  // namespace sbdsal
