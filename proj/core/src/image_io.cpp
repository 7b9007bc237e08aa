#include "sbdsal/image_io.hpp"

#include <algorithm>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <memory>
#include <stdexcept>
#include <vector>

#include <jpeglib.h>
#include <png.h>

namespace sbdsal {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
  FilePtr f(std::fopen(path.string().c_str(), mode));
  if (!f) throw std::runtime_error("cannot open " + path.string());
  return f;
}

struct Decoded {
  int width = 0;
  int height = 0;
  int channels = 0;  // 1 or 3
  std::vector<std::uint8_t> pixels;
};

Decoded decode_png(std::FILE* f, const std::string& name) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw std::runtime_error("png: allocation failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw std::runtime_error("png: allocation failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("png: failed to decode " + name);
  }
  png_init_io(png, f);
  png_read_info(png, info);

  png_byte color_type = png_get_color_type(png, info);
  png_byte bit_depth = png_get_bit_depth(png, info);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (bit_depth == 16) png_set_strip_16(png);
  if (color_type & PNG_COLOR_MASK_ALPHA || png_get_valid(png, info, PNG_INFO_tRNS))
    png_set_strip_alpha(png);
  png_read_update_info(png, info);

  Decoded out;
  out.width = static_cast<int>(png_get_image_width(png, info));
  out.height = static_cast<int>(png_get_image_height(png, info));
  out.channels = png_get_channels(png, info);
  if (out.channels != 1 && out.channels != 3) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("png: unsupported channel layout in " + name);
  }
  std::size_t row_bytes = png_get_rowbytes(png, info);
  out.pixels.resize(row_bytes * out.height);
  std::vector<png_bytep> rows(out.height);
  for (int y = 0; y < out.height; ++y) rows[y] = out.pixels.data() + row_bytes * y;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return out;
}

struct JpegErrorMgr {
  jpeg_error_mgr pub;
  std::jmp_buf jump;
};

void jpeg_error_exit(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
  std::longjmp(err->jump, 1);
}

Decoded decode_jpeg(std::FILE* f, const std::string& name) {
  jpeg_decompress_struct cinfo;
  JpegErrorMgr err;
  cinfo.err = jpeg_std_error(&err.pub);
  err.pub.error_exit = jpeg_error_exit;
  if (setjmp(err.jump)) {
    jpeg_destroy_decompress(&cinfo);
    throw std::runtime_error("jpeg: failed to decode " + name);
  }
  jpeg_create_decompress(&cinfo);
  jpeg_stdio_src(&cinfo, f);
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = JCS_RGB;
  jpeg_start_decompress(&cinfo);

  Decoded out;
  out.width = static_cast<int>(cinfo.output_width);
  out.height = static_cast<int>(cinfo.output_height);
  out.channels = 3;
  out.pixels.resize(static_cast<std::size_t>(out.width) * out.height * 3);
  std::size_t stride = static_cast<std::size_t>(out.width) * 3;
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = out.pixels.data() + stride * cinfo.output_scanline;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return out;
}

Decoded decode_file(const std::filesystem::path& path) {
  FilePtr f = open_file(path, "rb");
  unsigned char magic[2] = {0, 0};
  if (std::fread(magic, 1, 2, f.get()) != 2)
    throw std::runtime_error("cannot read " + path.string());
  std::rewind(f.get());
  if (magic[0] == 0x89 && magic[1] == 'P') return decode_png(f.get(), path.string());
  if (magic[0] == 0xFF && magic[1] == 0xD8) return decode_jpeg(f.get(), path.string());
  throw std::runtime_error("unsupported image format: " + path.string());
}

}  // namespace

RgbImage read_image(const std::filesystem::path& path) {
  Decoded d = decode_file(path);
  RgbImage img(d.width, d.height);
  if (d.channels == 3) {
    img.data = std::move(d.pixels);
  } else {
    for (std::size_t i = 0; i < d.pixels.size(); ++i) {
      img.data[3 * i] = img.data[3 * i + 1] = img.data[3 * i + 2] = d.pixels[i];
    }
  }
  return img;
}

BinaryMask read_mask(const std::filesystem::path& path) {
  Decoded d = decode_file(path);
  BinaryMask mask(d.width, d.height);
  std::size_t n = mask.values.size();
  for (std::size_t i = 0; i < n; ++i) {
    int gray = d.channels == 1
                   ? d.pixels[i]
                   : static_cast<int>(std::lround(
                         (d.pixels[3 * i] + d.pixels[3 * i + 1] + d.pixels[3 * i + 2]) / 3.0));
    mask.values[i] = gray > 127 ? 1 : 0;
  }
  return mask;
}

SaliencyMap read_gray_png(const std::filesystem::path& path) {
  Decoded d = decode_file(path);
  SaliencyMap map(d.width, d.height);
  for (std::size_t i = 0; i < map.values.size(); ++i) {
    double gray = d.channels == 1
                      ? d.pixels[i]
                      : (d.pixels[3 * i] + d.pixels[3 * i + 1] + d.pixels[3 * i + 2]) / 3.0;
    map.values[i] = gray / 255.0;
  }
  return map;
}

void write_gray_png(const std::filesystem::path& path, const SaliencyMap& map) {
  if (map.values.empty()) throw std::invalid_argument("write_gray_png: empty map");
  std::vector<std::uint8_t> gray(map.values.size());
  for (std::size_t i = 0; i < gray.size(); ++i)
    gray[i] = static_cast<std::uint8_t>(
        std::lround(std::clamp(map.values[i], 0.0, 1.0) * 255.0));

  FilePtr f = open_file(path, "wb");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw std::runtime_error("png: allocation failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("png: allocation failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("png: failed to write " + path.string());
  }
  png_init_io(png, f.get());
  png_set_IHDR(png, info, map.width, map.height, 8, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < map.height; ++y)
    png_write_row(png, gray.data() + static_cast<std::size_t>(y) * map.width);
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace sbdsal
