#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "model.hpp"

namespace mammo {

/// Raw grayscale samples at a declared bit depth (8, 12 or 16).
struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  int depth = 16;
  std::vector<std::uint16_t> pixels;

  std::uint32_t max_value() const { return (std::uint32_t{1} << depth) - 1; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

inline bool supported_depth(int depth) { return depth == 8 || depth == 12 || depth == 16; }

inline void validate(const GrayImage& img) {
  require(supported_depth(img.depth), ErrorCode::InvalidInput,
          "unsupported bit depth " + std::to_string(img.depth) + " (expected 8, 12 or 16)");
  require(img.pixels.size() == img.width * img.height, ErrorCode::InvalidInput, "pixel count mismatch");
  const auto top = img.max_value();
  for (auto p : img.pixels)
    require(p <= top, ErrorCode::InvalidInput,
            "pixel value " + std::to_string(p) + " exceeds " + std::to_string(img.depth) + "-bit range");
}

inline NormalizedImage normalize(const GrayImage& img) {
  validate(img);
  const double scale = img.max_value();
  NormalizedImage out{img.height, img.width, img.depth, {}};
  out.pixels.reserve(img.pixels.size());
  for (auto p : img.pixels) out.pixels.push_back(static_cast<float>(p / scale));
  return out;
}

/// Scales back to the given depth, rounding half away from zero and clamping.
inline GrayImage denormalize(const NormalizedImage& img, int depth) {
  require(supported_depth(depth), ErrorCode::InvalidInput, "unsupported bit depth " + std::to_string(depth));
  GrayImage out{img.width, img.height, depth, {}};
  const double top = out.max_value();
  out.pixels.reserve(img.pixels.size());
  for (float v : img.pixels)
    out.pixels.push_back(static_cast<std::uint16_t>(std::clamp(std::round(v * top), 0.0, top)));
  return out;
}

inline std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::Io, "cannot open " + path.string());
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), {});
}

inline void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(static_cast<bool>(out), ErrorCode::Io, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  require(static_cast<bool>(out), ErrorCode::Io, "write failed for " + path.string());
}

// PGM (P5). maxval < 256 uses one byte per sample, otherwise two bytes
// big-endian. The bit depth is the smallest supported depth covering maxval
// unless overridden.

inline int depth_for_maxval(std::uint32_t maxval) {
  if (maxval <= 255) return 8;
  if (maxval <= 4095) return 12;
  return 16;
}

inline GrayImage decode_pgm(std::span<const std::uint8_t> bytes, int depth_override = 0) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < bytes.size()) {
      if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(bytes[pos])) {
        ++pos;
      } else {
        break;
      }
    }
  };
  auto number = [&]() -> std::uint64_t {
    skip_space();
    require(pos < bytes.size() && std::isdigit(bytes[pos]), ErrorCode::Malformed, "PGM header field expected");
    std::uint64_t v = 0;
    while (pos < bytes.size() && std::isdigit(bytes[pos])) {
      v = v * 10 + (bytes[pos++] - '0');
      require(v <= 0xFFFFFFFFull, ErrorCode::Malformed, "PGM header value too large");
    }
    return v;
  };
  require(bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5', ErrorCode::BadMagic, "not a binary PGM (P5)");
  pos = 2;
  GrayImage img;
  img.width = number();
  img.height = number();
  const auto maxval = number();
  require(maxval >= 1 && maxval <= 65535, ErrorCode::Malformed, "PGM maxval out of range");
  require(pos < bytes.size() && std::isspace(bytes[pos]), ErrorCode::Malformed, "PGM header not terminated");
  ++pos;
  img.depth = depth_override ? depth_override : depth_for_maxval(static_cast<std::uint32_t>(maxval));
  const std::size_t sample = maxval < 256 ? 1 : 2;
  const std::size_t count = img.width * img.height;
  require(bytes.size() - pos >= count * sample, ErrorCode::Truncated, "PGM raster shorter than header declares");
  img.pixels.resize(count);
  for (std::size_t i = 0; i < count; ++i)
    img.pixels[i] = sample == 1 ? bytes[pos + i]
                                : static_cast<std::uint16_t>((bytes[pos + 2 * i] << 8) | bytes[pos + 2 * i + 1]);
  validate(img);
  return img;
}

inline std::vector<std::uint8_t> encode_pgm(const GrayImage& img) {
  validate(img);
  const std::uint32_t maxval = img.max_value();
  std::string header = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n" +
                       std::to_string(maxval) + "\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  for (auto p : img.pixels) {
    if (maxval < 256) {
      out.push_back(static_cast<std::uint8_t>(p));
    } else {
      out.push_back(static_cast<std::uint8_t>(p >> 8));
      out.push_back(static_cast<std::uint8_t>(p & 0xFF));
    }
  }
  return out;
}

// Raw format: samples in a headerless file, one byte each for depth 8 and
// two bytes little-endian otherwise, plus a sidecar `<file>.hdr` with lines
// "width W", "height H", "depth D".

inline std::filesystem::path sidecar_path(const std::filesystem::path& raw) {
  return std::filesystem::path(raw.string() + ".hdr");
}

inline GrayImage read_raw(const std::filesystem::path& path, int depth_override = 0) {
  std::ifstream hdr(sidecar_path(path));
  require(static_cast<bool>(hdr), ErrorCode::Io, "missing sidecar header " + sidecar_path(path).string());
  GrayImage img;
  std::string key;
  long long value = 0;
  bool have_w = false, have_h = false, have_d = false;
  while (hdr >> key >> value) {
    require(value >= 0, ErrorCode::Malformed, "negative value in sidecar header");
    if (key == "width") img.width = static_cast<std::size_t>(value), have_w = true;
    else if (key == "height") img.height = static_cast<std::size_t>(value), have_h = true;
    else if (key == "depth") img.depth = static_cast<int>(value), have_d = true;
    else throw Error(ErrorCode::Malformed, "unknown sidecar key '" + key + "'");
  }
  require(have_w && have_h && have_d, ErrorCode::Malformed, "sidecar header needs width, height and depth");
  if (depth_override) img.depth = depth_override;
  require(supported_depth(img.depth), ErrorCode::InvalidInput, "unsupported bit depth " + std::to_string(img.depth));

  const auto bytes = read_file(path);
  const std::size_t sample = img.depth == 8 ? 1 : 2;
  const std::size_t count = img.width * img.height;
  require(bytes.size() == count * sample, ErrorCode::Truncated,
          "raw file has " + std::to_string(bytes.size()) + " bytes, expected " + std::to_string(count * sample));
  img.pixels.resize(count);
  for (std::size_t i = 0; i < count; ++i)
    img.pixels[i] = sample == 1 ? bytes[i] : static_cast<std::uint16_t>(bytes[2 * i] | (bytes[2 * i + 1] << 8));
  validate(img);
  return img;
}

inline void write_raw(const std::filesystem::path& path, const GrayImage& img) {
  validate(img);
  std::vector<std::uint8_t> bytes;
  bytes.reserve(img.pixels.size() * 2);
  for (auto p : img.pixels) {
    bytes.push_back(static_cast<std::uint8_t>(p & 0xFF));
    if (img.depth != 8) bytes.push_back(static_cast<std::uint8_t>(p >> 8));
  }
  write_file(path, bytes);
  std::ofstream hdr(sidecar_path(path), std::ios::trunc);
  require(static_cast<bool>(hdr), ErrorCode::Io, "cannot create " + sidecar_path(path).string());
  hdr << "width " << img.width << "\nheight " << img.height << "\ndepth " << img.depth << "\n";
}

inline bool is_raw_path(const std::filesystem::path& path) { return path.extension() == ".raw"; }

/// Loads a PGM or, for `.raw` paths, a raw file with its sidecar header.
inline GrayImage load_image(const std::filesystem::path& path, int depth_override = 0) {
  if (is_raw_path(path)) return read_raw(path, depth_override);
  return decode_pgm(read_file(path), depth_override);
}

inline void save_image(const std::filesystem::path& path, const GrayImage& img) {
  if (is_raw_path(path)) write_raw(path, img);
  else write_file(path, encode_pgm(img));
}

}  // namespace mammo
