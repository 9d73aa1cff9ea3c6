#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "architecture.hpp"
#include "layers.hpp"
#include "tensor.hpp"
#include "weights.hpp"

namespace mammo {

/// Grayscale image with pixels range-normalized to [0, 1].
struct NormalizedImage {
  std::size_t height = 0;
  std::size_t width = 0;
  int depth = 16;  // bit depth of the source
  std::vector<float> pixels;

  float& at(std::size_t y, std::size_t x) { return pixels[y * width + x]; }
  float at(std::size_t y, std::size_t x) const { return pixels[y * width + x]; }

  friend bool operator==(const NormalizedImage&, const NormalizedImage&) = default;
};

struct Extent {
  std::size_t height = 0;
  std::size_t width = 0;
  friend bool operator==(const Extent&, const Extent&) = default;
};

inline std::size_t round_up(std::size_t v, std::size_t m) { return (v + m - 1) / m * m; }

/// Zero-pads bottom and right to the next multiples of `multiple`.
/// Returns the padded image together with the original extent.
inline std::pair<NormalizedImage, Extent> pad_to_multiple(const NormalizedImage& img,
                                                          std::size_t multiple = kDownsampleFactor) {
  NormalizedImage out;
  out.height = round_up(img.height, multiple);
  out.width = round_up(img.width, multiple);
  out.depth = img.depth;
  out.pixels.assign(out.height * out.width, 0.0f);
  for (std::size_t y = 0; y < img.height; ++y)
    std::copy_n(img.pixels.begin() + y * img.width, img.width, out.pixels.begin() + y * out.width);
  return {std::move(out), Extent{img.height, img.width}};
}

inline NormalizedImage crop(const NormalizedImage& img, Extent extent) {
  require(extent.height <= img.height && extent.width <= img.width, ErrorCode::ContractViolation,
          "crop extent exceeds image");
  NormalizedImage out{extent.height, extent.width, img.depth, std::vector<float>(extent.height * extent.width)};
  for (std::size_t y = 0; y < extent.height; ++y)
    std::copy_n(img.pixels.begin() + y * img.width, extent.width, out.pixels.begin() + y * extent.width);
  return out;
}

/// Latent shape produced for a padded image of the given size.
inline Extent latent_extent(std::size_t height, std::size_t width) {
  return {(height + kDownsampleFactor - 1) / kDownsampleFactor, (width + kDownsampleFactor - 1) / kDownsampleFactor};
}

/// Runs the compressor: four down-conv blocks and the output convolution.
/// The result has 16 channels at 1/16 resolution with values in [0, 1].
inline FeatureMap compress_forward(const NormalizedImage& img, const WeightBundle& weights) {
  require(img.height > 0 && img.width > 0, ErrorCode::ContractViolation, "empty image");
  require(img.height % kDownsampleFactor == 0 && img.width % kDownsampleFactor == 0, ErrorCode::ContractViolation,
          "image dims must be multiples of 16; pad first");
  require(img.pixels.size() == img.height * img.width, ErrorCode::ContractViolation, "pixel count mismatch");

  FeatureMap x(1, img.height, img.width, img.pixels);
  for (const auto& spec : build_architecture().compressor) x = conv2d(x, weights.layer(spec.name));
  return x;
}

/// Runs the decompressor: input convolution and four up-conv blocks, each
/// ending in a pixel shuffle with r = 2.
inline NormalizedImage decompress_forward(const FeatureMap& latent, const WeightBundle& weights, int depth = 16) {
  require(latent.channels() == kLatentChannels, ErrorCode::ContractViolation,
          "latent has " + std::to_string(latent.channels()) + " channels, expected 16");
  FeatureMap x = latent;
  for (const auto& spec : build_architecture().decompressor) {
    x = conv2d(x, weights.layer(spec.name));
    if (spec.shuffle) x = pixel_shuffle(x, 2);
  }
  return NormalizedImage{x.height(), x.width(), depth, std::move(x.data())};
}

}  // namespace mammo
