#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "layers.hpp"

namespace mammo {

inline constexpr std::size_t kHiddenChannels = 64;
inline constexpr std::size_t kLatentChannels = 16;
inline constexpr std::size_t kDownsampleFactor = 16;

struct LayerSpec {
  std::string name;
  std::size_t in_channels;
  std::size_t out_channels;
  int stride;
  Activation activation;
  bool shuffle;  // followed by a pixel shuffle with r = 2

  std::size_t parameter_count() const { return out_channels * in_channels * 9 + out_channels; }
};

/// The fixed convolutional autoencoder. Hidden width 64 and latent width 16
/// are the unique uniform widths that reproduce the published parameter
/// totals (268,368 for the compressor, 454,724 for the decompressor).
struct ArchitectureSpec {
  std::vector<LayerSpec> compressor;
  std::vector<LayerSpec> decompressor;

  std::size_t compressor_parameters() const { return sum(compressor); }
  std::size_t decompressor_parameters() const { return sum(decompressor); }

  /// All layers in canonical order: compressor then decompressor.
  std::vector<LayerSpec> layers() const {
    std::vector<LayerSpec> all = compressor;
    all.insert(all.end(), decompressor.begin(), decompressor.end());
    return all;
  }

 private:
  static std::size_t sum(const std::vector<LayerSpec>& layers) {
    std::size_t total = 0;
    for (const auto& l : layers) total += l.parameter_count();
    return total;
  }
};

inline ArchitectureSpec build_architecture() {
  constexpr std::size_t h = kHiddenChannels;
  ArchitectureSpec arch;
  for (int stage = 1; stage <= 4; ++stage) {
    const std::string prefix = "enc.s" + std::to_string(stage);
    arch.compressor.push_back({prefix + ".c1", stage == 1 ? 1 : h, h, 1, Activation::ReLU, false});
    arch.compressor.push_back({prefix + ".c2", h, h, 2, Activation::ReLU, false});
  }
  arch.compressor.push_back({"enc.out", h, kLatentChannels, 1, Activation::ClippedReLU1, false});

  arch.decompressor.push_back({"dec.in", kLatentChannels, h, 1, Activation::ReLU, false});
  for (int block = 1; block <= 3; ++block)
    arch.decompressor.push_back({"dec.u" + std::to_string(block), h, 4 * h, 1, Activation::ReLU, true});
  arch.decompressor.push_back({"dec.u4", h, 4, 1, Activation::ClippedReLU1, true});
  return arch;
}

}  // namespace mammo
