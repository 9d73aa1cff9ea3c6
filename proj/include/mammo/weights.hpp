#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "architecture.hpp"
#include "byte_io.hpp"
#include "layers.hpp"

namespace mammo {

// MAMW layout (all integers little-endian):
//   "MAMW" | version u8 = 1 | layer count u16
//   per layer, in canonical order:
//     name length u8 | name bytes
//     kernel rank u8 = 4 | out u32 | in u32 | 3 u32 | 3 u32
//     bias rank u8 = 1   | out u32
//     kernel values f32 (row-major) | bias values f32
inline constexpr std::string_view kWeightsMagic = "MAMW";
inline constexpr std::uint8_t kWeightsVersion = 1;

/// Learnable parameters of every layer in canonical order. Immutable once built.
class WeightBundle {
 public:
  WeightBundle() = default;

  /// Takes ownership of `layers`, checks them against the architecture and
  /// computes the content hash.
  explicit WeightBundle(std::vector<ConvLayer> layers);

  const std::vector<ConvLayer>& layers() const { return layers_; }
  const ConvLayer& layer(std::string_view name) const {
    for (const auto& l : layers_)
      if (l.name == name) return l;
    throw Error(ErrorCode::LayerMismatch, "no layer named " + std::string(name));
  }
  std::uint64_t hash() const { return hash_; }

 private:
  std::vector<ConvLayer> layers_;
  std::uint64_t hash_ = 0;
};

inline std::vector<std::uint8_t> save_weights(std::span<const ConvLayer> layers) {
  ByteWriter out;
  out.text(kWeightsMagic);
  out.u8(kWeightsVersion);
  out.u16(static_cast<std::uint16_t>(layers.size()));
  for (const auto& l : layers) {
    out.u8(static_cast<std::uint8_t>(l.name.size()));
    out.text(l.name);
    out.u8(4);
    out.u32(static_cast<std::uint32_t>(l.out_channels));
    out.u32(static_cast<std::uint32_t>(l.in_channels));
    out.u32(3);
    out.u32(3);
    out.u8(1);
    out.u32(static_cast<std::uint32_t>(l.out_channels));
    for (float v : l.kernel) out.f32(v);
    for (float v : l.bias) out.f32(v);
  }
  return out.take();
}

inline std::vector<std::uint8_t> save_weights(const WeightBundle& bundle) { return save_weights(bundle.layers()); }

inline void check_against_architecture(std::span<const ConvLayer> layers) {
  const auto specs = build_architecture().layers();
  require(layers.size() == specs.size(), ErrorCode::LayerMismatch,
          "expected " + std::to_string(specs.size()) + " layers, got " + std::to_string(layers.size()));
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& spec = specs[i];
    const auto& l = layers[i];
    require(l.name == spec.name, ErrorCode::LayerMismatch,
            "layer " + std::to_string(i) + " is '" + l.name + "', expected '" + spec.name + "'");
    require(l.in_channels == spec.in_channels && l.out_channels == spec.out_channels, ErrorCode::DimMismatch,
            l.name + " declared as " + std::to_string(l.in_channels) + "->" + std::to_string(l.out_channels) +
                ", expected " + std::to_string(spec.in_channels) + "->" + std::to_string(spec.out_channels));
    require(l.kernel.size() == spec.out_channels * spec.in_channels * 9 && l.bias.size() == spec.out_channels,
            ErrorCode::DimMismatch, l.name + ": parameter storage does not match declared dims");
  }
}

inline WeightBundle::WeightBundle(std::vector<ConvLayer> layers) : layers_(std::move(layers)) {
  check_against_architecture(layers_);
  const auto specs = build_architecture().layers();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    layers_[i].stride = specs[i].stride;
    layers_[i].activation = specs[i].activation;
  }
  hash_ = fnv1a64(save_weights(layers_));
}

/// Parses MAMW bytes. When `expected_hash` is given the FNV-1a digest of
/// `bytes` must equal it.
inline WeightBundle load_weights(std::span<const std::uint8_t> bytes,
                                 std::optional<std::uint64_t> expected_hash = std::nullopt) {
  ByteReader in(bytes);
  require(bytes.size() >= 4 && in.text(4) == kWeightsMagic, ErrorCode::BadMagic, "not a MAMW weight file");
  const auto version = in.u8();
  require(version == kWeightsVersion, ErrorCode::BadVersion, "MAMW version " + std::to_string(version));
  const std::size_t count = in.u16();

  const auto specs = build_architecture().layers();
  require(count == specs.size(), ErrorCode::LayerMismatch,
          "expected " + std::to_string(specs.size()) + " layers, file declares " + std::to_string(count));

  std::vector<ConvLayer> layers;
  layers.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    ConvLayer l;
    l.name = in.text(in.u8());
    require(l.name == specs[i].name, ErrorCode::LayerMismatch,
            "layer " + std::to_string(i) + " is '" + l.name + "', expected '" + specs[i].name + "'");
    require(in.u8() == 4, ErrorCode::DimMismatch, l.name + ": kernel rank must be 4");
    l.out_channels = in.u32();
    l.in_channels = in.u32();
    const auto kh = in.u32(), kw = in.u32();
    require(kh == 3 && kw == 3, ErrorCode::DimMismatch, l.name + ": kernel must be 3x3");
    require(in.u8() == 1, ErrorCode::DimMismatch, l.name + ": bias rank must be 1");
    require(in.u32() == l.out_channels, ErrorCode::DimMismatch, l.name + ": bias length must equal out channels");
    require(l.in_channels == specs[i].in_channels && l.out_channels == specs[i].out_channels,
            ErrorCode::DimMismatch,
            l.name + " declared as " + std::to_string(l.in_channels) + "->" + std::to_string(l.out_channels) +
                ", expected " + std::to_string(specs[i].in_channels) + "->" +
                std::to_string(specs[i].out_channels));
    l.kernel.resize(l.out_channels * l.in_channels * 9);
    l.bias.resize(l.out_channels);
    for (auto& v : l.kernel) v = in.f32();
    for (auto& v : l.bias) v = in.f32();
    layers.push_back(std::move(l));
  }
  require(in.remaining() == 0, ErrorCode::Malformed,
          std::to_string(in.remaining()) + " trailing bytes after last layer");

  WeightBundle bundle(std::move(layers));
  if (expected_hash)
    require(bundle.hash() == *expected_hash, ErrorCode::HashMismatch, "weight digest does not match");
  return bundle;
}

/// xorshift64* stream used to fill deterministic fixture weights.
class XorShift64Star {
 public:
  explicit XorShift64Star(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  /// Uniform in [-0.1, 0.1).
  double next_weight() { return (static_cast<double>(next() >> 11) / 9007199254740992.0 - 0.5) * 0.2; }

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kFixtureSeed = 0x9E3779B97F4A7C15ULL;

/// Architecture-shaped weights drawn from xorshift64*, filled layer by layer
/// in canonical order, kernel before bias.
inline WeightBundle fixture_weights(std::uint64_t seed = kFixtureSeed) {
  XorShift64Star rng(seed);
  std::vector<ConvLayer> layers;
  for (const auto& spec : build_architecture().layers()) {
    ConvLayer l{spec.name, spec.in_channels, spec.out_channels, {}, {}, spec.stride, spec.activation};
    l.kernel.resize(spec.out_channels * spec.in_channels * 9);
    l.bias.resize(spec.out_channels);
    for (auto& v : l.kernel) v = static_cast<float>(rng.next_weight());
    for (auto& v : l.bias) v = static_cast<float>(rng.next_weight());
    layers.push_back(std::move(l));
  }
  return WeightBundle(std::move(layers));
}

}  // namespace mammo
