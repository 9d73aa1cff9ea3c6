#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arithmetic_coder.hpp"
#include "bitpack.hpp"
#include "byte_io.hpp"
#include "image_io.hpp"
#include "model.hpp"
#include "quantizer.hpp"
#include "weights.hpp"

namespace mammo {

inline constexpr std::string_view kContainerMagic = "MAMC";
inline constexpr std::uint8_t kContainerVersion = 1;
inline constexpr std::size_t kContainerHeaderSize = 50;

/// Fixed 50-byte MAMC header, all integers little-endian, in field order.
struct ContainerHeader {
  std::uint8_t version = kContainerVersion;
  std::uint8_t flags = 0;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint8_t depth = 16;
  std::uint8_t bits = 8;
  std::uint16_t channels = kLatentChannels;
  std::uint32_t latent_height = 0;  // k
  std::uint32_t latent_width = 0;   // m
  std::uint64_t model_hash = 0;
  std::uint64_t symbol_count = 0;
  std::uint64_t payload_length = 0;

  std::uint64_t latent_elements() const {
    return std::uint64_t{latent_height} * latent_width * channels;
  }

  friend bool operator==(const ContainerHeader&, const ContainerHeader&) = default;
};

struct ContainerFile {
  ContainerHeader header;
  std::vector<std::uint8_t> payload;

  friend bool operator==(const ContainerFile&, const ContainerFile&) = default;
};

inline void validate(const ContainerHeader& h) {
  require(h.flags == 0, ErrorCode::CorruptContainer, "nonzero flags");
  require(supported_depth(h.depth), ErrorCode::CorruptContainer, "unsupported depth " + std::to_string(h.depth));
  require(h.bits >= kMinBits && h.bits <= kMaxBits, ErrorCode::CorruptContainer,
          "bit length " + std::to_string(h.bits) + " outside [1, 16]");
  require(h.channels >= 1, ErrorCode::CorruptContainer, "zero latent channels");
  const auto extent = latent_extent(h.height, h.width);
  const std::uint64_t plane = std::uint64_t{h.latent_height} * h.latent_width;
  require(plane == 0 || plane <= (std::uint64_t{1} << 59) / h.channels, ErrorCode::CorruptContainer,
          "latent too large");
  require(h.latent_height == extent.height && h.latent_width == extent.width, ErrorCode::CorruptContainer,
          "latent dims do not match ceil(image dims / 16)");
  require(h.symbol_count == symbol_count(h.latent_elements(), h.bits), ErrorCode::CorruptContainer,
          "symbol count " + std::to_string(h.symbol_count) + " does not equal ceil(k*m*c*n/8) = " +
              std::to_string(symbol_count(h.latent_elements(), h.bits)));
}

inline std::vector<std::uint8_t> write_container(const ContainerHeader& header, std::span<const std::uint8_t> payload) {
  validate(header);
  require(header.payload_length == payload.size(), ErrorCode::ContractViolation,
          "header payload length does not match payload");
  ByteWriter out;
  out.text(kContainerMagic);
  out.u8(header.version);
  out.u8(header.flags);
  out.u32(header.width);
  out.u32(header.height);
  out.u8(header.depth);
  out.u8(header.bits);
  out.u16(header.channels);
  out.u32(header.latent_height);
  out.u32(header.latent_width);
  out.u64(header.model_hash);
  out.u64(header.symbol_count);
  out.u64(header.payload_length);
  out.raw(payload);
  return out.take();
}

inline std::vector<std::uint8_t> write_container(const ContainerFile& file) {
  return write_container(file.header, file.payload);
}

inline ContainerFile read_container(std::span<const std::uint8_t> bytes) {
  require(bytes.size() >= 4 && std::string_view(reinterpret_cast<const char*>(bytes.data()), 4) == kContainerMagic,
          ErrorCode::BadMagic, "not a MAMC container");
  require(bytes.size() >= kContainerHeaderSize, ErrorCode::Truncated, "container shorter than its 50-byte header");
  ByteReader in(bytes.subspan(4));
  ContainerFile file;
  auto& h = file.header;
  h.version = in.u8();
  require(h.version == kContainerVersion, ErrorCode::BadVersion, "MAMC version " + std::to_string(h.version));
  h.flags = in.u8();
  h.width = in.u32();
  h.height = in.u32();
  h.depth = in.u8();
  h.bits = in.u8();
  h.channels = in.u16();
  h.latent_height = in.u32();
  h.latent_width = in.u32();
  h.model_hash = in.u64();
  h.symbol_count = in.u64();
  h.payload_length = in.u64();
  validate(h);
  require(in.remaining() == h.payload_length, in.remaining() < h.payload_length ? ErrorCode::Truncated
                                                                                 : ErrorCode::CorruptContainer,
          "payload is " + std::to_string(in.remaining()) + " bytes, header declares " +
              std::to_string(h.payload_length));
  auto payload = in.raw(in.remaining());
  file.payload.assign(payload.begin(), payload.end());
  return file;
}

/// Normalize, pad to a multiple of 16, run the compressor, quantize to n bits.
inline LatentCode analyze(const GrayImage& img, const WeightBundle& weights, int n) {
  check_bits(n);
  require(img.width > 0 && img.height > 0, ErrorCode::InvalidInput, "empty image");
  const auto [padded, extent] = pad_to_multiple(normalize(img));
  return float2int(compress_forward(padded, weights), n);
}

/// Packs and entropy-codes a latent into a container for an image of the
/// given original size and depth.
inline ContainerFile encode_latent(const LatentCode& latent, std::uint32_t width, std::uint32_t height, int depth,
                                   std::uint64_t model_hash) {
  latent.validate();
  const auto symbols = pack_bits(latent);
  ContainerFile file;
  auto& h = file.header;
  h.width = width;
  h.height = height;
  h.depth = static_cast<std::uint8_t>(depth);
  h.bits = static_cast<std::uint8_t>(latent.bits);
  h.channels = static_cast<std::uint16_t>(latent.channels);
  h.latent_height = static_cast<std::uint32_t>(latent.height);
  h.latent_width = static_cast<std::uint32_t>(latent.width);
  h.model_hash = model_hash;
  h.symbol_count = symbols.size();
  file.payload = aac_encode(symbols);
  h.payload_length = file.payload.size();
  validate(h);
  return file;
}

/// Entropy-decodes and unpacks the latent stored in a container.
inline LatentCode decode_latent(const ContainerFile& file) {
  const auto& h = file.header;
  validate(h);
  const auto symbols = aac_decode(file.payload, h.symbol_count);
  return unpack_bits(symbols, h.channels, h.latent_height, h.latent_width, h.bits);
}

inline std::vector<std::uint8_t> compress_image(const GrayImage& img, const WeightBundle& weights, int n) {
  validate(img);
  const auto latent = analyze(img, weights, n);
  return write_container(encode_latent(latent, static_cast<std::uint32_t>(img.width),
                                       static_cast<std::uint32_t>(img.height), img.depth, weights.hash()));
}

struct DecompressedImage {
  GrayImage image;
  bool hash_mismatch = false;  // only possible when forced
};

/// Runs the decompressor on a latent and crops/denormalizes to the original image.
inline GrayImage synthesize(const LatentCode& latent, const WeightBundle& weights, std::size_t width,
                            std::size_t height, int depth) {
  const auto full = decompress_forward(int2float(latent), weights, depth);
  return denormalize(crop(full, Extent{height, width}), depth);
}

inline DecompressedImage decompress_image(std::span<const std::uint8_t> bytes, const WeightBundle& weights,
                                          bool force = false) {
  const auto file = read_container(bytes);
  const auto& h = file.header;
  const bool mismatch = h.model_hash != weights.hash();
  require(!mismatch || force, ErrorCode::HashMismatch,
          "container was written with model hash " + std::to_string(h.model_hash) + ", weights hash is " +
              std::to_string(weights.hash()));
  require(h.channels == kLatentChannels, ErrorCode::CorruptContainer,
          "model expects 16 latent channels, container has " + std::to_string(h.channels));
  const auto latent = decode_latent(file);
  if (h.width == 0 || h.height == 0) return {GrayImage{h.width, h.height, h.depth, {}}, mismatch};
  return {synthesize(latent, weights, h.width, h.height, h.depth), mismatch};
}

}  // namespace mammo
