#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "quantizer.hpp"

namespace mammo {

/// ceil(elements * n / 8)
inline std::uint64_t symbol_count(std::uint64_t elements, int n) {
  return (elements * static_cast<std::uint64_t>(n) + 7) / 8;
}

/// Linearizes the latent in (channel, row, column) order, each value as n
/// bits MSB first, and cuts the bit string into bytes. The last byte is
/// zero-padded on the right.
inline std::vector<std::uint8_t> pack_bits(const LatentCode& code) {
  check_bits(code.bits);
  std::vector<std::uint8_t> out;
  out.reserve(symbol_count(code.values.size(), code.bits));
  std::uint32_t acc = 0;
  int filled = 0;
  for (std::uint32_t v : code.values) {
    acc = (acc << code.bits) | v;
    filled += code.bits;
    while (filled >= 8) {
      filled -= 8;
      out.push_back(static_cast<std::uint8_t>(acc >> filled));
    }
    acc &= (std::uint32_t{1} << filled) - 1;
  }
  if (filled > 0) out.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
  return out;
}

inline LatentCode unpack_bits(std::span<const std::uint8_t> symbols, std::size_t channels, std::size_t height,
                              std::size_t width, int n) {
  check_bits(n);
  LatentCode code{n, channels, height, width, {}};
  const std::size_t count = code.element_count();
  require(symbols.size() == symbol_count(count, n), ErrorCode::CorruptStream,
          "symbol stream has " + std::to_string(symbols.size()) + " bytes, expected " +
              std::to_string(symbol_count(count, n)));
  code.values.reserve(count);
  std::uint32_t acc = 0;
  int filled = 0;
  std::size_t pos = 0;
  const std::uint32_t mask = max_code(n);
  for (std::size_t i = 0; i < count; ++i) {
    while (filled < n) {
      acc = (acc << 8) | symbols[pos++];
      filled += 8;
    }
    filled -= n;
    code.values.push_back(static_cast<std::uint16_t>((acc >> filled) & mask));
    acc &= (std::uint32_t{1} << filled) - 1;
  }
  require(acc == 0, ErrorCode::CorruptStream, "nonzero padding bits after last element");
  return code;
}

}  // namespace mammo
