#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "tensor.hpp"

namespace mammo {

inline constexpr int kMinBits = 1;
inline constexpr int kMaxBits = 16;

inline void check_bits(int n) {
  require(n >= kMinBits && n <= kMaxBits, ErrorCode::InvalidInput,
          "bit length " + std::to_string(n) + " outside [1, 16]");
}

inline std::uint32_t max_code(int n) { return (std::uint32_t{1} << n) - 1; }

/// Integer latent tensor; every value lies in [0, 2^n - 1].
struct LatentCode {
  int bits = 8;
  std::size_t channels = 0;
  std::size_t height = 0;  // k
  std::size_t width = 0;   // m
  std::vector<std::uint16_t> values;  // (channel, row, column) row-major

  std::size_t element_count() const { return channels * height * width; }

  void validate() const {
    check_bits(bits);
    require(values.size() == element_count(), ErrorCode::ContractViolation, "latent value count mismatch");
    const auto top = max_code(bits);
    for (auto v : values)
      require(v <= top, ErrorCode::ContractViolation,
              "latent value " + std::to_string(v) + " exceeds 2^" + std::to_string(bits) + " - 1");
  }

  friend bool operator==(const LatentCode&, const LatentCode&) = default;
};

/// g = round((2^n - 1) * i), ties away from zero.
template <typename T>
LatentCode float2int(const Tensor3<T>& input, int n) {
  check_bits(n);
  const double scale = static_cast<double>(max_code(n));
  LatentCode code{n, input.channels(), input.height(), input.width(), {}};
  code.values.reserve(input.size());
  for (T v : input.data()) {
    const double x = static_cast<double>(v);
    require(x >= 0.0 && x <= 1.0, ErrorCode::ContractViolation, "quantizer input outside [0, 1]");
    code.values.push_back(static_cast<std::uint16_t>(std::round(scale * x)));
  }
  return code;
}

/// j = g / (2^n - 1). With T = float the result carries an extra storage
/// rounding of at most half an ulp.
template <typename T = float>
Tensor3<T> int2float(const LatentCode& code) {
  check_bits(code.bits);
  const double scale = static_cast<double>(max_code(code.bits));
  std::vector<T> out;
  out.reserve(code.values.size());
  for (auto g : code.values) out.push_back(static_cast<T>(static_cast<double>(g) / scale));
  return Tensor3<T>(code.channels, code.height, code.width, std::move(out));
}

}  // namespace mammo
