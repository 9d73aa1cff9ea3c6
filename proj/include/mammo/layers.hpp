#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "tensor.hpp"

namespace mammo {

enum class Activation { None, ReLU, ClippedReLU1 };

inline float activate(Activation act, double v) {
  switch (act) {
    case Activation::ReLU: return static_cast<float>(std::max(0.0, v));
    case Activation::ClippedReLU1: return static_cast<float>(std::clamp(v, 0.0, 1.0));
    case Activation::None: break;
  }
  return static_cast<float>(v);
}

/// A 3x3 convolution with zero padding of one pixel on every side.
struct ConvLayer {
  std::string name;
  std::size_t in_channels = 0;
  std::size_t out_channels = 0;
  std::vector<float> kernel;  // out x in x 3 x 3
  std::vector<float> bias;    // out
  int stride = 1;
  Activation activation = Activation::None;

  std::size_t parameter_count() const { return kernel.size() + bias.size(); }

  void validate() const {
    require(in_channels > 0 && out_channels > 0, ErrorCode::ContractViolation, name + ": zero channels");
    require(kernel.size() == out_channels * in_channels * 9, ErrorCode::ContractViolation,
            name + ": kernel size does not match out x in x 3 x 3");
    require(bias.size() == out_channels, ErrorCode::ContractViolation, name + ": bias size does not match out");
    require(stride == 1 || stride == 2, ErrorCode::ContractViolation, name + ": stride must be 1 or 2");
  }
};

inline std::size_t conv_output_extent(std::size_t extent, int stride) {
  return (extent + 2 - 3) / static_cast<std::size_t>(stride) + 1;
}

/// Sums are accumulated in double and rounded to float once per output element.
inline FeatureMap conv2d(const FeatureMap& input, const ConvLayer& layer) {
  layer.validate();
  require(!input.empty(), ErrorCode::ContractViolation, layer.name + ": empty input");
  require(input.channels() == layer.in_channels, ErrorCode::ContractViolation,
          layer.name + ": input has " + std::to_string(input.channels()) + " channels, layer expects " +
              std::to_string(layer.in_channels));

  const std::ptrdiff_t in_h = static_cast<std::ptrdiff_t>(input.height());
  const std::ptrdiff_t in_w = static_cast<std::ptrdiff_t>(input.width());
  const std::ptrdiff_t stride = layer.stride;
  const std::size_t out_h = conv_output_extent(input.height(), layer.stride);
  const std::size_t out_w = conv_output_extent(input.width(), layer.stride);
  FeatureMap output(layer.out_channels, out_h, out_w);

  // Valid output column range [lo, hi) for each horizontal tap.
  std::ptrdiff_t col_lo[3], col_hi[3];
  for (std::ptrdiff_t kx = 0; kx < 3; ++kx) {
    std::ptrdiff_t lo = 0;
    while (lo * stride + kx - 1 < 0) ++lo;
    std::ptrdiff_t hi = in_w - kx < 0 ? 0 : (in_w - kx) / stride + 1;
    col_lo[kx] = lo;
    col_hi[kx] = std::min<std::ptrdiff_t>(hi, static_cast<std::ptrdiff_t>(out_w));
  }

  std::vector<double> acc(out_w);
  for (std::size_t oc = 0; oc < layer.out_channels; ++oc) {
    const float* weights = layer.kernel.data() + oc * layer.in_channels * 9;
    auto out_plane = output.plane(oc);
    for (std::size_t oy = 0; oy < out_h; ++oy) {
      std::fill(acc.begin(), acc.end(), static_cast<double>(layer.bias[oc]));
      for (std::size_t ic = 0; ic < layer.in_channels; ++ic) {
        const float* src_plane = input.plane(ic).data();
        const float* w = weights + ic * 9;
        for (std::ptrdiff_t ky = 0; ky < 3; ++ky) {
          const std::ptrdiff_t iy = static_cast<std::ptrdiff_t>(oy) * stride + ky - 1;
          if (iy < 0 || iy >= in_h) continue;
          const float* row = src_plane + iy * in_w;
          for (std::ptrdiff_t kx = 0; kx < 3; ++kx) {
            const double wv = w[ky * 3 + kx];
            const float* src = row + kx - 1;
            if (stride == 1) {
              for (std::ptrdiff_t ox = col_lo[kx]; ox < col_hi[kx]; ++ox) acc[ox] += wv * src[ox];
            } else {
              for (std::ptrdiff_t ox = col_lo[kx]; ox < col_hi[kx]; ++ox) acc[ox] += wv * src[ox * stride];
            }
          }
        }
      }
      float* dst = out_plane.data() + oy * out_w;
      for (std::size_t ox = 0; ox < out_w; ++ox) dst[ox] = activate(layer.activation, acc[ox]);
    }
  }
  return output;
}

/// Rearranges r*r channel groups into an r-times larger spatial map:
/// out[c, r*y + dy, r*x + dx] = in[c*r*r + dy*r + dx, y, x].
template <typename T>
Tensor3<T> pixel_shuffle(const Tensor3<T>& input, std::size_t r) {
  require(r >= 1, ErrorCode::ContractViolation, "pixel_shuffle: factor must be >= 1");
  require(input.channels() % (r * r) == 0, ErrorCode::ContractViolation,
          "pixel_shuffle: " + std::to_string(input.channels()) + " channels not divisible by " +
              std::to_string(r * r));
  const std::size_t out_c = input.channels() / (r * r);
  const std::size_t h = input.height(), w = input.width();
  Tensor3<T> output(out_c, h * r, w * r);
  for (std::size_t c = 0; c < out_c; ++c)
    for (std::size_t dy = 0; dy < r; ++dy)
      for (std::size_t dx = 0; dx < r; ++dx) {
        const std::size_t src_c = c * r * r + dy * r + dx;
        for (std::size_t y = 0; y < h; ++y)
          for (std::size_t x = 0; x < w; ++x) output(c, r * y + dy, r * x + dx) = input(src_c, y, x);
      }
  return output;
}

/// Inverse of pixel_shuffle.
template <typename T>
Tensor3<T> pixel_unshuffle(const Tensor3<T>& input, std::size_t r) {
  require(r >= 1, ErrorCode::ContractViolation, "pixel_unshuffle: factor must be >= 1");
  require(input.height() % r == 0 && input.width() % r == 0, ErrorCode::ContractViolation,
          "pixel_unshuffle: spatial dims not divisible by factor");
  const std::size_t h = input.height() / r, w = input.width() / r;
  Tensor3<T> output(input.channels() * r * r, h, w);
  for (std::size_t c = 0; c < input.channels(); ++c)
    for (std::size_t dy = 0; dy < r; ++dy)
      for (std::size_t dx = 0; dx < r; ++dx) {
        const std::size_t dst_c = c * r * r + dy * r + dx;
        for (std::size_t y = 0; y < h; ++y)
          for (std::size_t x = 0; x < w; ++x) output(dst_c, y, x) = input(c, r * y + dy, r * x + dx);
      }
  return output;
}

}  // namespace mammo
