#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace mammo {

/// Dense 3-D feature map stored row-major as (channel, row, column).
template <typename T>
class Tensor3 {
 public:
  using value_type = T;

  Tensor3() = default;
  Tensor3(std::size_t channels, std::size_t height, std::size_t width, T fill = T{})
      : channels_(channels), height_(height), width_(width), data_(channels * height * width, fill) {}
  Tensor3(std::size_t channels, std::size_t height, std::size_t width, std::vector<T> data)
      : channels_(channels), height_(height), width_(width), data_(std::move(data)) {
    require(data_.size() == channels * height * width, ErrorCode::ContractViolation,
            "tensor data length " + std::to_string(data_.size()) + " does not match " +
                std::to_string(channels) + "x" + std::to_string(height) + "x" + std::to_string(width));
  }

  std::size_t channels() const { return channels_; }
  std::size_t height() const { return height_; }
  std::size_t width() const { return width_; }
  std::size_t size() const { return data_.size(); }
  std::size_t plane_size() const { return height_ * width_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t c, std::size_t y, std::size_t x) { return data_[(c * height_ + y) * width_ + x]; }
  const T& operator()(std::size_t c, std::size_t y, std::size_t x) const {
    return data_[(c * height_ + y) * width_ + x];
  }

  std::span<T> plane(std::size_t c) { return std::span<T>(data_).subspan(c * plane_size(), plane_size()); }
  std::span<const T> plane(std::size_t c) const {
    return std::span<const T>(data_).subspan(c * plane_size(), plane_size());
  }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t channels_ = 0;
  std::size_t height_ = 0;
  std::size_t width_ = 0;
  std::vector<T> data_;
};

using FeatureMap = Tensor3<float>;

}  // namespace mammo
