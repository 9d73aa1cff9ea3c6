#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "image_io.hpp"

namespace mammo {

inline constexpr double kPatchMeanTolerance = 1e-9;
inline constexpr std::size_t kAttemptsPerPatch = 1000;

/// Training inclusion rule on normalized pixels: more than half nonzero,
/// mean neither 0 nor 1, and positive variance.
inline bool patch_qualifies(std::span<const float> pixels) {
  if (pixels.empty()) return false;
  std::size_t nonzero = 0;
  double sum = 0.0;
  for (float p : pixels) {
    nonzero += p != 0.0f;
    sum += p;
  }
  const double n = static_cast<double>(pixels.size());
  if (2 * nonzero <= pixels.size()) return false;
  const double mean = sum / n;
  if (std::abs(mean) <= kPatchMeanTolerance || std::abs(mean - 1.0) <= kPatchMeanTolerance) return false;
  double var = 0.0;
  for (float p : pixels) var += (p - mean) * (p - mean);
  return var / n > 0.0;
}

/// Integer moments of a window of raw samples.
struct WindowStats {
  std::uint64_t pixels = 0;
  std::uint64_t nonzero = 0;
  std::uint64_t sum = 0;
  std::uint64_t sum_squares = 0;
};

/// The same inclusion rule evaluated on exact integer moments.
inline bool patch_qualifies(const WindowStats& s, std::uint32_t max_value) {
  if (s.pixels == 0 || 2 * s.nonzero <= s.pixels) return false;
  const double mean = static_cast<double>(s.sum) / (static_cast<double>(s.pixels) * max_value);
  if (std::abs(mean) <= kPatchMeanTolerance || std::abs(mean - 1.0) <= kPatchMeanTolerance) return false;
  using u128 = unsigned __int128;
  return u128{s.pixels} * s.sum_squares > u128{s.sum} * s.sum;
}

/// Summed-area tables giving WindowStats for any rectangle in O(1).
class IntegralStats {
 public:
  explicit IntegralStats(const GrayImage& img)
      : stride_(img.width + 1),
        nonzero_((img.height + 1) * stride_, 0),
        sum_((img.height + 1) * stride_, 0),
        sum_squares_((img.height + 1) * stride_, 0) {
    for (std::size_t y = 0; y < img.height; ++y) {
      std::uint64_t row_nz = 0, row_sum = 0, row_sq = 0;
      for (std::size_t x = 0; x < img.width; ++x) {
        const std::uint64_t p = img.pixels[y * img.width + x];
        row_nz += p != 0;
        row_sum += p;
        row_sq += p * p;
        const std::size_t i = (y + 1) * stride_ + x + 1;
        nonzero_[i] = nonzero_[i - stride_] + row_nz;
        sum_[i] = sum_[i - stride_] + row_sum;
        sum_squares_[i] = sum_squares_[i - stride_] + row_sq;
      }
    }
  }

  WindowStats window(std::size_t y0, std::size_t x0, std::size_t h, std::size_t w) const {
    auto rect = [&](const std::vector<std::uint64_t>& t) {
      const std::size_t a = y0 * stride_ + x0, b = y0 * stride_ + x0 + w;
      const std::size_t c = (y0 + h) * stride_ + x0, d = (y0 + h) * stride_ + x0 + w;
      return t[d] - t[b] - t[c] + t[a];
    };
    return {h * w, rect(nonzero_), rect(sum_), rect(sum_squares_)};
  }

 private:
  std::size_t stride_;
  std::vector<std::uint64_t> nonzero_, sum_, sum_squares_;
};

struct PatchSource {
  std::string name;
  GrayImage image;
};

struct Patch {
  std::string source;
  std::size_t y = 0;
  std::size_t x = 0;
  GrayImage image;
};

struct PatchExtraction {
  std::vector<Patch> patches;
  std::vector<std::string> warnings;
};

inline GrayImage cut_patch(const GrayImage& img, std::size_t y0, std::size_t x0, std::size_t size) {
  GrayImage out{size, size, img.depth, std::vector<std::uint16_t>(size * size)};
  for (std::size_t y = 0; y < size; ++y)
    std::copy_n(img.pixels.begin() + (y0 + y) * img.width + x0, size, out.pixels.begin() + y * size);
  return out;
}

/// Samples `count` qualifying size x size patches at uniformly random
/// positions, spreading the quota evenly over the sources in order.
/// Deterministic for a fixed seed and source list.
inline PatchExtraction extract_patches(std::span<const PatchSource> sources, std::size_t count, std::size_t size,
                                       std::uint64_t seed) {
  require(size >= 16, ErrorCode::InvalidInput, "patch size must be at least 16");
  PatchExtraction result;
  std::mt19937_64 rng(seed);

  std::vector<const PatchSource*> usable;
  for (const auto& src : sources) {
    if (src.image.width < size || src.image.height < size)
      result.warnings.push_back(src.name + ": smaller than " + std::to_string(size) + "x" + std::to_string(size) +
                                ", skipped");
    else
      usable.push_back(&src);
  }

  for (std::size_t i = 0; i < usable.size() && result.patches.size() < count; ++i) {
    const auto& src = *usable[i];
    const std::size_t remaining_sources = usable.size() - i;
    const std::size_t quota = (count - result.patches.size() + remaining_sources - 1) / remaining_sources;
    validate(src.image);
    const IntegralStats stats(src.image);
    const std::size_t span_y = src.image.height - size + 1;
    const std::size_t span_x = src.image.width - size + 1;
    std::size_t taken = 0;
    for (std::size_t attempt = 0; attempt < kAttemptsPerPatch * quota && taken < quota; ++attempt) {
      const std::size_t y0 = rng() % span_y;
      const std::size_t x0 = rng() % span_x;
      if (!patch_qualifies(stats.window(y0, x0, size, size), src.image.max_value())) continue;
      result.patches.push_back({src.name, y0, x0, cut_patch(src.image, y0, x0, size)});
      ++taken;
    }
    if (taken < quota)
      result.warnings.push_back(src.name + ": found " + std::to_string(taken) + " of " + std::to_string(quota) +
                                " qualifying patches");
  }
  if (result.patches.size() < count)
    result.warnings.push_back("extracted " + std::to_string(result.patches.size()) + " of " +
                              std::to_string(count) + " requested patches");
  return result;
}

}  // namespace mammo
