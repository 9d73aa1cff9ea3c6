#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "model.hpp"
#include "quantizer.hpp"

namespace mammo {

inline void require_same_dims(const NormalizedImage& a, const NormalizedImage& b) {
  require(a.height == b.height && a.width == b.width, ErrorCode::DimMismatch,
          std::to_string(a.height) + "x" + std::to_string(a.width) + " vs " + std::to_string(b.height) + "x" +
              std::to_string(b.width));
  require(a.pixels.size() == a.height * a.width && b.pixels.size() == b.height * b.width,
          ErrorCode::ContractViolation, "pixel count mismatch");
}

/// Peak signal-to-noise ratio in dB for peak 1. Identical images give +inf.
inline double psnr(const NormalizedImage& ref, const NormalizedImage& test) {
  require_same_dims(ref, test);
  require(!ref.pixels.empty(), ErrorCode::InvalidInput, "empty image");
  double sum = 0.0;
  for (std::size_t i = 0; i < ref.pixels.size(); ++i) {
    const double d = static_cast<double>(ref.pixels[i]) - static_cast<double>(test.pixels[i]);
    sum += d * d;
  }
  const double mse = sum / static_cast<double>(ref.pixels.size());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(1.0 / mse);
}

struct SsimParams {
  int window = 11;
  double sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 1.0;
};

namespace detail {

inline std::vector<double> gaussian_taps(int size, double sigma) {
  std::vector<double> taps(static_cast<std::size_t>(size));
  const double centre = (size - 1) / 2.0;
  double sum = 0.0;
  for (int i = 0; i < size; ++i) {
    taps[i] = std::exp(-(i - centre) * (i - centre) / (2.0 * sigma * sigma));
    sum += taps[i];
  }
  for (auto& t : taps) t /= sum;
  return taps;
}

// Separable valid-region filter: output is (h - size + 1) x (w - size + 1).
inline std::vector<double> filter_valid(const std::vector<double>& src, std::size_t h, std::size_t w,
                                        const std::vector<double>& taps) {
  const std::size_t n = taps.size();
  const std::size_t oh = h - n + 1, ow = w - n + 1;
  std::vector<double> rows(h * ow, 0.0);
  for (std::size_t y = 0; y < h; ++y)
    for (std::size_t x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += taps[k] * src[y * w + x + k];
      rows[y * ow + x] = acc;
    }
  std::vector<double> out(oh * ow, 0.0);
  for (std::size_t y = 0; y < oh; ++y)
    for (std::size_t x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += taps[k] * rows[(y + k) * ow + x];
      out[y * ow + x] = acc;
    }
  return out;
}

}  // namespace detail

/// Mean structural similarity over all fully-contained Gaussian windows.
inline double ssim(const NormalizedImage& ref, const NormalizedImage& test, const SsimParams& params = {}) {
  require_same_dims(ref, test);
  const auto win = static_cast<std::size_t>(params.window);
  require(ref.height >= win && ref.width >= win, ErrorCode::InvalidInput,
          "SSIM needs images of at least " + std::to_string(win) + "x" + std::to_string(win));
  const std::size_t h = ref.height, w = ref.width, count = h * w;
  std::vector<double> x(count), y(count), xx(count), yy(count), xy(count);
  for (std::size_t i = 0; i < count; ++i) {
    x[i] = ref.pixels[i];
    y[i] = test.pixels[i];
    xx[i] = x[i] * x[i];
    yy[i] = y[i] * y[i];
    xy[i] = x[i] * y[i];
  }
  const auto taps = detail::gaussian_taps(params.window, params.sigma);
  const auto mx = detail::filter_valid(x, h, w, taps);
  const auto my = detail::filter_valid(y, h, w, taps);
  const auto mxx = detail::filter_valid(xx, h, w, taps);
  const auto myy = detail::filter_valid(yy, h, w, taps);
  const auto mxy = detail::filter_valid(xy, h, w, taps);

  const double c1 = std::pow(params.k1 * params.dynamic_range, 2);
  const double c2 = std::pow(params.k2 * params.dynamic_range, 2);
  double sum = 0.0;
  for (std::size_t i = 0; i < mx.size(); ++i) {
    const double vx = mxx[i] - mx[i] * mx[i];
    const double vy = myy[i] - my[i] * my[i];
    const double cov = mxy[i] - mx[i] * my[i];
    sum += ((2 * mx[i] * my[i] + c1) * (2 * cov + c2)) /
           ((mx[i] * mx[i] + my[i] * my[i] + c1) * (vx + vy + c2));
  }
  return sum / static_cast<double>(mx.size());
}

/// Shannon entropy in bits of the latent value histogram.
inline double latent_entropy(const LatentCode& code) {
  require(!code.values.empty(), ErrorCode::InvalidInput, "empty latent");
  std::vector<std::uint64_t> hist(std::size_t{1} << code.bits, 0);
  for (auto v : code.values) ++hist.at(v);
  const double total = static_cast<double>(code.values.size());
  double h = 0.0;
  for (auto c : hist)
    if (c) {
      const double p = c / total;
      h -= p * std::log2(p);
    }
  return h;
}

/// Occupied latent values and their counts, ascending by value.
inline std::map<std::uint32_t, std::uint64_t> latent_histogram(const LatentCode& code) {
  std::map<std::uint32_t, std::uint64_t> hist;
  for (auto v : code.values) ++hist[v];
  return hist;
}

struct BppReport {
  double bpp = 0.0;
  double compression_factor = 0.0;
};

/// bpp = 8 * file size / pixels; factor = source depth / bpp.
inline BppReport bpp_report(std::uint64_t file_size, std::uint64_t width, std::uint64_t height, int depth) {
  require(width * height > 0, ErrorCode::InvalidInput, "zero pixel count");
  require(file_size > 0, ErrorCode::InvalidInput, "zero file size");
  const double bpp = 8.0 * static_cast<double>(file_size) / static_cast<double>(width * height);
  return {bpp, depth / bpp};
}

struct MetricsReport {
  std::string reference;
  std::string test;
  double psnr = 0.0;
  double ssim = 0.0;
  std::optional<double> entropy;
  std::optional<double> bpp;
  std::optional<double> compression_factor;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

namespace detail {
inline std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}
inline nlohmann::json json_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}
inline double from_json_number(const nlohmann::json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw Error(ErrorCode::Malformed, "bad numeric field '" + s + "'");
  }
  return j.get<double>();
}
}  // namespace detail

/// Line-oriented key=value text; absent optional fields are omitted.
inline std::string to_text(const MetricsReport& r) {
  std::ostringstream os;
  os << "reference=" << r.reference << "\n";
  os << "test=" << r.test << "\n";
  os << "psnr=" << detail::format_double(r.psnr) << "\n";
  os << "ssim=" << detail::format_double(r.ssim) << "\n";
  if (r.entropy) os << "entropy=" << detail::format_double(*r.entropy) << "\n";
  if (r.bpp) os << "bpp=" << detail::format_double(*r.bpp) << "\n";
  if (r.compression_factor) os << "compression_factor=" << detail::format_double(*r.compression_factor) << "\n";
  return os.str();
}

/// JSON object; an infinite pSNR is written as the string "inf".
inline nlohmann::json to_json(const MetricsReport& r) {
  nlohmann::json j;
  j["reference"] = r.reference;
  j["test"] = r.test;
  j["psnr"] = detail::json_number(r.psnr);
  j["ssim"] = detail::json_number(r.ssim);
  if (r.entropy) j["entropy"] = *r.entropy;
  if (r.bpp) j["bpp"] = *r.bpp;
  if (r.compression_factor) j["compression_factor"] = *r.compression_factor;
  return j;
}

inline MetricsReport metrics_from_json(const nlohmann::json& j) {
  try {
    MetricsReport r;
    r.reference = j.at("reference").get<std::string>();
    r.test = j.at("test").get<std::string>();
    r.psnr = detail::from_json_number(j.at("psnr"));
    r.ssim = detail::from_json_number(j.at("ssim"));
    if (j.contains("entropy")) r.entropy = detail::from_json_number(j["entropy"]);
    if (j.contains("bpp")) r.bpp = detail::from_json_number(j["bpp"]);
    if (j.contains("compression_factor")) r.compression_factor = detail::from_json_number(j["compression_factor"]);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Malformed, std::string("metrics report: ") + e.what());
  }
}

}  // namespace mammo
