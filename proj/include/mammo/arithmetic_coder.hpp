#pragma once

// Adaptive order-0 arithmetic coder over byte symbols, in the integer
// formulation of Witten, Neal and Cleary with 32-bit low/high registers.
//
// Model: 256 counts starting at 1, +1 per coded symbol; when the total
// reaches 2^16 every count is halved rounding up. Output bits are written
// MSB first. The flush writes one quarter-selector bit plus the pending
// underflow bits, then zero-pads the last byte. An empty symbol stream
// codes to an empty payload; the symbol count travels out of band.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace mammo {

/// Symbol counts with a Fenwick tree for O(log 256) cumulative queries.
class FrequencyModel {
 public:
  static constexpr std::size_t kSymbols = 256;
  static constexpr std::uint32_t kRescaleThreshold = 1u << 16;

  FrequencyModel() { reset(); }

  void reset() {
    counts_.fill(1);
    rebuild();
  }

  std::uint32_t total() const { return total_; }
  std::uint32_t count(std::size_t symbol) const { return counts_[symbol]; }

  /// Sum of counts of all symbols below `symbol`.
  std::uint32_t cumulative(std::size_t symbol) const {
    std::uint32_t sum = 0;
    for (std::size_t i = symbol; i > 0; i -= i & (~i + 1)) sum += tree_[i];
    return sum;
  }

  /// The symbol s with cumulative(s) <= target < cumulative(s) + count(s).
  std::size_t find(std::uint32_t target) const {
    std::size_t pos = 0;
    for (std::size_t step = kSymbols; step > 0; step >>= 1) {
      if (pos + step <= kSymbols && tree_[pos + step] <= target) {
        pos += step;
        target -= tree_[pos];
      }
    }
    return pos;
  }

  void update(std::size_t symbol) {
    ++counts_[symbol];
    ++total_;
    for (std::size_t i = symbol + 1; i <= kSymbols; i += i & (~i + 1)) ++tree_[i];
    if (total_ >= kRescaleThreshold) {
      for (auto& c : counts_) c = (c + 1) / 2;
      rebuild();
    }
  }

 private:
  void rebuild() {
    tree_.fill(0);
    total_ = 0;
    for (std::size_t s = 0; s < kSymbols; ++s) {
      total_ += counts_[s];
      for (std::size_t i = s + 1; i <= kSymbols; i += i & (~i + 1)) tree_[i] += counts_[s];
    }
  }

  std::array<std::uint32_t, kSymbols> counts_{};
  std::array<std::uint32_t, kSymbols + 1> tree_{};
  std::uint32_t total_ = 0;
};

namespace detail {
inline constexpr std::uint64_t kTop = 0xFFFFFFFFull;
inline constexpr std::uint64_t kHalf = 0x80000000ull;
inline constexpr std::uint64_t kFirstQuarter = 0x40000000ull;
inline constexpr std::uint64_t kThirdQuarter = 0xC0000000ull;
}  // namespace detail

class ArithmeticEncoder {
 public:
  void encode(std::uint8_t symbol) {
    using namespace detail;
    const std::uint64_t range = high_ - low_ + 1;
    const std::uint64_t total = model_.total();
    const std::uint64_t cum_lo = model_.cumulative(symbol);
    const std::uint64_t cum_hi = cum_lo + model_.count(symbol);
    high_ = low_ + range * cum_hi / total - 1;
    low_ = low_ + range * cum_lo / total;
    for (;;) {
      if (high_ < kHalf) {
        emit(0);
      } else if (low_ >= kHalf) {
        emit(1);
        low_ -= kHalf;
        high_ -= kHalf;
      } else if (low_ >= kFirstQuarter && high_ < kThirdQuarter) {
        ++pending_;
        low_ -= kFirstQuarter;
        high_ -= kFirstQuarter;
      } else {
        break;
      }
      low_ <<= 1;
      high_ = (high_ << 1) | 1;
    }
    model_.update(symbol);
    ++coded_;
  }

  /// Flushes and returns the payload. The encoder must not be reused.
  std::vector<std::uint8_t> finish() {
    if (coded_ == 0) return {};
    ++pending_;
    emit(low_ >= detail::kFirstQuarter ? 1 : 0);
    if (bit_count_ > 0) out_.push_back(static_cast<std::uint8_t>(partial_ << (8 - bit_count_)));
    return std::move(out_);
  }

 private:
  void put_bit(unsigned bit) {
    partial_ = static_cast<std::uint8_t>((partial_ << 1) | bit);
    if (++bit_count_ == 8) {
      out_.push_back(partial_);
      partial_ = 0;
      bit_count_ = 0;
    }
  }
  void emit(unsigned bit) {
    put_bit(bit);
    for (; pending_ > 0; --pending_) put_bit(bit ^ 1u);
  }

  FrequencyModel model_;
  std::uint64_t low_ = 0;
  std::uint64_t high_ = detail::kTop;
  std::uint64_t pending_ = 0;
  std::uint64_t coded_ = 0;
  std::vector<std::uint8_t> out_;
  std::uint8_t partial_ = 0;
  int bit_count_ = 0;
};

/// Decodes a payload produced by ArithmeticEncoder. Besides reproducing the
/// symbols it checks that the payload ends exactly where the encoder's flush
/// would have ended it, so truncated or padded payloads are rejected.
class ArithmeticDecoder {
 public:
  explicit ArithmeticDecoder(std::span<const std::uint8_t> payload) : payload_(payload) {
    for (int i = 0; i < 32; ++i) value_ = (value_ << 1) | next_bit();
  }

  std::uint8_t decode() {
    using namespace detail;
    const std::uint64_t range = high_ - low_ + 1;
    const std::uint64_t total = model_.total();
    if (value_ < low_ || value_ > high_) throw Error(ErrorCode::CorruptStream, "code value left the interval");
    const auto target = static_cast<std::uint32_t>(((value_ - low_ + 1) * total - 1) / range);
    const std::size_t symbol = model_.find(target);
    const std::uint64_t cum_lo = model_.cumulative(symbol);
    const std::uint64_t cum_hi = cum_lo + model_.count(symbol);
    high_ = low_ + range * cum_hi / total - 1;
    low_ = low_ + range * cum_lo / total;
    for (;;) {
      if (high_ < kHalf) {
        pending_ = 0;
      } else if (low_ >= kHalf) {
        pending_ = 0;
        low_ -= kHalf;
        high_ -= kHalf;
        value_ -= kHalf;
      } else if (low_ >= kFirstQuarter && high_ < kThirdQuarter) {
        ++pending_;
        low_ -= kFirstQuarter;
        high_ -= kFirstQuarter;
        value_ -= kFirstQuarter;
      } else {
        break;
      }
      low_ <<= 1;
      high_ = (high_ << 1) | 1;
      value_ = (value_ << 1) | next_bit();
      ++shifts_;
    }
    model_.update(symbol);
    return static_cast<std::uint8_t>(symbol);
  }

  /// Verifies the flush bits, the zero padding and the payload length.
  void finish() const {
    const std::uint64_t total_bits = shifts_ + 2;
    require(payload_.size() == (total_bits + 7) / 8, ErrorCode::CorruptStream,
            "payload is " + std::to_string(payload_.size()) + " bytes, decoded stream ends after " +
                std::to_string((total_bits + 7) / 8));
    const std::uint64_t flush_start = shifts_ - pending_;
    const unsigned selector = low_ >= detail::kFirstQuarter ? 1 : 0;
    require(bit_at(flush_start) == selector, ErrorCode::CorruptStream, "flush selector bit mismatch");
    for (std::uint64_t i = flush_start + 1; i < total_bits; ++i)
      require(bit_at(i) == (selector ^ 1u), ErrorCode::CorruptStream, "flush follow bits mismatch");
    for (std::uint64_t i = total_bits; i < payload_.size() * 8; ++i)
      require(bit_at(i) == 0, ErrorCode::CorruptStream, "nonzero padding after flush");
  }

 private:
  unsigned bit_at(std::uint64_t i) const {
    if (i / 8 >= payload_.size()) return 0;
    return (payload_[i / 8] >> (7 - i % 8)) & 1u;
  }
  std::uint64_t next_bit() {
    // A well-formed stream of B bits is read up to bit B + 29.
    if (bit_pos_ >= payload_.size() * 8 + 30) throw Error(ErrorCode::CorruptStream, "payload exhausted");
    return bit_at(bit_pos_++);
  }

  std::span<const std::uint8_t> payload_;
  FrequencyModel model_;
  std::uint64_t low_ = 0;
  std::uint64_t high_ = detail::kTop;
  std::uint64_t value_ = 0;
  std::uint64_t bit_pos_ = 0;
  std::uint64_t shifts_ = 0;
  std::uint64_t pending_ = 0;
};

inline std::vector<std::uint8_t> aac_encode(std::span<const std::uint8_t> symbols) {
  ArithmeticEncoder enc;
  for (auto s : symbols) enc.encode(s);
  return enc.finish();
}

inline std::vector<std::uint8_t> aac_decode(std::span<const std::uint8_t> payload, std::uint64_t count) {
  if (count == 0) {
    require(payload.empty(), ErrorCode::CorruptStream, "nonempty payload for zero symbols");
    return {};
  }
  require(!payload.empty(), ErrorCode::CorruptStream, "empty payload for nonzero symbol count");
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(count, std::uint64_t{1} << 24)));
  ArithmeticDecoder dec(payload);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(dec.decode());
  dec.finish();
  return out;
}

}  // namespace mammo
