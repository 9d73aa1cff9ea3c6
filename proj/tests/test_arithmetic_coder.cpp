#include <gtest/gtest.h>

#include <random>

#include "golden/golden_fixtures.hpp"
#include "mammo/arithmetic_coder.hpp"
#include "oracle/reference_coder.hpp"
#include "test_support.hpp"

using namespace mammo;
using testing_support::error_code_of;

namespace {

std::vector<std::uint8_t> random_stream(std::mt19937_64& rng, std::size_t length, int kind) {
  std::vector<std::uint8_t> s(length);
  for (auto& b : s) {
    switch (kind) {
      case 0: b = static_cast<std::uint8_t>(rng()); break;                      // uniform
      case 1: b = rng() % 100 < 95 ? 0 : static_cast<std::uint8_t>(rng()); break;  // skewed
      case 2: b = static_cast<std::uint8_t>(rng() % 4); break;                   // small alphabet
      default: b = static_cast<std::uint8_t>(length % 251); break;               // constant
    }
  }
  return s;
}

}  // namespace

TEST(FrequencyModel, MatchesNaiveCountsThroughRescales) {
  FrequencyModel model;
  oracle::ReferenceModel naive;
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200000; ++i) {
    const int s = static_cast<int>(rng() % 7 == 0 ? rng() % 256 : rng() % 3);
    ASSERT_EQ(model.total(), naive.total);
    ASSERT_EQ(model.cumulative(s), naive.cum_low(s));
    const std::uint32_t target = static_cast<std::uint32_t>(rng() % model.total());
    const auto found = model.find(target);
    ASSERT_LE(model.cumulative(found), target);
    ASSERT_GT(model.cumulative(found) + model.count(found), target);
    model.update(s);
    naive.update(s);
    ASSERT_LT(model.total(), 1u << 16);
  }
}

TEST(ArithmeticCoder, EmptyStream) {
  EXPECT_TRUE(aac_encode({}).empty());
  EXPECT_TRUE(aac_decode({}, 0).empty());
  const std::vector<std::uint8_t> junk = {0x00};
  EXPECT_EQ(error_code_of([&] { aac_decode(junk, 0); }), ErrorCode::CorruptStream);
  EXPECT_EQ(error_code_of([&] { aac_decode({}, 5); }), ErrorCode::CorruptStream);
}

TEST(ArithmeticCoder, RepeatedSymbolMatchesGoldenPayload) {
  const std::vector<std::uint8_t> s(1000, 0x41);
  const auto payload = aac_encode(s);
  EXPECT_EQ(payload.size(), golden::kRepeated41PayloadLength);
  EXPECT_EQ(payload, golden::kRepeated41Payload);
  EXPECT_EQ(aac_decode(golden::kRepeated41Payload, 1000), s);
}

// The reference coder's worst case over 1,000 seeded 4,096-byte uniform
// streams is 52 bytes of overhead (mean 46.7): the price of learning 256
// counts from a flat start.
TEST(ArithmeticCoder, UniformBytesHaveBoundedOverhead) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_stream(rng, 4096, 0);
    const auto p = aac_encode(s);
    EXPECT_LE(p.size(), 4096u + 64u);
    EXPECT_EQ(aac_decode(p, s.size()), s);
  }
}

TEST(ArithmeticCoder, SkewedStreamCompresses) {
  std::mt19937_64 rng(3);
  for (std::size_t length : {4096u, 20000u, 65536u}) {
    const auto s = random_stream(rng, length, 1);
    EXPECT_LT(aac_encode(s).size(), 0.6 * length);
  }
}

TEST(ArithmeticCoder, AgreesWithReferenceCoder) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = random_stream(rng, rng() % 30000, trial % 4);
    const auto p = aac_encode(s);
    ASSERT_EQ(p, oracle::reference_encode(s)) << trial;
    ASSERT_EQ(oracle::reference_decode(p, s.size()), s);
    ASSERT_EQ(aac_decode(p, s.size()), s);
  }
}

TEST(ArithmeticCoder, LosslessOnManyShortStreams) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto s = random_stream(rng, rng() % 64, trial % 4);
    ASSERT_EQ(aac_decode(aac_encode(s), s.size()), s) << trial;
  }
}

TEST(ArithmeticCoder, TruncatedPayloadIsRejected) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = random_stream(rng, 1 + rng() % 5000, trial % 4);
    const auto p = aac_encode(s);
    for (std::size_t cut = 1; cut <= std::min<std::size_t>(p.size(), 8); ++cut) {
      const std::vector<std::uint8_t> t(p.begin(), p.end() - cut);
      ASSERT_EQ(error_code_of([&] { aac_decode(t, s.size()); }), ErrorCode::CorruptStream)
          << "trial " << trial << " cut " << cut;
    }
  }
}

TEST(ArithmeticCoder, ExtendedOrAlteredTailIsRejected) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = random_stream(rng, 1 + rng() % 5000, trial % 4);
    auto p = aac_encode(s);
    auto longer = p;
    longer.push_back(0);
    EXPECT_EQ(error_code_of([&] { aac_decode(longer, s.size()); }), ErrorCode::CorruptStream);
    auto flipped = p;
    flipped.back() ^= 0x01;
    EXPECT_EQ(error_code_of([&] { aac_decode(flipped, s.size()); }), ErrorCode::CorruptStream);
  }
}

TEST(ArithmeticCoder, WrongCountIsNeverSilent) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_stream(rng, 100 + rng() % 2000, trial % 3);
    const auto p = aac_encode(s);
    EXPECT_THROW(aac_decode(p, s.size() + 50), Error);
  }
}
