#include <gtest/gtest.h>

#include <filesystem>

#include "mammo/image_io.hpp"
#include "test_support.hpp"

using namespace mammo;
using testing_support::error_code_of;
using testing_support::synthetic_mammogram;

namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "mammo_image_io_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Pgm, SixteenBitRoundTripIsBigEndian) {
  GrayImage img{2, 1, 16, {0x1234, 0xFFFF}};
  const auto bytes = encode_pgm(img);
  const std::string header = "P5\n2 1\n65535\n";
  ASSERT_EQ(bytes.size(), header.size() + 4);
  EXPECT_EQ(bytes[header.size()], 0x12);
  EXPECT_EQ(bytes[header.size() + 1], 0x34);
  EXPECT_EQ(decode_pgm(bytes), img);
}

TEST(Pgm, DepthInferredFromMaxval) {
  for (int depth : {8, 12, 16}) {
    const auto img = synthetic_mammogram(19, 7, depth);
    const auto back = decode_pgm(encode_pgm(img));
    EXPECT_EQ(back, img) << depth;
  }
}

TEST(Pgm, CommentsInHeader) {
  const std::string text = "P5\n# scanner\n2 2\n# range\n255\n";
  std::vector<std::uint8_t> bytes(text.begin(), text.end());
  for (std::uint8_t v : {1, 2, 3, 4}) bytes.push_back(v);
  EXPECT_EQ(decode_pgm(bytes).pixels, (std::vector<std::uint16_t>{1, 2, 3, 4}));
}

TEST(Pgm, Errors) {
  const std::string p2 = "P2\n1 1\n255\n0";
  EXPECT_EQ(error_code_of([&] { decode_pgm({reinterpret_cast<const std::uint8_t*>(p2.data()), p2.size()}); }),
            ErrorCode::BadMagic);
  auto bytes = encode_pgm(synthetic_mammogram(8, 8, 16));
  bytes.pop_back();
  EXPECT_EQ(error_code_of([&] { decode_pgm(bytes); }), ErrorCode::Truncated);
  // A 16-bit sample above the 12-bit range when the depth is forced to 12.
  const auto wide = encode_pgm(GrayImage{1, 1, 16, {5000}});
  EXPECT_EQ(error_code_of([&] { decode_pgm(wide, 12); }), ErrorCode::InvalidInput);
}

TEST(Raw, RoundTripWithSidecar) {
  const auto path = scratch("img.raw");
  for (int depth : {8, 12, 16}) {
    const auto img = synthetic_mammogram(23, 11, depth);
    save_image(path, img);
    EXPECT_EQ(fs::file_size(path), img.pixels.size() * (depth == 8 ? 1 : 2));
    EXPECT_EQ(load_image(path), img) << depth;
  }
}

TEST(Raw, MissingOrBadSidecar) {
  const auto path = scratch("nosidecar.raw");
  write_file(path, std::vector<std::uint8_t>(8, 0));
  fs::remove(sidecar_path(path));
  EXPECT_EQ(error_code_of([&] { load_image(path); }), ErrorCode::Io);
  {
    std::ofstream hdr(sidecar_path(path));
    hdr << "width 2\nheight 2\ndepth 12\n";
  }
  EXPECT_NO_THROW(load_image(path));
  {
    std::ofstream hdr(sidecar_path(path));
    hdr << "width 3\nheight 2\ndepth 12\n";
  }
  EXPECT_EQ(error_code_of([&] { load_image(path); }), ErrorCode::Truncated);
}

TEST(Normalize, DividesByDepthMaximum) {
  GrayImage img{3, 1, 12, {0, 4095, 2048}};
  const auto n = normalize(img);
  EXPECT_EQ(n.pixels[0], 0.0f);
  EXPECT_EQ(n.pixels[1], 1.0f);
  EXPECT_FLOAT_EQ(n.pixels[2], 2048.0f / 4095.0f);
  EXPECT_EQ(denormalize(n, 12), img);
}
