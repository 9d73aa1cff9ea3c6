// mammoc: command-line front end for the mammogram codec.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mammo/mammo.hpp"

namespace fs = std::filesystem;

namespace {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kIoError = 3,
  kFormatError = 4,
  kHashMismatch = 5,
  kInputError = 6,
};

int exit_code_for(mammo::ErrorCode code) {
  using mammo::ErrorCode;
  switch (code) {
    case ErrorCode::Io: return kIoError;
    case ErrorCode::HashMismatch: return kHashMismatch;
    case ErrorCode::InvalidInput:
    case ErrorCode::DimMismatch: return kInputError;
    case ErrorCode::BadMagic:
    case ErrorCode::BadVersion:
    case ErrorCode::Truncated:
    case ErrorCode::Malformed:
    case ErrorCode::LayerMismatch:
    case ErrorCode::CorruptStream:
    case ErrorCode::CorruptContainer: return kFormatError;
    case ErrorCode::ContractViolation: break;
  }
  return kFailure;
}

mammo::WeightBundle load_weights_file(const fs::path& path) { return mammo::load_weights(mammo::read_file(path)); }

struct CompressArgs {
  std::string input, weights, output;
  int bits = 8;
  int depth = 0;
};

int run_compress(const CompressArgs& a) {
  const auto img = mammo::load_image(a.input, a.depth);
  const auto weights = load_weights_file(a.weights);
  const auto bytes = mammo::compress_image(img, weights, a.bits);
  mammo::write_file(a.output, bytes);
  const auto rate = mammo::bpp_report(bytes.size(), img.width, img.height, img.depth);
  std::cout << std::setprecision(10) << "bytes=" << bytes.size() << "\nbpp=" << rate.bpp
            << "\ncompression_factor=" << rate.compression_factor << "\n";
  return kOk;
}

struct DecompressArgs {
  std::string input, weights, output;
  bool force = false;
};

int run_decompress(const DecompressArgs& a) {
  const auto bytes = mammo::read_file(a.input);
  const auto weights = load_weights_file(a.weights);
  const auto result = mammo::decompress_image(bytes, weights, a.force);
  if (result.hash_mismatch)
    std::cerr << "warning: container model hash differs from the supplied weights; decoding anyway (--force)\n";
  mammo::save_image(a.output, result.image);
  std::cout << "width=" << result.image.width << "\nheight=" << result.image.height
            << "\ndepth=" << result.image.depth << "\n";
  return kOk;
}

struct MetricsArgs {
  std::string ref, test, container;
  int depth = 0;
  bool json = false;
};

int run_metrics(const MetricsArgs& a) {
  const auto ref = mammo::load_image(a.ref, a.depth);
  const auto test = mammo::load_image(a.test, a.depth);
  const auto ref_n = mammo::normalize(ref);
  const auto test_n = mammo::normalize(test);

  mammo::MetricsReport report;
  report.reference = a.ref;
  report.test = a.test;
  report.psnr = mammo::psnr(ref_n, test_n);
  report.ssim = mammo::ssim(ref_n, test_n);
  if (!a.container.empty()) {
    const auto bytes = mammo::read_file(a.container);
    const auto file = mammo::read_container(bytes);
    const auto rate = mammo::bpp_report(bytes.size(), ref.width, ref.height, ref.depth);
    report.bpp = rate.bpp;
    report.compression_factor = rate.compression_factor;
    report.entropy = mammo::latent_entropy(mammo::decode_latent(file));
  }
  if (a.json)
    std::cout << mammo::to_json(report).dump(2) << "\n";
  else
    std::cout << mammo::to_text(report);
  return kOk;
}

struct PatchArgs {
  std::string input_dir, output_dir;
  std::size_t count = 0;
  std::size_t size = 256;
  std::uint64_t seed = 0;
};

int run_extract_patches(const PatchArgs& a) {
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(a.input_dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".pgm" || ext == ".raw")) paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());

  std::vector<mammo::PatchSource> sources;
  for (const auto& p : paths) sources.push_back({p.filename().string(), mammo::load_image(p)});

  const auto result = mammo::extract_patches(sources, a.count, a.size, a.seed);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";

  fs::create_directories(a.output_dir);
  for (std::size_t i = 0; i < result.patches.size(); ++i) {
    std::ostringstream name;
    name << "patch_" << std::setw(5) << std::setfill('0') << i << ".pgm";
    mammo::save_image(fs::path(a.output_dir) / name.str(), result.patches[i].image);
  }
  std::cout << "patches=" << result.patches.size() << "\n";
  return kOk;
}

void print_header(const mammo::ContainerHeader& h, std::uint64_t file_size) {
  std::cout << "version=" << int{h.version} << "\nwidth=" << h.width << "\nheight=" << h.height
            << "\ndepth=" << int{h.depth} << "\nbits=" << int{h.bits} << "\nchannels=" << h.channels
            << "\nlatent_height=" << h.latent_height << "\nlatent_width=" << h.latent_width << "\nmodel_hash=0x"
            << std::hex << std::setw(16) << std::setfill('0') << h.model_hash << std::dec << std::setfill(' ')
            << "\nsymbol_count=" << h.symbol_count << "\npayload_length=" << h.payload_length
            << "\nfile_size=" << file_size << "\n";
}

int run_info(const std::string& input) {
  const auto bytes = mammo::read_file(input);
  print_header(mammo::read_container(bytes).header, bytes.size());
  return kOk;
}

int run_latent_stats(const std::string& input) {
  const auto bytes = mammo::read_file(input);
  const auto file = mammo::read_container(bytes);
  const auto latent = mammo::decode_latent(file);
  print_header(file.header, bytes.size());
  const auto hist = mammo::latent_histogram(latent);
  std::cout << std::setprecision(10);
  if (!latent.values.empty()) std::cout << "entropy=" << mammo::latent_entropy(latent) << "\n";
  std::cout << "distinct=" << hist.size() << "\nhistogram:\n";
  for (const auto& [value, count] : hist) std::cout << value << " " << count << "\n";
  return kOk;
}

int run_fixture_weights(const std::string& output, std::uint64_t seed) {
  const auto weights = mammo::fixture_weights(seed);
  mammo::write_file(output, mammo::save_weights(weights));
  std::cout << "model_hash=0x" << std::hex << std::setw(16) << std::setfill('0') << weights.hash() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learned lossy codec for high-bit-depth grayscale images"};
  app.require_subcommand(1);

  CompressArgs ca;
  auto* compress = app.add_subcommand("compress", "Compress an image into a MAMC container");
  compress->add_option("--input", ca.input, "PGM or .raw image")->required();
  compress->add_option("--weights", ca.weights, "MAMW weight file")->required();
  compress->add_option("--bits", ca.bits, "Latent bit length n")->required()->check(CLI::Range(1, 16));
  compress->add_option("--output", ca.output, "Output container")->required();
  compress->add_option("--depth", ca.depth, "Override source bit depth")->check(CLI::IsMember({8, 12, 16}));

  DecompressArgs da;
  auto* decompress = app.add_subcommand("decompress", "Reconstruct an image from a MAMC container");
  decompress->add_option("--input", da.input, "MAMC container")->required();
  decompress->add_option("--weights", da.weights, "MAMW weight file")->required();
  decompress->add_option("--output", da.output, "Output image (.pgm or .raw)")->required();
  decompress->add_flag("--force", da.force, "Decode even if the model hash does not match");

  MetricsArgs ma;
  auto* metrics = app.add_subcommand("metrics", "Score a reconstruction against its reference");
  metrics->add_option("--ref", ma.ref, "Reference image")->required();
  metrics->add_option("--test", ma.test, "Reconstructed image")->required();
  metrics->add_option("--depth", ma.depth, "Override bit depth of both images")->check(CLI::IsMember({8, 12, 16}));
  metrics->add_option("--container", ma.container, "MAMC file to report bpp and latent entropy for");
  metrics->add_flag("--json", ma.json, "Emit JSON instead of key=value lines");

  PatchArgs pa;
  auto* patches = app.add_subcommand("extract-patches", "Sample training patches from a directory of images");
  patches->add_option("--input-dir", pa.input_dir)->required()->check(CLI::ExistingDirectory);
  patches->add_option("--count", pa.count)->required();
  patches->add_option("--size", pa.size)->check(CLI::Range(std::size_t{16}, std::size_t{1} << 20));
  patches->add_option("--seed", pa.seed);
  patches->add_option("--output-dir", pa.output_dir)->required();

  std::string stats_input;
  auto* stats = app.add_subcommand("latent-stats", "Decode a container and summarize its latent code");
  stats->add_option("--input", stats_input)->required();

  std::string info_input;
  auto* info = app.add_subcommand("info", "Print container header fields");
  info->add_option("--input", info_input)->required();

  std::string fixture_output;
  std::uint64_t fixture_seed = mammo::kFixtureSeed;
  auto* fixture = app.add_subcommand("fixture-weights", "Write deterministic pseudo-random weights");
  fixture->add_option("--output", fixture_output)->required();
  fixture->add_option("--seed", fixture_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*compress) return run_compress(ca);
    if (*decompress) return run_decompress(da);
    if (*metrics) return run_metrics(ma);
    if (*patches) return run_extract_patches(pa);
    if (*stats) return run_latent_stats(stats_input);
    if (*info) return run_info(info_input);
    if (*fixture) return run_fixture_weights(fixture_output, fixture_seed);
  } catch (const mammo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
