// entropchain command-line tool: mining, validation, scoring, corpus
// evaluation, growth projection, and chain inspection.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entropchain/entropchain.hpp"

using namespace entropchain;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string with_thousands(std::uint64_t n) {
  std::string s = std::to_string(n);
  for (int i = static_cast<int>(s.size()) - 3; i > 0; i -= 3)
    s.insert(static_cast<std::size_t>(i), ",");
  return s;
}

struct Options {
  std::string chain_path = "chain.tsv";
  std::string output = "text";
  unsigned difficulty = 3;
  std::string mode = "random";
  std::string image_dir;
  std::int64_t threshold = 500;
  std::string data_text;
  unsigned count = 1;
  unsigned nonce_size = 8;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  double progress_interval = 5.0;
};

bool records(const Options& opt) { return opt.output == "records"; }

NoncePolicy policy_from(const Options& opt) {
  return {opt.mode == "image" ? NonceMode::InterestingImage
                              : NonceMode::Unconstrained,
          opt.threshold};
}

std::vector<fs::path> list_images(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

int cmd_mine(const Options& opt) {
  const DifficultyParams params{opt.difficulty};
  const NoncePolicy policy = policy_from(opt);

  std::vector<Block> chain;
  if (fs::exists(opt.chain_path)) chain = load_chain(opt.chain_path);

  std::unique_ptr<NonceSource> source;
  if (opt.mode == "image") {
    if (opt.image_dir.empty()) {
      std::cerr << "error: --mode image requires --image-dir\n";
      return kExitUsage;
    }
    source = std::make_unique<ImageNonceSource>(list_images(opt.image_dir),
                                                opt.threshold, &std::cerr);
  } else {
    source = std::make_unique<RandomNonceSource>(opt.nonce_size);
  }

  if (!records(opt))
    std::cout << "Mining at difficulty order " << params.difficulty_order
              << ", which corresponds to a difficulty of "
              << estimate_difficulty(params) << " hashes\n";

  ProgressFn progress;
  if (!records(opt))
    progress = [](std::uint64_t hashes, double elapsed) {
      std::cerr << "... " << hashes << " hashes in " << elapsed << " s ("
                << (elapsed > 0 ? hashes / elapsed : 0) << " h/s)\n";
    };

  std::uint64_t total_hashes = 0;
  double total_elapsed = 0;
  const unsigned blocks_to_mine = opt.count + (chain.empty() ? 1u : 0u);
  for (unsigned i = 0; i < blocks_to_mine; ++i) {
    const Block* previous = chain.empty() ? nullptr : &chain.back();
    const std::string data =
        previous == nullptr
            ? "genesis"
            : (opt.data_text.empty()
                   ? "block" + std::to_string(previous->height + 1)
                   : opt.data_text);
    const auto report =
        mine_block_parallel(previous, to_bytes(data), *source, params,
                            opt.workers, progress, opt.progress_interval);
    if (!report) {
      std::cerr << "error: nonce source exhausted before a valid block was found\n";
      return kExitValidation;
    }
    total_hashes += report->hashes_tried;
    total_elapsed += report->elapsed_seconds;
    chain.push_back(report->block);
    if (!records(opt)) {
      std::cout << render_block(report->block) << "\n";
      std::cout << "(" << report->hashes_tried << " hashes in "
                << report->elapsed_seconds << " s, " << report->hash_rate
                << " h/s)\n";
    }
  }

  save_chain(chain, opt.chain_path);
  if (records(opt))
    std::cout << json{{"command", "mine"},
                      {"height", chain.back().height},
                      {"blocks", chain.size()},
                      {"hashes", total_hashes},
                      {"elapsed_seconds", total_elapsed},
                      {"chain", opt.chain_path}}
                     .dump()
              << "\n";
  return kExitOk;
}

int cmd_validate(const Options& opt) {
  const auto chain = load_chain(opt.chain_path);
  const auto violation =
      validate_chain(chain, {opt.difficulty}, policy_from(opt));
  if (records(opt)) {
    json j{{"command", "validate"},
           {"blocks", chain.size()},
           {"ok", !violation.has_value()}};
    if (violation) {
      j["index"] = violation->index;
      j["violation"] = std::string(to_string(violation->violation.kind));
    }
    std::cout << j.dump() << "\n";
  } else if (violation) {
    std::cout << "INVALID at block " << violation->index << ": "
              << to_string(violation->violation.kind) << " ("
              << violation->violation.message << ")\n";
  } else {
    std::cout << "OK: " << chain.size() << " blocks valid\n";
  }
  return violation ? kExitValidation : kExitOk;
}

int cmd_score(const Options& opt, const std::string& image_path,
              const std::string& export_prefix) {
  const RgbImage scaled = resize(load_image(image_path), 80, 80);
  const std::int64_t score = complexity_score(scaled);
  if (!export_prefix.empty()) {
    const GrayGrid gray = grayscale(scaled);
    const EntropyMatrix first = neighborhood_entropy_matrix(gray);
    const GrayGrid first_grid{first.width, first.height, first.quantized};
    const EntropyMatrix second = neighborhood_entropy_matrix(first_grid);
    save_gray(gray, export_prefix + "_gray.png");
    save_gray(first_grid, export_prefix + "_entropy1.png");
    save_gray({second.width, second.height, second.quantized},
              export_prefix + "_entropy2.png");
  }
  if (records(opt))
    std::cout << json{{"command", "score"}, {"file", image_path}, {"score", score}}
                     .dump()
              << "\n";
  else
    std::cout << score << "\n";
  return kExitOk;
}

int cmd_classify(const Options& opt, const std::string& image_path) {
  const auto [score, label] = classify_one(load_image(image_path),
                                           {opt.threshold, 9'999'999});
  if (records(opt))
    std::cout << json{{"command", "classify"},
                      {"file", image_path},
                      {"score", score},
                      {"label", std::string(to_string(label))}}
                     .dump()
              << "\n";
  else
    std::cout << score << "\t" << to_string(label) << "\n";
  return kExitOk;
}

void print_set_stats(const SetStats& s) {
  std::printf("min: %lld, max: %lld, range: %lld, accuracy: %.2f%%\n",
              static_cast<long long>(s.min_score),
              static_cast<long long>(s.max_score),
              static_cast<long long>(s.range), s.accuracy_pct);
}

int cmd_eval(const Options& opt, const std::string& root) {
  const EvalReport report = evaluate_corpus(root, {opt.threshold, 9'999'999});
  if (records(opt)) {
    std::cout << json{{"command", "eval"},
                      {"root", root},
                      {"total", report.total},
                      {"correct", report.total_correct},
                      {"incorrect", report.total_incorrect},
                      {"accuracy_pct", report.accuracy_pct},
                      {"skipped", report.skipped.size()}}
                     .dump()
              << "\n";
    return kExitOk;
  }
  for (const auto& row : report.rows) {
    std::cout << (row.expected == Label::Interesting ? "interesting"
                                                     : "uninteresting")
              << ", " << row.filename << ", " << row.score << "\t\t"
              << to_string(row.predicted) << "\t("
              << (row.correct ? "correct" : "incorrect") << ")\n";
  }
  print_set_stats(report.interesting);
  print_set_stats(report.uninteresting);
  for (const auto& s : report.skipped) std::cout << "skipped: " << s << "\n";
  std::printf("total: %zu correct, %zu incorrect, %zu classified, %.2f%% accuracy\n",
              report.total_correct, report.total_incorrect, report.total,
              report.accuracy_pct);
  return kExitOk;
}

int cmd_growth(const Options& opt, const GrowthParams& params) {
  const std::uint64_t block_bytes = block_size_upper_bound(params);
  const double per_year = chain_growth_per_year(params);
  if (records(opt)) {
    std::cout << json{{"command", "growth"},
                      {"block_size_upper_bound", block_bytes},
                      {"bytes_per_year", per_year}}
                     .dump()
              << "\n";
  } else {
    std::cout << "block size upper bound: " << with_thousands(block_bytes)
              << " bytes\n";
    std::cout << "projected growth: "
              << with_thousands(static_cast<std::uint64_t>(per_year))
              << " bytes/year\n";
  }
  return kExitOk;
}

int cmd_info(const Options& opt) {
  const auto chain = load_chain(opt.chain_path);
  const std::uint64_t file_bytes = fs::file_size(opt.chain_path);
  const double per_year = chain_growth_per_year({});
  if (records(opt)) {
    std::cout << json{{"command", "info"},
                      {"height", chain.back().height},
                      {"blocks", chain.size()},
                      {"file_bytes", file_bytes},
                      {"projected_bytes_per_year", per_year}}
                     .dump()
              << "\n";
  } else {
    std::cout << "height: " << chain.back().height << "\n"
              << "blocks: " << chain.size() << "\n"
              << "file bytes: " << with_thousands(file_bytes) << "\n"
              << "projected growth: "
              << with_thousands(static_cast<std::uint64_t>(per_year))
              << " bytes/year\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropchain: proof-of-work blockchain with entropy-scored image nonces"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  if (const char* env = std::getenv("ENTROPCHAIN_CHAIN")) opt.chain_path = env;
  if (const char* env = std::getenv("ENTROPCHAIN_THRESHOLD"))
    opt.threshold = std::atoll(env);

  app.add_option("--chain", opt.chain_path, "Chain file path");
  app.add_option("--output", opt.output, "Output mode: text or records")
      ->check(CLI::IsMember({"text", "records"}));

  auto* mine = app.add_subcommand("mine", "Mine blocks onto the chain");
  mine->add_option("--count", opt.count, "Blocks to mine");
  mine->add_option("--difficulty", opt.difficulty, "Difficulty order (rho)");
  mine->add_option("--mode", opt.mode, "Nonce mode")
      ->check(CLI::IsMember({"random", "image"}));
  mine->add_option("--image-dir", opt.image_dir, "Image directory (image mode)");
  mine->add_option("--threshold", opt.threshold, "Interestingness threshold");
  mine->add_option("--data", opt.data_text, "Block data text");
  mine->add_option("--nonce-size", opt.nonce_size, "Random nonce bytes");
  mine->add_option("--workers", opt.workers, "Parallel mining workers");
  mine->add_option("--progress-interval", opt.progress_interval,
                   "Seconds between progress updates");

  auto* validate = app.add_subcommand("validate", "Validate the chain");
  validate->add_option("--difficulty", opt.difficulty, "Difficulty order (rho)");
  validate->add_option("--mode", opt.mode, "Nonce policy")
      ->check(CLI::IsMember({"random", "image"}));
  validate->add_option("--threshold", opt.threshold, "Interestingness threshold");

  std::string image_path;
  std::string export_prefix;
  auto* score = app.add_subcommand("score", "Print an image's complexity score");
  score->add_option("path", image_path, "Image file")->required();
  score->add_option("--export-maps", export_prefix,
                    "Write gray/entropy/second-entropy maps with this prefix");

  auto* classify = app.add_subcommand("classify", "Classify an image");
  classify->add_option("path", image_path, "Image file")->required();
  classify->add_option("--threshold", opt.threshold, "Interestingness threshold");

  std::string eval_root;
  auto* eval = app.add_subcommand("eval", "Evaluate a labeled corpus");
  eval->add_option("--root", eval_root, "Corpus root directory")->required();
  eval->add_option("--threshold", opt.threshold, "Interestingness threshold");

  GrowthParams growth_params;
  auto* growth = app.add_subcommand("growth", "Project storage growth");
  growth->add_option("--image-bytes", growth_params.image_bytes_per_block,
                     "Image bytes per block");
  growth->add_option("--max-data-bytes", growth_params.max_data_bytes,
                     "Data bytes bound per block");
  growth->add_option("--interval", growth_params.block_interval_minutes,
                     "Minutes per block");

  auto* info = app.add_subcommand("info", "Chain height, size, and projection");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (mine->parsed()) return cmd_mine(opt);
    if (validate->parsed()) return cmd_validate(opt);
    if (score->parsed()) return cmd_score(opt, image_path, export_prefix);
    if (classify->parsed()) return cmd_classify(opt, image_path);
    if (eval->parsed()) return cmd_eval(opt, eval_root);
    if (growth->parsed()) return cmd_growth(opt, growth_params);
    if (info->parsed()) return cmd_info(opt);
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const CorruptRecord& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
