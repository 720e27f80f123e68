#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "entropchain/common.hpp"
#include "entropchain/entropy.hpp"
#include "entropchain/image_io.hpp"

// Corpus evaluation of the interestingness classifier: per-image rows plus
// per-set and total accuracy statistics.

namespace entropchain {

enum class Label { Interesting, Uninteresting };

inline std::string_view to_string(Label label) {
  return label == Label::Interesting ? "INTERESTING" : "NONINTERESTING";
}

struct Thresholds {
  std::int64_t bottom = 500;
  std::int64_t top = 9'999'999;
};

/// Scale to 80x80, score, and predict INTERESTING iff
/// bottom < score < top (strict on both sides).
inline std::pair<std::int64_t, Label> classify_one(const RgbImage& img,
                                                   Thresholds t = {}) {
  const std::int64_t score = complexity_score(resize(img, 80, 80));
  const bool interesting = score > t.bottom && score < t.top;
  return {score, interesting ? Label::Interesting : Label::Uninteresting};
}

struct EvalRow {
  std::string filename;
  Label expected;
  std::int64_t score;
  Label predicted;
  bool correct;
};

struct SetStats {
  std::int64_t min_score = 0;
  std::int64_t max_score = 0;
  std::int64_t range = 0;
  std::size_t correct = 0;
  std::size_t total = 0;
  double accuracy_pct = 0.0;
};

struct EvalReport {
  std::vector<EvalRow> rows;
  SetStats interesting;
  SetStats uninteresting;
  std::size_t total_correct = 0;
  std::size_t total_incorrect = 0;
  std::size_t total = 0;
  double accuracy_pct = 0.0;
  std::vector<std::string> skipped;  // undecodable files, reported not fatal
};

inline double accuracy_percent(std::size_t correct, std::size_t total) {
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(correct) / total;
}

namespace detail {

inline SetStats eval_set(const std::filesystem::path& dir, Label expected,
                         Thresholds t, std::vector<EvalRow>& rows,
                         std::vector<std::string>& skipped) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  SetStats stats;
  bool first = true;
  for (const auto& file : files) {
    std::int64_t score;
    Label predicted;
    try {
      std::tie(score, predicted) = classify_one(load_image(file), t);
    } catch (const Error& e) {
      skipped.push_back(file.filename().string() + ": " + e.what());
      continue;
    }
    const bool correct = predicted == expected;
    rows.push_back(
        {file.filename().string(), expected, score, predicted, correct});
    if (first || score < stats.min_score) stats.min_score = score;
    if (first || score > stats.max_score) stats.max_score = score;
    first = false;
    if (correct) ++stats.correct;
    ++stats.total;
  }
  stats.range = stats.max_score - stats.min_score;
  stats.accuracy_pct = accuracy_percent(stats.correct, stats.total);
  return stats;
}

}  // namespace detail

/// Classifies every file under <root>/interesting and <root>/uninteresting,
/// in filename order.
inline EvalReport evaluate_corpus(const std::filesystem::path& root,
                                  Thresholds t = {}) {
  const auto interesting_dir = root / "interesting";
  const auto uninteresting_dir = root / "uninteresting";
  if (!std::filesystem::is_directory(interesting_dir) ||
      !std::filesystem::is_directory(uninteresting_dir))
    throw IoError("corpus root must contain interesting/ and uninteresting/");

  EvalReport report;
  report.interesting = detail::eval_set(interesting_dir, Label::Interesting, t,
                                        report.rows, report.skipped);
  report.uninteresting = detail::eval_set(uninteresting_dir,
                                          Label::Uninteresting, t, report.rows,
                                          report.skipped);
  report.total = report.interesting.total + report.uninteresting.total;
  if (report.total == 0) throw Error("corpus contains no decodable images");
  report.total_correct = report.interesting.correct + report.uninteresting.correct;
  report.total_incorrect = report.total - report.total_correct;
  report.accuracy_pct = accuracy_percent(report.total_correct, report.total);
  return report;
}

}  // namespace entropchain
