#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include <openssl/rand.h>

#include "entropchain/block.hpp"
#include "entropchain/common.hpp"
#include "entropchain/entropy.hpp"
#include "entropchain/image_io.hpp"

// Proof-of-work search loop with pluggable nonce sources.

namespace entropchain {

/// Yields candidate nonces. A finite source eventually returns nullopt.
/// Sources declare whether concurrent draws are safe; the parallel driver
/// serializes access to those that are not.
class NonceSource {
 public:
  virtual ~NonceSource() = default;
  virtual std::optional<Bytes> next() = 0;
  virtual bool concurrent_safe() const { return false; }
};

/// Infinite stream of cryptographically random byte-strings.
class RandomNonceSource final : public NonceSource {
 public:
  explicit RandomNonceSource(std::size_t size = 8) : size_(size) {
    if (size_ < 1) throw Error("nonce size must be at least 1 byte");
  }

  std::optional<Bytes> next() override {
    Bytes nonce(size_);
    if (RAND_bytes(nonce.data(), static_cast<int>(nonce.size())) != 1)
      throw Error("RAND_bytes failed");
    return nonce;
  }

  bool concurrent_safe() const override { return true; }

 private:
  std::size_t size_;
};

/// Finite queue of image files. Each file is loaded lazily, scaled to 80x80,
/// and scored; files that fail to decode or do not clear the threshold are
/// skipped. Passing images are yielded once, in serialized nonce form.
class ImageNonceSource final : public NonceSource {
 public:
  explicit ImageNonceSource(std::vector<std::filesystem::path> paths,
                            std::int64_t threshold = 500,
                            std::ostream* log = nullptr)
      : paths_(std::move(paths)), threshold_(threshold), log_(log) {}

  std::optional<Bytes> next() override {
    std::lock_guard lock(mutex_);
    while (index_ < paths_.size()) {
      const auto& path = paths_[index_++];
      try {
        const RgbImage scaled = resize(load_image(path), 80, 80);
        const std::int64_t score = complexity_score(scaled);
        if (score > threshold_) return serialize_image_nonce(scaled);
        if (log_)
          *log_ << "skipping " << path.string() << ": score " << score
                << " <= " << threshold_ << "\n";
      } catch (const Error& e) {
        if (log_) *log_ << "skipping " << path.string() << ": " << e.what() << "\n";
      }
    }
    return std::nullopt;
  }

 private:
  std::vector<std::filesystem::path> paths_;
  std::int64_t threshold_;
  std::ostream* log_;
  std::mutex mutex_;
  std::size_t index_ = 0;
};

struct MiningReport {
  Block block;
  std::uint64_t hashes_tried = 0;
  double elapsed_seconds = 0.0;
  double hash_rate = 0.0;
};

/// Called periodically during mining with (hashes so far, elapsed seconds).
using ProgressFn = std::function<void(std::uint64_t, double)>;

/// Expected hashes to find a valid block: encoding_order ^ difficulty_order.
inline double estimate_difficulty(const DifficultyParams& params) {
  return std::pow(static_cast<double>(DifficultyParams::encoding_order),
                  static_cast<double>(params.difficulty_order));
}

/// Draw nonces until one yields a hash meeting the difficulty. Returns
/// nullopt when a finite source drains before success.
inline std::optional<MiningReport> mine_block(
    const Block* previous, ByteView data, NonceSource& source,
    const DifficultyParams& params, const ProgressFn& progress = {},
    double progress_interval_seconds = 5.0) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto last_report = start;
  std::uint64_t hashes = 0;

  while (true) {
    auto nonce = source.next();
    if (!nonce) return std::nullopt;
    Block b = make_block(previous, data, *nonce);
    ++hashes;
    if (meets_difficulty(b.hash, params.difficulty_order)) {
      const double elapsed =
          std::chrono::duration<double>(Clock::now() - start).count();
      return MiningReport{std::move(b), hashes, elapsed,
                          elapsed > 0 ? hashes / elapsed : 0.0};
    }
    if (progress && (hashes & 0x3FF) == 0) {
      const auto now = Clock::now();
      if (std::chrono::duration<double>(now - last_report).count() >=
          progress_interval_seconds) {
        progress(hashes, std::chrono::duration<double>(now - start).count());
        last_report = now;
      }
    }
  }
}

namespace detail {

// Serializes draws from a source that is not safe for concurrent use.
class LockedSource final : public NonceSource {
 public:
  explicit LockedSource(NonceSource& inner) : inner_(inner) {}
  std::optional<Bytes> next() override {
    std::lock_guard lock(mutex_);
    return inner_.next();
  }
  bool concurrent_safe() const override { return true; }

 private:
  NonceSource& inner_;
  std::mutex mutex_;
};

}  // namespace detail

/// Multi-worker search over a shared source. The first valid block wins and
/// the remaining workers stop; duplicate draws across workers are wasted
/// work only.
inline std::optional<MiningReport> mine_block_parallel(
    const Block* previous, ByteView data, NonceSource& source,
    const DifficultyParams& params, unsigned workers,
    const ProgressFn& progress = {}, double progress_interval_seconds = 5.0) {
  if (workers <= 1)
    return mine_block(previous, data, source, params, progress,
                      progress_interval_seconds);

  detail::LockedSource locked(source);
  NonceSource& shared = source.concurrent_safe()
                            ? source
                            : static_cast<NonceSource&>(locked);

  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  std::atomic<bool> done{false};
  std::atomic<unsigned> active{workers};
  std::atomic<std::uint64_t> total_hashes{0};
  std::optional<Block> winner;
  std::mutex winner_mutex;

  auto worker = [&] {
    std::uint64_t local = 0;
    while (!done.load(std::memory_order_relaxed)) {
      auto nonce = shared.next();
      if (!nonce) break;
      Block b = make_block(previous, data, *nonce);
      ++local;
      if (meets_difficulty(b.hash, params.difficulty_order)) {
        std::lock_guard lock(winner_mutex);
        if (!winner) winner = std::move(b);
        done.store(true, std::memory_order_relaxed);
        break;
      }
      if ((local & 0xFF) == 0)
        total_hashes.fetch_add(256, std::memory_order_relaxed), local -= 256;
    }
    total_hashes.fetch_add(local, std::memory_order_relaxed);
    active.fetch_sub(1, std::memory_order_relaxed);
  };

  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) threads.emplace_back(worker);

  if (progress) {
    double next_at = progress_interval_seconds;
    while (!done.load(std::memory_order_relaxed) &&
           active.load(std::memory_order_relaxed) > 0) {
      std::this_thread::sleep_for(std::chrono::duration<double>(
          std::min(progress_interval_seconds, 0.25)));
      const double elapsed =
          std::chrono::duration<double>(Clock::now() - start).count();
      if (elapsed >= next_at) {
        progress(total_hashes.load(std::memory_order_relaxed), elapsed);
        next_at = elapsed + progress_interval_seconds;
      }
    }
  }
  for (auto& t : threads) t.join();

  if (!winner) return std::nullopt;
  const double elapsed =
      std::chrono::duration<double>(Clock::now() - start).count();
  const std::uint64_t hashes = total_hashes.load();
  return MiningReport{std::move(*winner), hashes, elapsed,
                      elapsed > 0 ? hashes / elapsed : 0.0};
}

}  // namespace entropchain
