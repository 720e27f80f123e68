#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "entropchain/block.hpp"
#include "entropchain/common.hpp"
#include "entropchain/encoding.hpp"

// Chain persistence (line-delimited, tab-separated, base64-prefixed fields)
// and the storage-growth model.

namespace entropchain {

struct CorruptRecord : Error {
  CorruptRecord(std::size_t line, const std::string& what)
      : Error("corrupt record at line " + std::to_string(line) + ": " + what),
        line(line) {}
  std::size_t line;
};

/// One record per block: height, previousHashEncoded, encode64(data),
/// encode64(nonce), encode64(hash), tab-separated.
inline void save_chain(std::span<const Block> blocks,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  for (const Block& b : blocks) {
    out << b.height << '\t' << b.previous_hash_encoded << '\t'
        << encode64(b.data) << '\t' << encode64(b.nonce) << '\t'
        << encode64(b.hash) << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

/// Loads and re-verifies hash recomputation and height ordering per record.
/// Nonce-policy checks are deferred to explicit validation.
inline std::vector<Block> load_chain(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  std::vector<Block> blocks;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 5)
      throw CorruptRecord(lineno, "expected 5 tab-separated fields");

    Block b;
    const auto [ptr, ec] = std::from_chars(
        fields[0].data(), fields[0].data() + fields[0].size(), b.height);
    if (ec != std::errc{} || ptr != fields[0].data() + fields[0].size())
      throw CorruptRecord(lineno, "bad height field");
    b.previous_hash_encoded = fields[1];
    try {
      b.data = decode64(fields[2]);
      b.nonce = decode64(fields[3]);
      b.hash = decode64(fields[4]);
      if (!b.previous_hash_encoded.empty())
        decode64(b.previous_hash_encoded);  // must be well-formed
    } catch (const EncodingError& e) {
      throw CorruptRecord(lineno, e.what());
    }
    if (b.hash.size() != kDigestBytes)
      throw CorruptRecord(lineno, "hash field is not 64 bytes");
    if (b.height != blocks.size())
      throw CorruptRecord(lineno, "heights must ascend from 0");
    if (compute_block_hash(b.previous_hash_encoded, b.data, b.nonce) != b.hash)
      throw CorruptRecord(lineno, "hash does not recompute from fields");
    blocks.push_back(std::move(b));
  }
  if (blocks.empty()) throw CorruptRecord(1, "missing genesis record");
  return blocks;
}

struct GrowthParams {
  std::uint64_t image_bytes_per_block = 19'200;
  std::uint64_t max_data_bytes = 800;
  double block_interval_minutes = 10.0;
};

/// Worst-case bytes per block: uncompressed image nonce plus data bound.
inline std::uint64_t block_size_upper_bound(const GrowthParams& params) {
  return params.image_bytes_per_block + params.max_data_bytes;
}

/// Projected chain growth in bytes per year at one block per interval.
inline double chain_growth_per_year(const GrowthParams& params) {
  if (params.block_interval_minutes <= 0)
    throw Error("block interval must be positive");
  const double blocks_per_year =
      (60.0 / params.block_interval_minutes) * 24.0 * 365.25;
  return static_cast<double>(block_size_upper_bound(params)) * blocks_per_year;
}

}  // namespace entropchain
