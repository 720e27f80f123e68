#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "entropchain/common.hpp"
#include "entropchain/crypto.hpp"
#include "entropchain/encoding.hpp"
#include "entropchain/entropy.hpp"
#include "entropchain/image.hpp"

// Block type, canonical hash preimage, the leading-zeros difficulty
// predicate, and chain validation.

namespace entropchain {

struct DifficultyParams {
  // number of leading '0' characters required in the base64-encoded hash
  unsigned difficulty_order = 3;
  // alphabet size; per-character success probability is 1/64
  static constexpr unsigned encoding_order = 64;
};

enum class NonceMode { Unconstrained, InterestingImage };

struct NoncePolicy {
  NonceMode mode = NonceMode::Unconstrained;
  std::int64_t threshold = 500;  // used only in InterestingImage mode
};

/// Immutable after construction. `previous_hash_encoded` is the "0x40_" form
/// of the predecessor's digest, or the empty string for genesis.
struct Block {
  std::uint64_t height = 0;
  std::string previous_hash_encoded;
  Bytes data;
  Bytes nonce;
  Bytes hash;

  std::string hash_encoded() const { return encode64(hash); }
  bool operator==(const Block&) const = default;
};

/// SHA-512 over the text bytes of previous_hash_encoded, the raw data bytes,
/// and the text bytes of encode64(nonce), concatenated in that order.
inline Bytes compute_block_hash(std::string_view previous_hash_encoded,
                                ByteView data, ByteView nonce) {
  Bytes preimage(previous_hash_encoded.begin(), previous_hash_encoded.end());
  preimage.insert(preimage.end(), data.begin(), data.end());
  const std::string nonce_encoded = encode64(nonce);
  preimage.insert(preimage.end(), nonce_encoded.begin(), nonce_encoded.end());
  return sha512(preimage);
}

/// Build a block linked to `previous` (nullptr for genesis) with its hash
/// computed from the fields.
inline Block make_block(const Block* previous, ByteView data, ByteView nonce) {
  Block b;
  b.height = previous ? previous->height + 1 : 0;
  b.previous_hash_encoded = previous ? previous->hash_encoded() : "";
  b.data.assign(data.begin(), data.end());
  b.nonce.assign(nonce.begin(), nonce.end());
  b.hash = compute_block_hash(b.previous_hash_encoded, data, nonce);
  return b;
}

/// True iff characters 5 .. 5+order-1 of encode64(digest) are all '0'.
/// Index 5 skips the "0x40_" prefix.
inline bool meets_difficulty(ByteView digest, unsigned difficulty_order) {
  const std::string encoded = encode64(digest);
  if (5 + difficulty_order > encoded.size()) return false;
  for (unsigned i = 0; i < difficulty_order; ++i)
    if (encoded[5 + i] != '0') return false;
  return true;
}

enum class ViolationKind {
  HashMismatch,
  DifficultyNotMet,
  LinkageBroken,
  HeightWrong,
  NonceNotImage,
  NonceBelowThreshold,
  EmptyChain,
};

inline std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::HashMismatch: return "hash-mismatch";
    case ViolationKind::DifficultyNotMet: return "difficulty-not-met";
    case ViolationKind::LinkageBroken: return "linkage-broken";
    case ViolationKind::HeightWrong: return "height-wrong";
    case ViolationKind::NonceNotImage: return "nonce-not-image";
    case ViolationKind::NonceBelowThreshold: return "nonce-below-threshold";
    case ViolationKind::EmptyChain: return "empty-chain";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  std::string message;
};

/// nullopt means the block is valid. Checks stop at the first failure.
inline std::optional<Violation> validate_block(const Block& block,
                                               const Block* expected_previous,
                                               const DifficultyParams& params,
                                               const NoncePolicy& policy) {
  const Bytes recomputed =
      compute_block_hash(block.previous_hash_encoded, block.data, block.nonce);
  if (recomputed != block.hash)
    return Violation{ViolationKind::HashMismatch,
                     "stored hash does not recompute from fields"};

  if (!meets_difficulty(block.hash, params.difficulty_order))
    return Violation{ViolationKind::DifficultyNotMet,
                     "hash lacks required leading zeros"};

  if (expected_previous == nullptr) {
    if (!block.previous_hash_encoded.empty())
      return Violation{ViolationKind::LinkageBroken,
                       "genesis block must have empty previous reference"};
    if (block.height != 0)
      return Violation{ViolationKind::HeightWrong, "genesis height must be 0"};
  } else {
    if (block.previous_hash_encoded != expected_previous->hash_encoded())
      return Violation{ViolationKind::LinkageBroken,
                       "previous-hash reference does not match predecessor"};
    if (block.height != expected_previous->height + 1)
      return Violation{ViolationKind::HeightWrong,
                       "height does not increment predecessor's"};
  }

  if (policy.mode == NonceMode::InterestingImage) {
    RgbImage img;
    try {
      img = deserialize_image_nonce(block.nonce);
    } catch (const ImageError&) {
      return Violation{ViolationKind::NonceNotImage,
                       "nonce is not a 19,200-byte image"};
    }
    const std::int64_t score = complexity_score(img);
    if (score <= policy.threshold)
      return Violation{ViolationKind::NonceBelowThreshold,
                       "image nonce score " + std::to_string(score) +
                           " does not exceed threshold " +
                           std::to_string(policy.threshold)};
  }

  return std::nullopt;
}

struct ChainViolation {
  std::size_t index;
  Violation violation;
};

/// Validates pairwise from genesis; reports the first failing index.
inline std::optional<ChainViolation> validate_chain(
    std::span<const Block> blocks, const DifficultyParams& params,
    const NoncePolicy& policy) {
  if (blocks.empty())
    return ChainViolation{0, {ViolationKind::EmptyChain, "chain is empty"}};
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Block* prev = i == 0 ? nullptr : &blocks[i - 1];
    if (auto v = validate_block(blocks[i], prev, params, policy))
      return ChainViolation{i, *v};
  }
  return std::nullopt;
}

/// Display form used by the CLI; not a parse format.
inline std::string render_block(const Block& block) {
  std::ostringstream os;
  os << "-----block " << block.height << "-----\n"
     << "nonce " << encode64(block.nonce) << "\n"
     << "prev "
     << (block.previous_hash_encoded.empty() ? "None"
                                             : block.previous_hash_encoded)
     << "\n"
     << "data\n-----\n"
     << to_string(ByteView(block.data)) << "\n-----\n"
     << "hash " << block.hash_encoded() << "\n"
     << "-----End Block-----";
  return os.str();
}

}  // namespace entropchain
