#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "entropchain/common.hpp"

// Prefixed base64/base32 codecs. Encoded strings carry a 5-character prefix
// identifying the alphabet: "0x40_" (0x40 = 64) for base64, "0x20_"
// (0x20 = 32) for base32. The prefixed form is a wire format: it appears in
// chain files, CLI output, and hash preimages, so padding is always retained.

namespace entropchain {

inline constexpr std::string_view kBase64Prefix = "0x40_";
inline constexpr std::string_view kBase32Prefix = "0x20_";

namespace detail {

inline constexpr std::string_view kBase64Alphabet =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
inline constexpr std::string_view kBase32Alphabet =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZ234567";

inline constexpr std::array<int, 256> make_reverse(std::string_view alphabet) {
  std::array<int, 256> rev{};
  for (auto& v : rev) v = -1;
  for (int i = 0; i < static_cast<int>(alphabet.size()); ++i)
    rev[static_cast<unsigned char>(alphabet[i])] = i;
  return rev;
}

inline constexpr auto kBase64Reverse = make_reverse(kBase64Alphabet);
inline constexpr auto kBase32Reverse = make_reverse(kBase32Alphabet);

}  // namespace detail

/// Standard base64 with padding, prefixed with "0x40_".
inline std::string encode64(ByteView data) {
  std::string out{kBase64Prefix};
  out.reserve(kBase64Prefix.size() + 4 * ((data.size() + 2) / 3));
  std::size_t i = 0;
  for (; i + 3 <= data.size(); i += 3) {
    std::uint32_t v = (data[i] << 16) | (data[i + 1] << 8) | data[i + 2];
    out += detail::kBase64Alphabet[(v >> 18) & 63];
    out += detail::kBase64Alphabet[(v >> 12) & 63];
    out += detail::kBase64Alphabet[(v >> 6) & 63];
    out += detail::kBase64Alphabet[v & 63];
  }
  const std::size_t rem = data.size() - i;
  if (rem == 1) {
    std::uint32_t v = data[i] << 16;
    out += detail::kBase64Alphabet[(v >> 18) & 63];
    out += detail::kBase64Alphabet[(v >> 12) & 63];
    out += "==";
  } else if (rem == 2) {
    std::uint32_t v = (data[i] << 16) | (data[i + 1] << 8);
    out += detail::kBase64Alphabet[(v >> 18) & 63];
    out += detail::kBase64Alphabet[(v >> 12) & 63];
    out += detail::kBase64Alphabet[(v >> 6) & 63];
    out += '=';
  }
  return out;
}

inline Bytes decode64(std::string_view s) {
  if (s.substr(0, kBase64Prefix.size()) != kBase64Prefix)
    throw EncodingError("malformed prefix: expected \"0x40_\"");
  std::string_view payload = s.substr(kBase64Prefix.size());
  if (payload.size() % 4 != 0)
    throw EncodingError("invalid base64 payload length");
  Bytes out;
  out.reserve(payload.size() / 4 * 3);
  for (std::size_t i = 0; i < payload.size(); i += 4) {
    int vals[4];
    int pad = 0;
    for (int j = 0; j < 4; ++j) {
      char c = payload[i + j];
      if (c == '=') {
        // padding only allowed in the last two positions of the final group
        if (i + 4 != payload.size() || j < 2)
          throw EncodingError("invalid base64 padding");
        ++pad;
        vals[j] = 0;
      } else {
        if (pad > 0) throw EncodingError("invalid base64 padding");
        vals[j] = detail::kBase64Reverse[static_cast<unsigned char>(c)];
        if (vals[j] < 0) throw EncodingError("invalid base64 character");
      }
    }
    std::uint32_t v = (vals[0] << 18) | (vals[1] << 12) | (vals[2] << 6) | vals[3];
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
    if (pad < 2) out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
    if (pad < 1) out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  }
  return out;
}

/// Standard base32, lowercased, prefixed with "0x20_".
inline std::string encode32(ByteView data) {
  std::string out{kBase32Prefix};
  std::uint64_t buffer = 0;
  int bits = 0;
  for (std::uint8_t b : data) {
    buffer = (buffer << 8) | b;
    bits += 8;
    while (bits >= 5) {
      bits -= 5;
      char c = detail::kBase32Alphabet[(buffer >> bits) & 31];
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  if (bits > 0) {
    char c = detail::kBase32Alphabet[(buffer << (5 - bits)) & 31];
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  while ((out.size() - kBase32Prefix.size()) % 8 != 0) out += '=';
  return out;
}

inline Bytes decode32(std::string_view s) {
  if (s.substr(0, kBase32Prefix.size()) != kBase32Prefix)
    throw EncodingError("malformed prefix: expected \"0x20_\"");
  std::string_view payload = s.substr(kBase32Prefix.size());
  if (payload.size() % 8 != 0)
    throw EncodingError("invalid base32 payload length");
  Bytes out;
  std::uint64_t buffer = 0;
  int bits = 0;
  bool seen_pad = false;
  for (char c : payload) {
    if (c == '=') {
      seen_pad = true;
      continue;
    }
    if (seen_pad) throw EncodingError("invalid base32 padding");
    int v = detail::kBase32Reverse[static_cast<unsigned char>(
        std::toupper(static_cast<unsigned char>(c)))];
    if (v < 0) throw EncodingError("invalid base32 character");
    buffer = (buffer << 5) | static_cast<unsigned>(v);
    bits += 5;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<std::uint8_t>((buffer >> bits) & 0xFF));
    }
  }
  return out;
}

/// Little-endian byte packing of a non-negative integer, least-significant
/// byte first, no leading-zero padding. Zero packs to the empty byte-string.
inline Bytes encode_integer(std::uint64_t n) {
  Bytes out;
  while (n) {
    out.push_back(static_cast<std::uint8_t>(n & 0xFF));
    n >>= 8;
  }
  return out;
}

/// Inverse of encode_integer.
inline std::uint64_t decode_integer(ByteView b) {
  if (b.size() > 8) throw EncodingError("integer wider than 64 bits");
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    n |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return n;
}

}  // namespace entropchain
