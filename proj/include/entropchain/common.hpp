#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace entropchain {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EncodingError : Error {
  using Error::Error;
};

struct ImageError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

inline Bytes to_bytes(std::string_view s) {
  return Bytes(s.begin(), s.end());
}

inline std::string to_string(ByteView b) {
  return std::string(b.begin(), b.end());
}

}  // namespace entropchain
