#pragma once

#include <openssl/evp.h>

#include "entropchain/common.hpp"

namespace entropchain {

constexpr std::size_t kDigestBytes = 64;

/// One-shot SHA-512.
inline Bytes sha512(ByteView data) {
  Bytes digest(kDigestBytes);
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha512(),
                 nullptr) != 1 ||
      len != kDigestBytes)
    throw Error("SHA-512 computation failed");
  return digest;
}

}  // namespace entropchain
