#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "entropchain/block.hpp"
#include "entropchain/image.hpp"
#include "entropchain/mining.hpp"
#include "entropchain/synthetic.hpp"

using namespace entropchain;

namespace {

std::string hex(ByteView b) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (auto v : b) {
    out += digits[v >> 4];
    out += digits[v & 0xF];
  }
  return out;
}

// 64-byte digest whose base64 encoding starts with the given 4 characters.
Bytes digest_with_leading(const std::string& lead4) {
  REQUIRE(lead4.size() == 4);
  return decode64("0x40_" + lead4 + std::string(80, 'A') + "AA==");
}

std::vector<Block> mine_chain(std::size_t extra_blocks, unsigned rho = 0) {
  RandomNonceSource source(8);
  DifficultyParams params{rho};
  std::vector<Block> chain;
  chain.push_back(
      mine_block(nullptr, to_bytes("genesis"), source, params)->block);
  for (std::size_t i = 1; i <= extra_blocks; ++i)
    chain.push_back(mine_block(&chain.back(), to_bytes("block" + std::to_string(i)),
                               source, params)
                        ->block);
  return chain;
}

}  // namespace

TEST_CASE("compute_block_hash matches frozen SHA-512 golden", "[blockcore]") {
  // preimage is "genesis" + "0x40_AQIDBAUGBwg=" (encoded 8-byte nonce)
  const Bytes nonce{1, 2, 3, 4, 5, 6, 7, 8};
  const Bytes digest = compute_block_hash("", to_bytes("genesis"), nonce);
  REQUIRE(digest.size() == 64);
  CHECK(hex(digest) ==
        "575710cf1db426a090b6732c7a9a925190899ca4e90e8fe813f3e5f2be737599"
        "3592e4b85109881d57ed1181302c5300af5c20114fa89ae17f29062951b940c5");
}

TEST_CASE("compute_block_hash is deterministic and input-sensitive",
          "[blockcore]") {
  const Bytes nonce{9, 9, 9, 9};
  const Bytes a = compute_block_hash("", to_bytes("data"), nonce);
  CHECK(a == compute_block_hash("", to_bytes("data"), nonce));
  CHECK(a != compute_block_hash("", to_bytes("dat`"), nonce));
}

TEST_CASE("meets_difficulty follows the leading-character table",
          "[blockcore]") {
  const Bytes three_zeros = digest_with_leading("000J");
  const Bytes two_zeros = digest_with_leading("00AJ");
  const Bytes one_zero = digest_with_leading("0eAJ");
  const Bytes no_zeros = digest_with_leading("aeAJ");

  for (unsigned rho = 0; rho <= 3; ++rho) CHECK(meets_difficulty(three_zeros, rho));
  CHECK_FALSE(meets_difficulty(three_zeros, 4));
  for (unsigned rho = 0; rho <= 2; ++rho) CHECK(meets_difficulty(two_zeros, rho));
  CHECK_FALSE(meets_difficulty(two_zeros, 3));
  CHECK(meets_difficulty(one_zero, 1));
  CHECK_FALSE(meets_difficulty(one_zero, 2));
  CHECK(meets_difficulty(no_zeros, 0));
  CHECK_FALSE(meets_difficulty(no_zeros, 1));
}

TEST_CASE("meets_difficulty is monotone in difficulty order",
          "[blockcore][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Bytes digest(64);
    for (auto& b : digest) b = static_cast<std::uint8_t>(rng());
    bool prev = true;
    for (unsigned rho = 0; rho <= 6; ++rho) {
      const bool ok = meets_difficulty(digest, rho);
      if (ok) CHECK(prev);  // true at rho implies true at all smaller rho
      prev = ok;
    }
  }
}

TEST_CASE("validate_block accepts freshly mined blocks", "[blockcore]") {
  const auto chain = mine_chain(1);
  const DifficultyParams params{0};
  const NoncePolicy policy{NonceMode::Unconstrained};
  CHECK_FALSE(validate_block(chain[0], nullptr, params, policy));
  CHECK_FALSE(validate_block(chain[1], &chain[0], params, policy));
}

TEST_CASE("validate_block reports the first failed check", "[blockcore]") {
  auto chain = mine_chain(1);
  const DifficultyParams params{0};
  const NoncePolicy policy{NonceMode::Unconstrained};

  SECTION("altered data byte") {
    chain[1].data[0] ^= 0x01;
    const auto v = validate_block(chain[1], &chain[0], params, policy);
    REQUIRE(v);
    CHECK(v->kind == ViolationKind::HashMismatch);
  }

  SECTION("wrong height") {
    Block b = make_block(&chain[0], to_bytes("x"), Bytes{1});
    b.height = 5;
    b.hash = compute_block_hash(b.previous_hash_encoded, b.data, b.nonce);
    const auto v = validate_block(b, &chain[0], params, policy);
    REQUIRE(v);
    CHECK(v->kind == ViolationKind::HeightWrong);
  }

  SECTION("8-byte nonce under interesting-image policy") {
    const NoncePolicy image_policy{NonceMode::InterestingImage, 500};
    const auto v = validate_block(chain[1], &chain[0], params, image_policy);
    REQUIRE(v);
    CHECK(v->kind == ViolationKind::NonceNotImage);
  }

  SECTION("sub-threshold image nonce under interesting-image policy") {
    const NoncePolicy image_policy{NonceMode::InterestingImage, 500};
    const Bytes flat_nonce =
        serialize_image_nonce(synthetic::flat(80, 10, 10, 10));
    const Block b = make_block(&chain[0], to_bytes("x"), flat_nonce);
    const auto v = validate_block(b, &chain[0], params, image_policy);
    REQUIRE(v);
    CHECK(v->kind == ViolationKind::NonceBelowThreshold);
  }
}

TEST_CASE("validate_chain walks pairwise from genesis", "[blockcore]") {
  const DifficultyParams params{0};
  const NoncePolicy policy{NonceMode::Unconstrained};

  SECTION("valid 10-block chain") {
    const auto chain = mine_chain(10);
    CHECK_FALSE(validate_chain(chain, params, policy));
  }

  SECTION("single genesis block") {
    const auto chain = mine_chain(0);
    CHECK_FALSE(validate_chain(chain, params, policy));
  }

  SECTION("replaced nonce fails at that index") {
    auto chain = mine_chain(5);
    chain[3].nonce = Bytes{0xDE, 0xAD};
    const auto v = validate_chain(chain, params, policy);
    REQUIRE(v);
    CHECK(v->index == 3);
    CHECK(v->violation.kind == ViolationKind::HashMismatch);
  }

  SECTION("empty chain") {
    const auto v = validate_chain({}, params, policy);
    REQUIRE(v);
    CHECK(v->violation.kind == ViolationKind::EmptyChain);
  }
}

TEST_CASE("render_block mirrors the display format", "[blockcore]") {
  const auto chain = mine_chain(0);
  const std::string s = render_block(chain[0]);
  CHECK(s.starts_with("-----block 0-----\nnonce 0x40_"));
  CHECK(s.find("\nprev None\n") != std::string::npos);
  CHECK(s.find("\ndata\n-----\ngenesis\n-----\n") != std::string::npos);
  CHECK(s.ends_with("-----End Block-----"));
}
