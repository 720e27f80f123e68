#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>

#include "entropchain/chainstore.hpp"
#include "entropchain/mining.hpp"
#include "temp_dir.hpp"

using namespace entropchain;

namespace {

std::vector<Block> mine_chain(std::size_t extra_blocks, std::mt19937_64& rng) {
  DifficultyParams params{0};
  RandomNonceSource source(8);
  std::vector<Block> chain;
  chain.push_back(
      mine_block(nullptr, to_bytes("genesis"), source, params)->block);
  for (std::size_t i = 1; i <= extra_blocks; ++i) {
    Bytes data(rng() % 40);
    for (auto& b : data) b = static_cast<std::uint8_t>(rng());
    chain.push_back(mine_block(&chain.back(), data, source, params)->block);
  }
  return chain;
}

}  // namespace

TEST_CASE("save/load round trip", "[chainstore]") {
  TempDir tmp;
  std::mt19937_64 rng(29);
  const auto path = tmp.path / "chain.tsv";

  SECTION("10-block chain") {
    const auto chain = mine_chain(10, rng);
    save_chain(chain, path);
    CHECK(load_chain(path) == chain);
  }

  SECTION("randomized data and nonces round trip") {
    for (int trial = 0; trial < 5; ++trial) {
      const auto chain = mine_chain(rng() % 6, rng);
      save_chain(chain, path);
      CHECK(load_chain(path) == chain);
    }
  }
}

TEST_CASE("load rejects corrupt files", "[chainstore]") {
  TempDir tmp;
  std::mt19937_64 rng(31);
  const auto path = tmp.path / "chain.tsv";
  const auto chain = mine_chain(3, rng);
  save_chain(chain, path);

  SECTION("corrupted encoded field reports the line") {
    std::ifstream in(path);
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    in.close();
    lines[2][lines[2].size() - 10] ^= 0x02;  // damage hash field on line 3
    std::ofstream out(path, std::ios::trunc);
    for (const auto& l : lines) out << l << '\n';
    out.close();
    try {
      load_chain(path);
      FAIL("expected CorruptRecord");
    } catch (const CorruptRecord& e) {
      CHECK(e.line == 3);
    }
  }

  SECTION("empty file is missing genesis") {
    std::ofstream(path, std::ios::trunc).close();
    CHECK_THROWS_AS(load_chain(path), CorruptRecord);
  }

  SECTION("missing file") {
    CHECK_THROWS_AS(load_chain(tmp.path / "nope.tsv"), IoError);
  }

  SECTION("non-ascending heights") {
    std::ifstream in(path);
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    in.close();
    std::ofstream out(path, std::ios::trunc);
    out << lines[0] << '\n' << lines[2] << '\n';
    out.close();
    CHECK_THROWS_AS(load_chain(path), CorruptRecord);
  }
}

TEST_CASE("storage growth model", "[chainstore]") {
  CHECK(block_size_upper_bound({}) == 20'000);
  CHECK(block_size_upper_bound({19'200, 0, 10.0}) == 19'200);
  CHECK(block_size_upper_bound({19'200, 100, 10.0}) == 19'300);

  CHECK(chain_growth_per_year({}) == 1'051'920'000.0);
  CHECK(chain_growth_per_year({19'200, 800, 20.0}) == 525'960'000.0);
  CHECK(chain_growth_per_year({1, 0, 10.0}) == 52'596.0);

  CHECK_THROWS_AS(chain_growth_per_year({19'200, 800, 0.0}), Error);
}
