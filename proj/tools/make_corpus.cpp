// Writes the synthetic evaluation corpus (interesting/ and uninteresting/
// subdirectories) used by the eval command and the test suite.

#include <filesystem>
#include <iostream>

#include "entropchain/image_io.hpp"
#include "entropchain/synthetic.hpp"

using namespace entropchain;
namespace fs = std::filesystem;

int main(int argc, char** argv) {
  const fs::path root = argc > 1 ? argv[1] : "corpus";
  fs::create_directories(root / "interesting");
  fs::create_directories(root / "uninteresting");

  save_image(synthetic::structured_rings(), root / "interesting" / "rings.png");
  save_image(synthetic::structured_blocks(), root / "interesting" / "blocks.png");
  save_image(synthetic::structured_scene(), root / "interesting" / "scene.png");

  save_image(synthetic::flat(80, 255, 0, 0), root / "uninteresting" / "flat_red.png");
  save_image(synthetic::flat(80, 128, 128, 128),
             root / "uninteresting" / "flat_gray.png");
  save_image(synthetic::half_split(), root / "uninteresting" / "half_split.png");
  save_image(synthetic::noise_color(80, 1), root / "uninteresting" / "noise_a.png");
  save_image(synthetic::noise_color(80, 2), root / "uninteresting" / "noise_b.png");
  save_image(synthetic::noise_mono(80, 3), root / "uninteresting" / "noise_m.png");

  std::cout << "wrote corpus to " << root.string() << "\n";
  return 0;
}
