// Builds a tower of marked quotients over a twelve-point circle, prints the
// level structure and its GraphViz diagram, and enumerates the coherent
// threads (one block per level, compatible with every bonding map).
//
// Run:  ./tower_walk [n]        (default n = 12)

#include <cstdlib>
#include <iostream>

#include "cyclord/limits.hpp"
#include "cyclord/orders.hpp"

using namespace cyclord;

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 12;
  if (n < 4 || n > 24) {
    std::cerr << "pick n between 4 and 24\n";
    return 2;
  }
  auto host = make_cn(n);
  std::cout << "host: the " << n << "-point circle 0.." << n - 1 << "\n\n";

  // Two incomparable marker families; the builder closes them under joins.
  std::vector<std::vector<int>> seeds = {{0, n / 2}, {n / 3, n / 3 + n / 2}};
  auto tw = build_tower(host, seeds);

  std::cout << "levels (marker set -> blocks):\n";
  for (std::size_t i = 0; i < tw.levels.size(); ++i) {
    const auto& lv = tw.levels[i];
    std::cout << "  level " << i << ": markers {";
    for (std::size_t t = 0; t < lv.support.size(); ++t)
      std::cout << (t ? "," : "") << lv.support[t];
    std::cout << "}  blocks ";
    for (std::size_t t = 0; t < lv.blocks.size(); ++t)
      std::cout << (t ? " " : "") << block_label(lv.blocks[t]);
    std::cout << "\n";
  }

  std::cout << "\nbondings (fine level -> coarse level):";
  for (const auto& [key, bond] : tw.bondings)
    std::cout << "  " << key.first << "->" << key.second;
  std::cout << "\n\nverify: " << (verify_tower(tw).ok ? "coherent" : "INCOHERENT") << "\n";

  auto threads = all_threads(tw);
  std::cout << "\ncoherent threads: " << threads.size() << "\n";
  std::size_t realized = 0;
  for (const auto& th : threads) {
    bool hit = false;
    for (int x : host.cycle())
      if (thread_of(tw, x) == th) hit = true;
    if (hit) ++realized;
    std::cout << "  (";
    for (std::size_t i = 0; i < th.size(); ++i)
      std::cout << (i ? ", " : "") << block_label(th[i]);
    std::cout << ")" << (hit ? "" : "   <- not the image of any host point") << "\n";
  }
  std::cout << "realized by host points: " << realized << " of " << threads.size()
            << " (every thread of a finite truncation is realized; ideal points\n"
            << " only appear in the limit of an infinite refining family)\n";

  std::cout << "\nGraphViz diagram (pipe into `dot -Tsvg`):\n" << tower_dot(tw);
  return 0;
}
