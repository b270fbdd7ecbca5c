// Enumerate every supercharacter theory of an abelian group and print the
// lattice: one line per theory, then the cover relations.
//
//   ./enumerate_lattice            (defaults to Z8)
//   ./enumerate_lattice 2 4        (Z2 x Z4)

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "sct/enumerate.hpp"

using namespace sct;

namespace {

std::string show(const SetPartition& p) {
  std::string s = "{";
  bool first_block = true;
  for (const auto& blk : p.blocks()) {
    if (!first_block) s += " | ";
    first_block = false;
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(blk[i]);
    }
  }
  return s + "}";
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<long> orders;
  for (int i = 1; i < argc; ++i) orders.push_back(std::atol(argv[i]));
  if (orders.empty()) orders = {8};

  auto g = build_abelian(orders);
  auto t = abelian_character_table(g);
  auto res = enumerate_sup(g, &t);

  std::printf("group of order %d, %lld candidates, %lld theories\n\n", g->order,
              static_cast<long long>(res.stats.candidates),
              static_cast<long long>(res.stats.admissible));
  for (std::size_t i = 0; i < res.theories.size(); ++i) {
    const auto& th = res.theories[i];
    std::printf("[%zu] %d blocks\n", i, th.size());
    std::printf("     classes    %s\n", show(th.class_part).c_str());
    std::printf("     characters %s\n", show(th.char_part).c_str());
  }
  std::printf("\ncovers (finer -> coarser):\n");
  for (const auto& [a, b] : res.hasse_edges) std::printf("  [%d] -> [%d]\n", a, b);
  return 0;
}
