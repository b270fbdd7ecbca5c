// Factor a theory of Z8 down its subgroup chain, rebuild it with star
// products, and show its dual.

#include <cstdio>
#include <string>

#include "sct/duality.hpp"

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

std::string show_set(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

}  // namespace

int main() {
  auto t8 = abelian_character_table(build_abelian({8}));
  Workspace ws(t8);

  auto e = x_from_k(t8, SetPartition::from_blocks(8, {{0}, {4}, {2, 6}, {1, 3, 5, 7}}));
  if (!e.ok()) return 1;
  std::printf("theory on Z8: classes %s\n\n", show(e.value->class_part).c_str());

  auto fc = unique_factorization(ws, *e.value);
  std::printf("factorization chain:");
  for (const auto& stage : fc.chain) std::printf(" %s", show_set(stage).c_str());
  std::printf("\n");
  for (std::size_t i = 0; i < fc.factors.size(); ++i)
    std::printf("  factor %zu on %s / %s: %s%s\n", i, show_set(fc.chain[i + 1]).c_str(),
                show_set(fc.chain[i]).c_str(), show(fc.factors[i].class_part).c_str(),
                fc.indecomposable[i] ? " (indecomposable)" : "");

  const std::vector<int> n = {0, 4};
  auto fo = factor_over(ws, *e.value, n);
  if (fo.ok()) {
    std::printf("\nfactored over %s:\n", show_set(n).c_str());
    std::printf("  on the subgroup  %s\n", show(fo.factors->on_sub.class_part).c_str());
    std::printf("  on the quotient  %s\n", show(fo.factors->on_quot.class_part).c_str());
    auto back = star_product(ws, n, fo.factors->on_sub, fo.factors->on_quot);
    std::printf("  star of the two  %s (%s)\n", show(back.class_part).c_str(),
                same_theory(back, *e.value) ? "matches" : "differs");
  }

  auto d = dual_theory(t8, *e.value);
  std::printf("\ndual theory: classes %s\n", show(d.class_part).c_str());
  std::printf("double dual matches: %s\n",
              same_theory(dual_theory(t8, d), *e.value) ? "yes" : "no");
  return 0;
}
