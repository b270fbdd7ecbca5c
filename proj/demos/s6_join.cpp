// Two admissible superclass partitions of S6 whose meet is not admissible.
// Their join is, so admissible partitions form a join-semilattice but not a
// lattice under meet.  Pass the bundled table (data/s6.json) to also attach
// the character side of the joined theory.

#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "sct/io.hpp"

using namespace sct;

namespace {

using Type = std::vector<int>;

std::string type_name(const Type& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(t[i]);
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  auto pc = build_from_permutations({{1, 0, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 0}});
  std::map<Type, std::vector<int>> by_type;
  for (int e = 0; e < pc.group->order; ++e)
    by_type[cycle_type(pc.perms[static_cast<std::size_t>(e)])].push_back(e);
  std::printf("S6: order %d, %d conjugacy classes\n\n", pc.group->order, pc.group->num_classes());

  const Type one{1, 1, 1, 1, 1, 1}, t2{2, 1, 1, 1, 1}, t22{2, 2, 1, 1}, t222{2, 2, 2},
      t3{3, 1, 1, 1}, t32{3, 2, 1}, t33{3, 3}, t4{4, 1, 1}, t42{4, 2}, t5{5, 1}, t6{6};
  const std::vector<std::vector<std::vector<Type>>> specs = {
      {{one}, {t2, t222, t4}, {t6, t32}, {t22}, {t3, t33}, {t42}, {t5}},
      {{one}, {t2, t222, t4, t6, t32}, {t22}, {t3}, {t33}, {t42}, {t5}}};

  std::vector<SetPartition> parts;
  for (const auto& spec : specs) {
    std::vector<std::vector<int>> blocks;
    std::printf("%s =", parts.empty() ? "K" : "L");
    for (const auto& group : spec) {
      std::vector<int> blk;
      std::string label;
      for (const auto& t : group) {
        const auto& ids = by_type.at(t);
        blk.insert(blk.end(), ids.begin(), ids.end());
        label += (label.empty() ? "" : " u ") + type_name(t);
      }
      std::printf(" {%s}", label.c_str());
      blocks.push_back(blk);
    }
    std::printf("\n");
    parts.push_back(SetPartition::from_blocks(pc.group->order, blocks));
  }

  std::printf("\nK admissible:        %s\n",
              superclass_admissible(*pc.group, parts[0]) ? "yes" : "no");
  std::printf("L admissible:        %s\n",
              superclass_admissible(*pc.group, parts[1]) ? "yes" : "no");
  auto common = meet(parts[0], parts[1]);
  std::printf("meet (%d blocks):     %s\n", common.block_count(),
              superclass_admissible(*pc.group, common) ? "yes" : "no");
  auto joined = join(parts[0], parts[1]);
  std::printf("join (%d blocks):     %s\n", joined.block_count(),
              superclass_admissible(*pc.group, joined) ? "yes" : "no");

  if (argc > 1) {
    std::ifstream in(argv[1]);
    if (!in) {
      std::fprintf(stderr, "cannot read %s\n", argv[1]);
      return 2;
    }
    auto table = table_from_json(Json::parse(in));
    auto full = x_from_k(table, joined);
    if (!full.ok()) {
      std::printf("\njoin failed character attachment: %s\n", full.rejection->message.c_str());
      return 1;
    }
    std::printf("\njoined theory verified, character blocks:");
    for (const auto& blk : full.value->char_part.blocks()) {
      std::printf(" {");
      for (std::size_t i = 0; i < blk.size(); ++i) std::printf("%s%d", i ? "," : "", blk[i]);
      std::printf("}");
    }
    std::printf("\n");
  }
  return 0;
}
