#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "sct/theory.hpp"

namespace sct {

struct EnumerationStats {
  std::int64_t candidates = 0;
  std::int64_t admissible = 0;
  std::int64_t pruned = 0;  // candidates rejected by the integer filter
  double wall_ms = 0;
};

struct EnumerationResult {
  GroupPtr group;
  std::vector<SetPartition> class_partitions;       // canonical order
  std::vector<SuperTheory> theories;                // aligned; filled when a table is given
  EnumerationStats stats;
  std::vector<std::pair<int, int>> hasse_edges;     // finer index -> coarser index, covers only
};

struct EnumerateOptions {
  std::int64_t cap = 5000000;  // bound on Bell(c-1)
  int jobs = 1;
  bool with_characters = true;
};

namespace detail {

// One worker walks every coarsening extending its prefix and keeps the
// admissible ones as per-class part-id vectors.
struct EnumWorker {
  const FiniteGroup* g = nullptr;
  const StructureConstants* sc = nullptr;
  std::vector<int> prefix;
  bool use_prefix = false;
  std::int64_t candidates = 0;
  std::vector<std::vector<int>> found;

  void run() {
    const int c = g->num_classes();
    std::vector<long> scratch;
    std::vector<std::vector<int>> class_blocks;
    std::vector<int> block_of_class(static_cast<std::size_t>(c));
    CoarseningIterator it =
        use_prefix ? CoarseningIterator(g->classes, 0, prefix) : CoarseningIterator(g->classes, 0);
    for (; !it.done(); it.advance()) {
      ++candidates;
      auto per_block = it.current_block_rgs();
      int parts = 0;
      for (int v : per_block) parts = std::max(parts, v + 1);
      class_blocks.assign(static_cast<std::size_t>(parts), {});
      for (int cls = 0; cls < c; ++cls) {
        block_of_class[static_cast<std::size_t>(cls)] = per_block[static_cast<std::size_t>(cls)];
        class_blocks[static_cast<std::size_t>(per_block[static_cast<std::size_t>(cls)])].push_back(cls);
      }
      if (class_partition_admissible(*sc, class_blocks, block_of_class, &scratch))
        found.push_back(std::move(per_block));
    }
  }
};

inline SetPartition expand_class_partition(const FiniteGroup& g, const std::vector<int>& per_block) {
  std::vector<int> rgs(static_cast<std::size_t>(g.order));
  for (int e = 0; e < g.order; ++e)
    rgs[static_cast<std::size_t>(e)] = per_block[static_cast<std::size_t>(g.class_of[static_cast<std::size_t>(e)])];
  std::vector<int> relabel(per_block.size(), -1);
  int next = 0;
  for (int& v : rgs) {
    if (relabel[static_cast<std::size_t>(v)] == -1) relabel[static_cast<std::size_t>(v)] = next++;
    v = relabel[static_cast<std::size_t>(v)];
  }
  return SetPartition::from_rgs(std::move(rgs));
}

}  // namespace detail

inline EnumerationResult enumerate_sup(const GroupPtr& g, const CharacterTable* table = nullptr,
                                       EnumerateOptions opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  if (table && table->group.get() != g.get())
    throw std::invalid_argument("enumerate_sup: table belongs to a different group");
  const int c = g->num_classes();
  if (c - 1 > 25)
    throw std::invalid_argument("enumeration cap exceeded: " + std::to_string(c) +
                                " classes need Bell(" + std::to_string(c - 1) +
                                ") > 10^18 candidates");
  const std::uint64_t space = bell_number(c - 1);
  if (opt.cap >= 0 && space > static_cast<std::uint64_t>(opt.cap))
    throw std::invalid_argument("enumeration cap exceeded: " + std::to_string(c) +
                                " classes need Bell(" + std::to_string(c - 1) + ") = " +
                                std::to_string(space) + " candidates, cap is " +
                                std::to_string(opt.cap));

  const auto sc = structure_constant_table(*g);
  std::vector<detail::EnumWorker> workers;
  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    workers.emplace_back();
    workers.back().g = g.get();
    workers.back().sc = &sc;
    workers.back().run();
  } else {
    // split at the shallowest decision depth that feeds every worker
    int depth = 1;
    std::vector<std::vector<int>> prefixes;
    for (; depth <= c - 1; ++depth) {
      prefixes = CoarseningIterator::prefixes(g->classes, 0, depth);
      if (static_cast<int>(prefixes.size()) >= jobs || depth == c - 1) break;
    }
    if (prefixes.empty()) prefixes = CoarseningIterator::prefixes(g->classes, 0, c > 1 ? 1 : 0);
    workers.resize(prefixes.size());
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
      workers[i].g = g.get();
      workers[i].sc = &sc;
      workers[i].prefix = prefixes[i];
      workers[i].use_prefix = true;
    }
    std::vector<std::thread> pool;
    std::size_t next_worker = 0;
    while (next_worker < workers.size()) {
      const std::size_t batch = std::min<std::size_t>(static_cast<std::size_t>(jobs),
                                                      workers.size() - next_worker);
      pool.clear();
      for (std::size_t i = 0; i < batch; ++i)
        pool.emplace_back([&workers, next_worker, i] { workers[next_worker + i].run(); });
      for (auto& th : pool) th.join();
      next_worker += batch;
    }
  }

  EnumerationResult out;
  out.group = g;
  for (auto& w : workers) {
    out.stats.candidates += w.candidates;
    for (auto& f : w.found) out.class_partitions.push_back(detail::expand_class_partition(*g, f));
  }
  out.stats.admissible = static_cast<std::int64_t>(out.class_partitions.size());
  out.stats.pruned = out.stats.candidates - out.stats.admissible;
  std::sort(out.class_partitions.begin(), out.class_partitions.end());

  if (table && opt.with_characters) {
    out.theories.reserve(out.class_partitions.size());
    for (const auto& k : out.class_partitions) {
      auto r = x_from_k(*table, k);
      if (!r.ok())
        throw std::logic_error("enumerate_sup: admissible partition failed character attachment: " +
                               r.rejection->message);
      out.theories.push_back(std::move(*r.value));
    }
  }

  // Hasse edges: covering pairs of the refinement order.
  const int t = static_cast<int>(out.class_partitions.size());
  std::vector<std::vector<char>> leq(static_cast<std::size_t>(t),
                                     std::vector<char>(static_cast<std::size_t>(t), 0));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      if (i != j)
        leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            refines(out.class_partitions[static_cast<std::size_t>(i)],
                    out.class_partitions[static_cast<std::size_t>(j)]);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      if (!leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
      bool cover = true;
      for (int k = 0; k < t && cover; ++k)
        cover = !(leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                  leq[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
      if (cover) out.hasse_edges.emplace_back(i, j);
    }
  std::sort(out.hasse_edges.begin(), out.hasse_edges.end());

  out.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// Hasse diagram of the refinement order in DOT, bottom (finest) to top.
inline std::string lattice_dot(const EnumerationResult& r) {
  std::string dot = "digraph sup {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < r.class_partitions.size(); ++i) {
    const auto& p = r.class_partitions[i];
    dot += "  t" + std::to_string(i) + " [label=\"|C|=" + std::to_string(p.block_count()) + "\\n" +
           p.digest() + "\"];\n";
  }
  for (const auto& e : r.hasse_edges)
    dot += "  t" + std::to_string(e.first) + " -> t" + std::to_string(e.second) + ";\n";
  dot += "}\n";
  return dot;
}

}  // namespace sct
