#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

// Set partitions in restricted-growth canonical form.  rgs[i] is the block id
// of element i; block ids appear in first-use order, so blocks are implicitly
// sorted by smallest member and equality of partitions is equality of rgs.

namespace sct {

class SetPartition {
 public:
  SetPartition() = default;

  static SetPartition singletons(int n) {
    std::vector<int> rgs(static_cast<std::size_t>(n));
    std::iota(rgs.begin(), rgs.end(), 0);
    return from_rgs(std::move(rgs));
  }

  static SetPartition one_block(int n) {
    if (n == 0) return SetPartition();
    return from_rgs(std::vector<int>(static_cast<std::size_t>(n), 0));
  }

  static SetPartition from_rgs(std::vector<int> rgs) {
    SetPartition p;
    int next = 0;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
      if (rgs[i] < 0 || rgs[i] > next) throw std::invalid_argument("rgs violates restricted growth");
      if (rgs[i] == next) ++next;
    }
    p.rgs_ = std::move(rgs);
    p.rebuild_blocks(next);
    return p;
  }

  // Accepts blocks in any order; canonicalizes.  Must cover 0..n-1 exactly once.
  static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw std::invalid_argument("empty block");
      for (int x : blocks[b]) {
        if (x < 0 || x >= n) throw std::invalid_argument("block element out of range");
        if (owner[static_cast<std::size_t>(x)] != -1) throw std::invalid_argument("duplicate element in blocks");
        owner[static_cast<std::size_t>(x)] = static_cast<int>(b);
      }
    }
    std::vector<int> relabel(blocks.size(), -1);
    std::vector<int> rgs(static_cast<std::size_t>(n));
    int next = 0;
    for (int i = 0; i < n; ++i) {
      int b = owner[static_cast<std::size_t>(i)];
      if (b == -1) throw std::invalid_argument("blocks do not cover the ground set");
      if (relabel[static_cast<std::size_t>(b)] == -1) relabel[static_cast<std::size_t>(b)] = next++;
      rgs[static_cast<std::size_t>(i)] = relabel[static_cast<std::size_t>(b)];
    }
    SetPartition p;
    p.rgs_ = std::move(rgs);
    p.rebuild_blocks(next);
    return p;
  }

  int size() const { return static_cast<int>(rgs_.size()); }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_of(int i) const { return rgs_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& rgs() const { return rgs_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(int b) const { return blocks_.at(static_cast<std::size_t>(b)); }

  friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.rgs_ == b.rgs_; }
  friend bool operator!=(const SetPartition& a, const SetPartition& b) { return !(a == b); }
  friend bool operator<(const SetPartition& a, const SetPartition& b) { return a.rgs_ < b.rgs_; }

  std::string digest() const {
    std::vector<int> sizes;
    sizes.reserve(blocks_.size());
    for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    std::string s;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (i) s += '.';
      s += std::to_string(sizes[i]);
    }
    return s;
  }

 private:
  void rebuild_blocks(int count) {
    blocks_.assign(static_cast<std::size_t>(count), {});
    for (std::size_t i = 0; i < rgs_.size(); ++i)
      blocks_[static_cast<std::size_t>(rgs_[i])].push_back(static_cast<int>(i));
  }

  std::vector<int> rgs_;
  std::vector<std::vector<int>> blocks_;
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a), b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace detail

inline SetPartition join(const SetPartition& p, const SetPartition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("join: ground sets differ");
  detail::UnionFind uf(p.size());
  for (const auto& part : {std::cref(p), std::cref(q)}) {
    for (const auto& block : part.get().blocks())
      for (std::size_t i = 1; i < block.size(); ++i) uf.unite(block[0], block[i]);
  }
  std::vector<int> rgs(static_cast<std::size_t>(p.size()));
  std::vector<int> label(static_cast<std::size_t>(p.size()), -1);
  int next = 0;
  for (int i = 0; i < p.size(); ++i) {
    int root = uf.find(i);
    if (label[static_cast<std::size_t>(root)] == -1) label[static_cast<std::size_t>(root)] = next++;
    rgs[static_cast<std::size_t>(i)] = label[static_cast<std::size_t>(root)];
  }
  return SetPartition::from_rgs(std::move(rgs));
}

inline SetPartition meet(const SetPartition& p, const SetPartition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("meet: ground sets differ");
  std::vector<std::pair<int, int>> key(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) key[static_cast<std::size_t>(i)] = {p.block_of(i), q.block_of(i)};
  std::vector<int> rgs(static_cast<std::size_t>(p.size()));
  std::vector<std::pair<std::pair<int, int>, int>> seen;
  int next = 0;
  for (int i = 0; i < p.size(); ++i) {
    int found = -1;
    for (const auto& [k, v] : seen)
      if (k == key[static_cast<std::size_t>(i)]) { found = v; break; }
    if (found == -1) {
      found = next++;
      seen.push_back({key[static_cast<std::size_t>(i)], found});
    }
    rgs[static_cast<std::size_t>(i)] = found;
  }
  return SetPartition::from_rgs(std::move(rgs));
}

// Every block of p lies inside a block of q; equivalent to join(p, q) == q.
inline bool refines(const SetPartition& p, const SetPartition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("refines: ground sets differ");
  for (const auto& block : p.blocks()) {
    int home = q.block_of(block[0]);
    for (int x : block)
      if (q.block_of(x) != home) return false;
  }
  return true;
}

inline std::vector<std::vector<int>> partition_matrix(const SetPartition& p) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(p.block_count()),
                                  std::vector<int>(static_cast<std::size_t>(p.size()), 0));
  for (int i = 0; i < p.size(); ++i) m[static_cast<std::size_t>(p.block_of(i))][static_cast<std::size_t>(i)] = 1;
  return m;
}

inline std::uint64_t bell_number(int n) {
  if (n < 0) throw std::invalid_argument("bell_number: negative");
  // Bell triangle; values beyond Bell(25) overflow 64 bits and are out of scope.
  if (n > 25) throw std::invalid_argument("bell_number: out of supported range");
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(i) + 1);
    next[0] = row.back();
    for (int j = 1; j <= i; ++j) next[static_cast<std::size_t>(j)] =
        next[static_cast<std::size_t>(j) - 1] + row[static_cast<std::size_t>(j) - 1];
    row = std::move(next);
  }
  return row[0];
}

// Enumerates the partitions of the set of blocks of `base` in which the block
// containing `pinned` stays a singleton part, yielding each induced coarsening
// of the ground set.  Iteration order is descending-lex over the restricted
// growth string of the non-pinned blocks: the identity coarsening comes first,
// the two-part coarsening (pinned block vs everything else) comes last.  The
// iterator can be restricted to a fixed rgs prefix, which splits the search
// space into disjoint deterministic subtrees for parallel scans.
class CoarseningIterator {
 public:
  CoarseningIterator(const SetPartition& base, int pinned)
      : CoarseningIterator(base, pinned, {}) {}

  CoarseningIterator(const SetPartition& base, int pinned, std::vector<int> prefix)
      : base_(base), pinned_block_(base.block_of(pinned)) {
    const int b = base_.block_count();
    others_.reserve(static_cast<std::size_t>(b) - 1);
    for (int blk = 0; blk < b; ++blk)
      if (blk != pinned_block_) others_.push_back(blk);
    k_ = static_cast<int>(others_.size());
    prefix_len_ = static_cast<int>(prefix.size());
    if (prefix_len_ > k_) throw std::invalid_argument("prefix longer than search depth");
    rgs_ = std::move(prefix);
    validate_prefix();
    rgs_.resize(static_cast<std::size_t>(k_));
    // fill the suffix with the lex-max extension: all distinct block ids
    int mx = -1;
    for (int i = 0; i < prefix_len_; ++i) mx = std::max(mx, rgs_[static_cast<std::size_t>(i)]);
    for (int i = prefix_len_; i < k_; ++i) {
      rgs_[static_cast<std::size_t>(i)] = mx + 1;
      mx += 1;
    }
    done_ = false;
    if (k_ == 0) single_empty_ = true;
  }

  bool done() const { return done_; }

  // Current coarsening expanded to the ground set.
  SetPartition current() const {
    if (done_) throw std::logic_error("CoarseningIterator exhausted");
    return expand(current_block_rgs());
  }

  // Current partition of the base blocks: part id per base block, pinned part first.
  std::vector<int> current_block_rgs() const {
    if (done_) throw std::logic_error("CoarseningIterator exhausted");
    std::vector<int> per_block(static_cast<std::size_t>(base_.block_count()));
    per_block[static_cast<std::size_t>(pinned_block_)] = 0;
    for (int i = 0; i < k_; ++i)
      per_block[static_cast<std::size_t>(others_[static_cast<std::size_t>(i)])] =
          rgs_[static_cast<std::size_t>(i)] + 1;
    return per_block;
  }

  void advance() {
    if (done_) throw std::logic_error("CoarseningIterator exhausted");
    if (single_empty_) { done_ = true; return; }
    // descending lex: find the rightmost position after the frozen prefix that
    // can decrease, then refill the tail with the largest legal values.
    int i = k_ - 1;
    while (i >= prefix_len_ && rgs_[static_cast<std::size_t>(i)] == 0) --i;
    if (i < prefix_len_) { done_ = true; return; }
    rgs_[static_cast<std::size_t>(i)] -= 1;
    int mx = -1;
    for (int j = 0; j < i; ++j) mx = std::max(mx, rgs_[static_cast<std::size_t>(j)]);
    mx = std::max(mx, rgs_[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < k_; ++j) {
      rgs_[static_cast<std::size_t>(j)] = mx + 1;
      mx += 1;
    }
  }

  // All length-d prefixes over the non-pinned blocks, in iteration order.
  static std::vector<std::vector<int>> prefixes(const SetPartition& base, int pinned, int depth) {
    CoarseningIterator it(base, pinned);
    depth = std::min(depth, it.k_);
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    gather_prefixes(depth, cur, out);
    return out;
  }

 private:
  static void gather_prefixes(int depth, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == depth) {
      out.push_back(cur);
      return;
    }
    int mx = -1;
    for (int v : cur) mx = std::max(mx, v);
    for (int v = mx + 1; v >= 0; --v) {  // descending to match iteration order
      cur.push_back(v);
      gather_prefixes(depth, cur, out);
      cur.pop_back();
    }
  }

  void validate_prefix() const {
    int mx = -1;
    for (int i = 0; i < prefix_len_; ++i) {
      int v = rgs_[static_cast<std::size_t>(i)];
      if (v < 0 || v > mx + 1) throw std::invalid_argument("prefix violates restricted growth");
      mx = std::max(mx, v);
    }
  }

  SetPartition expand(const std::vector<int>& per_block) const {
    std::vector<int> elem_rgs(static_cast<std::size_t>(base_.size()));
    for (int i = 0; i < base_.size(); ++i)
      elem_rgs[static_cast<std::size_t>(i)] = per_block[static_cast<std::size_t>(base_.block_of(i))];
    // relabel to canonical first-use order
    std::vector<int> relabel(per_block.size(), -1);
    int next = 0;
    for (int& v : elem_rgs) {
      if (relabel[static_cast<std::size_t>(v)] == -1) relabel[static_cast<std::size_t>(v)] = next++;
      v = relabel[static_cast<std::size_t>(v)];
    }
    return SetPartition::from_rgs(std::move(elem_rgs));
  }

  SetPartition base_;
  int pinned_block_ = 0;
  std::vector<int> others_;
  int k_ = 0;
  int prefix_len_ = 0;
  std::vector<int> rgs_;
  bool done_ = true;
  bool single_empty_ = false;
};

inline std::vector<SetPartition> enumerate_refinement_coarsenings(const SetPartition& base, int pinned) {
  std::vector<SetPartition> out;
  for (CoarseningIterator it(base, pinned); !it.done(); it.advance()) out.push_back(it.current());
  return out;
}

// Every partition of {0..n-1}, by brute-force rgs extension.  Test-scale only.
inline std::vector<SetPartition> all_partitions(int n) {
  std::vector<SetPartition> out;
  std::vector<int> rgs(static_cast<std::size_t>(n));
  if (n == 0) return {SetPartition()};
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == n) {
      out.push_back(SetPartition::from_rgs(rgs));
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      rgs[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, std::max(mx, v));
    }
  };
  rec(rec, 0, -1);
  return out;
}

}  // namespace sct
