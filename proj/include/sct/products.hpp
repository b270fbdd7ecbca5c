#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sct/theory.hpp"

namespace sct {

// Subgroups that are unions of superclasses of c.  Every such subgroup is
// normal (superclasses are class unions), sorted by order then elementwise.
inline std::vector<Subgroup> c_normal_subgroups(const SuperTheory& c) {
  const GroupPtr& g = c.group;
  const auto blocks = c.class_part.blocks();
  const int b = static_cast<int>(blocks.size());
  if (b > 30) throw std::invalid_argument("c_normal_subgroups: too many superclasses");
  std::vector<Subgroup> out;
  const std::uint64_t lim = std::uint64_t{1} << (b - 1);
  for (std::uint64_t mask = 0; mask < lim; ++mask) {
    long total = 1;
    for (int i = 1; i < b; ++i)
      if (mask >> (i - 1) & 1) total += static_cast<long>(blocks[static_cast<std::size_t>(i)].size());
    if (g->order % total != 0) continue;
    std::vector<int> els = blocks[0];
    for (int i = 1; i < b; ++i)
      if (mask >> (i - 1) & 1)
        els.insert(els.end(), blocks[static_cast<std::size_t>(i)].begin(),
                   blocks[static_cast<std::size_t>(i)].end());
    std::sort(els.begin(), els.end());
    if (!set_is_subgroup(*g, els)) continue;
    Subgroup s;
    s.parent = g;
    s.elements = std::move(els);
    s.is_normal = true;
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b2) {
    if (a.elements.size() != b2.elements.size()) return a.elements.size() < b2.elements.size();
    return a.elements < b2.elements;
  });
  return out;
}

// Does conjugation by every element of g map each superclass of c onto itself?
// c lives on the subgroup realization of n.
inline bool is_g_invariant(const GroupPtr& g, const Subgroup& n, const SuperTheory& c) {
  if (n.parent.get() != g.get()) throw std::invalid_argument("is_g_invariant: subgroup of a different group");
  if (!n.is_normal && !set_is_normal(*g, n.elements))
    throw std::invalid_argument("is_g_invariant: subgroup is not normal");
  const bool whole_group =
      static_cast<int>(n.elements.size()) == g->order && c.group.get() == g.get();
  const bool realization = c.group->derivation == FiniteGroup::Derivation::subgroup &&
                           c.group->parent.get() == g.get() && c.group->to_parent == n.elements;
  if (!whole_group && !realization)
    throw std::invalid_argument("is_g_invariant: theory does not live on the subgroup");
  std::vector<int> local_of(static_cast<std::size_t>(g->order), -1);
  for (int i = 0; i < static_cast<int>(n.elements.size()); ++i)
    local_of[static_cast<std::size_t>(n.elements[static_cast<std::size_t>(i)])] = i;
  for (int y = 0; y < g->order; ++y) {
    const int yi = g->inverse(y);
    for (int x = 0; x < c.group->order; ++x) {
      const int px = n.elements[static_cast<std::size_t>(x)];
      const int conj = g->at(g->at(y, px), yi);
      const int lc = local_of[static_cast<std::size_t>(conj)];
      if (lc < 0) throw std::logic_error("is_g_invariant: normal subgroup not conjugation-closed");
      if (c.class_part.block_of(lc) != c.class_part.block_of(x)) return false;
    }
  }
  return true;
}

// Realizations of a normal subgroup and the quotient by it, together with the
// character-level glue: which local characters appear in each restriction, and
// where each quotient character inflates to.  Built once per subgroup and
// cached by the workspace.
struct SubgroupContext {
  Subgroup sub;
  GroupPtr as_group;
  CharacterTable table;
  std::vector<std::vector<int>> constituents;  // per ambient character, local ids
  std::vector<int> local_of;                   // ambient element -> local id or -1
};

struct QuotientContext {
  QuotientData qd;
  CharacterTable table;
  std::vector<int> inflation;      // quotient character -> ambient character
  std::vector<int> deflation;      // ambient character -> quotient character or -1
};

class Workspace {
 public:
  explicit Workspace(CharacterTable t) : table_(std::move(t)) {}

  const GroupPtr& group() const { return table_.group; }
  const CharacterTable& table() const { return table_; }

  SubgroupContext& sub(const std::vector<int>& elements) {
    auto key = sorted(elements);
    auto it = subs_.find(key);
    if (it != subs_.end()) return *it->second;
    auto ctx = std::make_unique<SubgroupContext>();
    ctx->sub.parent = group();
    ctx->sub.elements = key;
    if (!set_is_normal(*group(), key)) throw std::invalid_argument("workspace: subgroup is not normal");
    ctx->sub.is_normal = true;
    ctx->as_group = subgroup_as_group(ctx->sub);
    ctx->table = derived_table(ctx->as_group, "subgroup");
    ctx->local_of.assign(static_cast<std::size_t>(group()->order), -1);
    for (int i = 0; i < static_cast<int>(key.size()); ++i)
      ctx->local_of[static_cast<std::size_t>(key[static_cast<std::size_t>(i)])] = i;
    const int cg = table_.num_chars();
    const int cn = ctx->table.num_chars();
    ctx->constituents.resize(static_cast<std::size_t>(cg));
    for (int i = 0; i < cg; ++i)
      for (int j = 0; j < cn; ++j)
        if (restriction_multiplicity(table_, i, ctx->sub, ctx->table, j) > 0)
          ctx->constituents[static_cast<std::size_t>(i)].push_back(j);
    auto& slot = subs_[key];
    slot = std::move(ctx);
    return *slot;
  }

  QuotientContext& quot(const std::vector<int>& elements) {
    auto key = sorted(elements);
    auto it = quots_.find(key);
    if (it != quots_.end()) return *it->second;
    auto& sc = sub(key);  // validates normality
    auto ctx = std::make_unique<QuotientContext>();
    ctx->qd = quotient(group(), sc.sub);
    ctx->table = derived_table(ctx->qd.group, "quotient");
    ctx->inflation = inflation_char_map(ctx->table, ctx->qd, table_);
    ctx->deflation.assign(static_cast<std::size_t>(table_.num_chars()), -1);
    for (int q = 0; q < static_cast<int>(ctx->inflation.size()); ++q)
      ctx->deflation[static_cast<std::size_t>(ctx->inflation[static_cast<std::size_t>(q)])] = q;
    auto& slot = quots_[key];
    slot = std::move(ctx);
    return *slot;
  }

 private:
  static std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  }
  CharacterTable derived_table(const GroupPtr& g, const char* what) const {
    if (g->abelian || g->order == 1) return abelian_character_table(g);
    throw std::invalid_argument(std::string("workspace: character side unavailable for nonabelian ") + what);
  }

  CharacterTable table_;
  std::map<std::vector<int>, std::unique_ptr<SubgroupContext>> subs_;
  std::map<std::vector<int>, std::unique_ptr<QuotientContext>> quots_;
};

struct StarPair {
  SuperTheory on_sub;   // theory on the subgroup realization
  SuperTheory on_quot;  // theory on the quotient realization
};

namespace detail {

// Every class block of e must lie inside or outside the element set n.
inline bool blocks_respect(const SuperTheory& e, const std::vector<int>& n_sorted, int* witness) {
  const auto blocks = e.class_part.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    bool any_in = false, any_out = false;
    for (int x : blocks[b])
      (std::binary_search(n_sorted.begin(), n_sorted.end(), x) ? any_in : any_out) = true;
    if (any_in && any_out) {
      if (witness) *witness = static_cast<int>(b);
      return false;
    }
  }
  return true;
}

inline std::vector<int> map_through(const std::vector<int>& block, const std::vector<int>& img) {
  std::vector<int> out;
  out.reserve(block.size());
  for (int x : block) out.push_back(img[static_cast<std::size_t>(x)]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// The product theory on G built from c on N and d on G/N.  Class side: the
// superclasses of c together with the preimages of the nontrivial superclasses
// of d.  Character side: the inflations of d's blocks together with, for each
// nonprincipal block X of c, the ambient characters whose restriction meets X.
inline SuperTheory star_product(Workspace& ws, const std::vector<int>& n_elements,
                                const SuperTheory& c, const SuperTheory& d) {
  auto& sc = ws.sub(n_elements);
  auto& qc = ws.quot(n_elements);
  if (c.group.get() != sc.as_group.get())
    throw std::invalid_argument("star_product: first factor is not on this workspace's subgroup realization");
  if (d.group.get() != qc.qd.group.get())
    throw std::invalid_argument("star_product: second factor is not on this workspace's quotient realization");
  if (!is_g_invariant(ws.group(), sc.sub, c))
    throw std::invalid_argument("star_product: first factor is not invariant under ambient conjugation");

  std::vector<std::vector<int>> kblocks;
  for (const auto& blk : c.class_part.blocks())
    kblocks.push_back(detail::map_through(blk, sc.sub.elements));
  const int d_triv = d.class_part.block_of(0);
  {
    std::vector<std::vector<int>> pre(static_cast<std::size_t>(d.class_part.block_count()));
    for (int x = 0; x < ws.group()->order; ++x)
      pre[static_cast<std::size_t>(d.class_part.block_of(qc.qd.projection[static_cast<std::size_t>(x)]))]
          .push_back(x);
    for (int b = 0; b < d.class_part.block_count(); ++b)
      if (b != d_triv) kblocks.push_back(std::move(pre[static_cast<std::size_t>(b)]));
  }

  std::vector<std::vector<int>> xblocks;
  for (const auto& blk : d.char_part.blocks())
    xblocks.push_back(detail::map_through(blk, qc.inflation));
  const int c_principal = c.char_part.block_of(0);
  {
    std::vector<std::vector<int>> lifted(static_cast<std::size_t>(c.char_part.block_count()));
    for (int i = 0; i < ws.table().num_chars(); ++i) {
      if (qc.deflation[static_cast<std::size_t>(i)] >= 0) continue;
      const auto& cons = sc.constituents[static_cast<std::size_t>(i)];
      if (cons.empty()) throw std::logic_error("star_product: restriction with no constituents");
      const int xb = c.char_part.block_of(cons[0]);
      for (int j : cons)
        if (c.char_part.block_of(j) != xb)
          throw std::logic_error("star_product: restriction constituents cross blocks of an invariant theory");
      lifted[static_cast<std::size_t>(xb)].push_back(i);
    }
    if (!lifted[static_cast<std::size_t>(c_principal)].empty())
      throw std::logic_error("star_product: a character outside the quotient lifted the principal block");
    for (int b = 0; b < c.char_part.block_count(); ++b)
      if (b != c_principal) {
        if (lifted[static_cast<std::size_t>(b)].empty())
          throw std::logic_error("star_product: a nonprincipal block lifted to nothing");
        xblocks.push_back(std::move(lifted[static_cast<std::size_t>(b)]));
      }
  }

  const int n = ws.group()->order;
  auto t = detail::must_verify(ws.table(), SetPartition::from_blocks(ws.table().num_chars(), xblocks),
                               SetPartition::from_blocks(n, kblocks), "star_product");
  if (t.size() != c.size() + d.size() - 1)
    throw std::logic_error("star_product: size law violated");
  return t;
}

// Restriction to N and deflation to G/N of the join e v m_N^G, with the
// reassembly identity asserted.
inline StarPair restrict_deflate(Workspace& ws, const SuperTheory& e, const std::vector<int>& n_elements) {
  if (e.group.get() != ws.group().get())
    throw std::invalid_argument("restrict_deflate: theory is not on the workspace group");
  auto& sc = ws.sub(n_elements);
  auto& qc = ws.quot(n_elements);
  int witness = -1;
  if (!detail::blocks_respect(e, sc.sub.elements, &witness))
    throw std::invalid_argument("restrict_deflate: subgroup is not a union of superclasses");
  const auto fine = finest_theory_over(ws.table(), sc.sub);
  const auto b = join_theories(ws.table(), e, fine);

  std::vector<std::vector<int>> sub_k, sub_x{{0}};
  std::vector<std::vector<int>> quot_k{{0}}, quot_x;
  for (const auto& blk : b.class_part.blocks()) {
    if (sc.local_of[static_cast<std::size_t>(blk[0])] >= 0) {
      sub_k.push_back(detail::map_through(blk, sc.local_of));
    } else {
      std::set<int> img;
      for (int x : blk) img.insert(qc.qd.projection[static_cast<std::size_t>(x)]);
      quot_k.emplace_back(img.begin(), img.end());
    }
  }
  for (const auto& blk : b.char_part.blocks()) {
    bool inflated = true;
    for (int i : blk) inflated = inflated && qc.deflation[static_cast<std::size_t>(i)] >= 0;
    if (inflated) {
      quot_x.push_back(detail::map_through(blk, qc.deflation));
    } else {
      std::set<int> f;
      for (int i : blk)
        f.insert(sc.constituents[static_cast<std::size_t>(i)].begin(),
                 sc.constituents[static_cast<std::size_t>(i)].end());
      sub_x.emplace_back(f.begin(), f.end());
    }
  }

  StarPair out{
      detail::must_verify(sc.table, SetPartition::from_blocks(sc.table.num_chars(), sub_x),
                          SetPartition::from_blocks(sc.as_group->order, sub_k), "restrict_deflate"),
      detail::must_verify(qc.table, SetPartition::from_blocks(qc.table.num_chars(), quot_x),
                          SetPartition::from_blocks(qc.qd.group->order, quot_k), "restrict_deflate")};
  const auto back = star_product(ws, n_elements, out.on_sub, out.on_quot);
  if (!same_theory(back, b)) throw std::logic_error("restrict_deflate: reassembly does not match the join");
  return out;
}

struct FactorOutcome {
  std::optional<StarPair> factors;
  std::string failure;
  int witness_block = -1;
  bool ok() const { return factors.has_value(); }
};

// Split e as (restriction over N) star (deflation over N), when possible.
// Fails when N is not a union of superclasses, or when some superclass
// outside N is not a union of N-cosets.
inline FactorOutcome factor_over(Workspace& ws, const SuperTheory& e, const std::vector<int>& n_elements) {
  if (e.group.get() != ws.group().get())
    throw std::invalid_argument("factor_over: theory is not on the workspace group");
  auto& sc = ws.sub(n_elements);
  FactorOutcome out;
  int witness = -1;
  if (!detail::blocks_respect(e, sc.sub.elements, &witness)) {
    out.failure = "subgroup is not a union of superclasses";
    out.witness_block = witness;
    return out;
  }
  const auto blocks = e.class_part.blocks();
  for (std::size_t bidx = 0; bidx < blocks.size(); ++bidx) {
    if (sc.local_of[static_cast<std::size_t>(blocks[bidx][0])] >= 0) continue;
    std::set<int> members(blocks[bidx].begin(), blocks[bidx].end());
    for (int x : blocks[bidx])
      for (int h : sc.sub.elements)
        if (!members.count(ws.group()->at(x, h))) {
          out.failure = "superclass outside the subgroup is not a union of its cosets";
          out.witness_block = static_cast<int>(bidx);
          return out;
        }
  }
  out.factors = restrict_deflate(ws, e, n_elements);
  const auto back = star_product(ws, n_elements, out.factors->on_sub, out.factors->on_quot);
  if (!same_theory(back, e)) throw std::logic_error("factor_over: reassembly does not match the original");
  return out;
}

struct FactorizationChain {
  std::vector<std::vector<int>> chain;    // element sets in the original group, {1} first
  std::vector<SuperTheory> factors;       // factor i lives on chain[i+1]/chain[i]
  std::vector<bool> indecomposable;       // one flag per factor
};

namespace detail {

inline bool factors_properly_somewhere(Workspace& ws, const SuperTheory& e) {
  for (const auto& s : c_normal_subgroups(e)) {
    if (static_cast<int>(s.elements.size()) == 1 || static_cast<int>(s.elements.size()) == ws.group()->order)
      continue;
    if (factor_over(ws, e, s.elements).ok()) return true;
  }
  return false;
}

}  // namespace detail

// Greedy decomposition over the smallest subgroup that admits a factoring at
// each step.  The chain is reported in original-group element ids; the final
// reassembly is checked against e.
inline FactorizationChain unique_factorization(Workspace& ws, const SuperTheory& e) {
  if (e.group.get() != ws.group().get())
    throw std::invalid_argument("unique_factorization: theory is not on the workspace group");
  if (ws.group()->order == 1) throw std::invalid_argument("unique_factorization: trivial group");
  FactorizationChain out;
  out.chain.push_back({0});

  std::vector<std::unique_ptr<Workspace>> spaces;
  std::vector<std::vector<int>> step_subgroup;  // chosen subgroup, in step-local ids
  Workspace* cur = &ws;
  SuperTheory level = e;
  for (;;) {
    bool split = false;
    for (const auto& s : c_normal_subgroups(level)) {
      const auto sz = static_cast<int>(s.elements.size());
      if (sz == 1 || sz == cur->group()->order) continue;
      auto fo = factor_over(*cur, level, s.elements);
      if (!fo.ok()) continue;
      auto& scx = cur->sub(s.elements);
      Workspace wsub(scx.table);
      if (detail::factors_properly_somewhere(wsub, fo.factors->on_sub))
        throw std::logic_error("unique_factorization: greedy factor is decomposable");
      out.factors.push_back(fo.factors->on_sub);
      out.indecomposable.push_back(true);
      step_subgroup.push_back(s.elements);
      auto& qcx = cur->quot(s.elements);
      spaces.push_back(std::make_unique<Workspace>(qcx.table));
      cur = spaces.back().get();
      level = fo.factors->on_quot;
      split = true;
      break;
    }
    if (!split) break;
  }
  out.factors.push_back(level);
  out.indecomposable.push_back(!detail::factors_properly_somewhere(*cur, level));
  step_subgroup.push_back({});  // sentinel for the last level

  // Lift the chain back to original-group element ids.
  const FiniteGroup* base = ws.group().get();
  Workspace* at = &ws;
  for (std::size_t i = 0; i + 1 < out.factors.size(); ++i) {
    const auto tags = element_tags(at->group(), base);
    std::set<int> lifted;
    for (int x : step_subgroup[i])
      lifted.insert(tags[static_cast<std::size_t>(x)].begin(), tags[static_cast<std::size_t>(x)].end());
    out.chain.emplace_back(lifted.begin(), lifted.end());
    at = spaces[i].get();
  }
  {
    std::vector<int> all(static_cast<std::size_t>(ws.group()->order));
    for (int i = 0; i < ws.group()->order; ++i) all[static_cast<std::size_t>(i)] = i;
    out.chain.push_back(std::move(all));
  }

  // Rebuild from the factors and compare.
  SuperTheory rebuilt = out.factors.back();
  for (std::size_t i = out.factors.size() - 1; i-- > 0;) {
    Workspace* host = i == 0 ? &ws : spaces[i - 1].get();
    rebuilt = star_product(*host, step_subgroup[i], out.factors[i], rebuilt);
  }
  if (!same_theory(rebuilt, e)) throw std::logic_error("unique_factorization: reassembly mismatch");
  return out;
}

namespace detail {

// The overlap theory of c between n and m, realized on (M as subgroup)/(N).
inline SuperTheory overlap_from_below(Workspace& ws, const std::vector<int>& n_elements,
                                      const std::vector<int>& m_elements, const SuperTheory& c) {
  auto& scm = ws.sub(m_elements);
  std::vector<int> n_local;
  for (int x : n_elements) {
    const int l = scm.local_of[static_cast<std::size_t>(x)];
    if (l < 0) throw std::invalid_argument("wtp: the smaller subgroup is not inside the larger");
    n_local.push_back(l);
  }
  std::sort(n_local.begin(), n_local.end());
  Workspace wm(scm.table);
  return restrict_deflate(wm, c, n_local).on_quot;
}

// The overlap theory of d between n and m, realized as (M/N as subgroup of G/N).
inline SuperTheory overlap_from_above(Workspace& ws, const std::vector<int>& n_elements,
                                      const std::vector<int>& m_elements, const SuperTheory& d) {
  auto& qcn = ws.quot(n_elements);
  std::set<int> img;
  for (int x : m_elements) img.insert(qcn.qd.projection[static_cast<std::size_t>(x)]);
  Workspace wq(qcn.table);
  return restrict_deflate(wq, d, std::vector<int>(img.begin(), img.end())).on_sub;
}

inline bool same_theory_up_to_iso(const SuperTheory& a, const SuperTheory& b) {
  const auto iso = group_iso_by_tags(a.group, b.group);
  std::vector<std::vector<int>> mapped;
  for (const auto& blk : a.class_part.blocks()) mapped.push_back(map_through(blk, iso));
  // the class partition determines the character partition, so comparing the
  // class sides decides theory equality
  return SetPartition::from_blocks(b.group->order, mapped) == b.class_part;
}

}  // namespace detail

// Wedge product over N <= M: c on M and d on G/N glued along their common
// overlap on M/N.  Class side: c's superclasses plus preimages of d's blocks
// outside M/N.  Character side: inflations of d's blocks plus the ambient
// lifts of c's blocks outside the characters killing N.
inline SuperTheory wtp_product(Workspace& ws, const std::vector<int>& n_elements,
                               const std::vector<int>& m_elements, const SuperTheory& c,
                               const SuperTheory& d) {
  auto& scm = ws.sub(m_elements);
  auto& qcn = ws.quot(n_elements);
  if (c.group.get() != scm.as_group.get())
    throw std::invalid_argument("wtp_product: first factor is not on the larger subgroup realization");
  if (d.group.get() != qcn.qd.group.get())
    throw std::invalid_argument("wtp_product: second factor is not on the quotient realization");
  if (!is_g_invariant(ws.group(), scm.sub, c))
    throw std::invalid_argument("wtp_product: first factor is not invariant under ambient conjugation");

  std::vector<int> n_local;
  for (int x : n_elements) {
    const int l = scm.local_of[static_cast<std::size_t>(x)];
    if (l < 0) throw std::invalid_argument("wtp_product: the smaller subgroup is not inside the larger");
    n_local.push_back(l);
  }
  std::sort(n_local.begin(), n_local.end());
  int witness = -1;
  if (!detail::blocks_respect(c, n_local, &witness))
    throw std::invalid_argument("wtp_product: the smaller subgroup is not a union of first-factor superclasses");
  std::set<int> m_image;
  for (int x : m_elements) m_image.insert(qcn.qd.projection[static_cast<std::size_t>(x)]);
  const std::vector<int> m_img(m_image.begin(), m_image.end());
  if (!detail::blocks_respect(d, m_img, &witness))
    throw std::invalid_argument("wtp_product: the overlap group is not a union of second-factor superclasses");

  const auto from_below = detail::overlap_from_below(ws, n_elements, m_elements, c);
  const auto from_above = detail::overlap_from_above(ws, n_elements, m_elements, d);
  if (!detail::same_theory_up_to_iso(from_below, from_above))
    throw std::invalid_argument("wtp_product: the factors disagree on the overlap");

  std::vector<std::vector<int>> kblocks;
  for (const auto& blk : c.class_part.blocks())
    kblocks.push_back(detail::map_through(blk, scm.sub.elements));
  {
    const int nb = d.class_part.block_count();
    std::vector<std::vector<int>> pre(static_cast<std::size_t>(nb));
    std::vector<char> inside(static_cast<std::size_t>(nb), 1);
    for (const auto& blk : d.class_part.blocks())
      for (int q : blk)
        if (!std::binary_search(m_img.begin(), m_img.end(), q))
          inside[static_cast<std::size_t>(d.class_part.block_of(q))] = 0;
    for (int x = 0; x < ws.group()->order; ++x)
      pre[static_cast<std::size_t>(d.class_part.block_of(qcn.qd.projection[static_cast<std::size_t>(x)]))]
          .push_back(x);
    for (int b = 0; b < nb; ++b)
      if (!inside[static_cast<std::size_t>(b)]) kblocks.push_back(std::move(pre[static_cast<std::size_t>(b)]));
  }

  // Characters of the larger subgroup that kill the smaller subgroup.
  std::vector<char> kills_n(static_cast<std::size_t>(scm.table.num_chars()), 1);
  for (int j = 0; j < scm.table.num_chars(); ++j)
    for (int l : n_local)
      if (!(scm.table.value_at_element(j, l) == Cyclotomic::from_rational(scm.table.conductor, Rat(scm.table.degree(j)))))
        kills_n[static_cast<std::size_t>(j)] = 0;

  std::vector<std::vector<int>> xblocks;
  for (const auto& blk : d.char_part.blocks())
    xblocks.push_back(detail::map_through(blk, qcn.inflation));
  {
    const int xb_count = c.char_part.block_count();
    std::vector<char> in_overlap(static_cast<std::size_t>(xb_count), 1);
    for (int j = 0; j < scm.table.num_chars(); ++j)
      if (!kills_n[static_cast<std::size_t>(j)])
        in_overlap[static_cast<std::size_t>(c.char_part.block_of(j))] = 0;
    std::vector<std::vector<int>> lifted(static_cast<std::size_t>(xb_count));
    for (int i = 0; i < ws.table().num_chars(); ++i) {
      if (qcn.deflation[static_cast<std::size_t>(i)] >= 0) continue;
      const auto& cons = scm.constituents[static_cast<std::size_t>(i)];
      if (cons.empty()) throw std::logic_error("wtp_product: restriction with no constituents");
      const int xb = c.char_part.block_of(cons[0]);
      for (int j : cons)
        if (c.char_part.block_of(j) != xb)
          throw std::logic_error("wtp_product: restriction constituents cross blocks of an invariant theory");
      lifted[static_cast<std::size_t>(xb)].push_back(i);
    }
    for (int b = 0; b < xb_count; ++b)
      if (!in_overlap[static_cast<std::size_t>(b)]) {
        if (lifted[static_cast<std::size_t>(b)].empty())
          throw std::logic_error("wtp_product: an outside block lifted to nothing");
        xblocks.push_back(std::move(lifted[static_cast<std::size_t>(b)]));
      }
  }

  auto t = detail::must_verify(ws.table(), SetPartition::from_blocks(ws.table().num_chars(), xblocks),
                               SetPartition::from_blocks(ws.group()->order, kblocks), "wtp_product");
  if (t.size() != c.size() + d.size() - from_above.size())
    throw std::logic_error("wtp_product: size law violated");
  return t;
}

// Does e arise as a wedge product over N <= M?  True when both subgroups are
// unions of superclasses and every superclass outside M is a union of
// N-cosets; the reconstruction is then asserted.
inline bool wtp_recognize(Workspace& ws, const SuperTheory& e, const std::vector<int>& n_elements,
                          const std::vector<int>& m_elements) {
  if (e.group.get() != ws.group().get())
    throw std::invalid_argument("wtp_recognize: theory is not on the workspace group");
  auto& scm = ws.sub(m_elements);
  auto& scn = ws.sub(n_elements);
  for (int x : n_elements)
    if (scm.local_of[static_cast<std::size_t>(x)] < 0)
      throw std::invalid_argument("wtp_recognize: the smaller subgroup is not inside the larger");
  int witness = -1;
  if (!detail::blocks_respect(e, scn.sub.elements, &witness)) return false;
  if (!detail::blocks_respect(e, scm.sub.elements, &witness)) return false;
  for (const auto& blk : e.class_part.blocks()) {
    if (scm.local_of[static_cast<std::size_t>(blk[0])] >= 0) continue;
    std::set<int> members(blk.begin(), blk.end());
    for (int x : blk)
      for (int h : scn.sub.elements)
        if (!members.count(ws.group()->at(x, h))) return false;
  }
  const auto em = restrict_deflate(ws, e, scm.sub.elements).on_sub;
  const auto eq = restrict_deflate(ws, e, scn.sub.elements).on_quot;
  const auto back = wtp_product(ws, scn.sub.elements, scm.sub.elements, em, eq);
  if (!same_theory(back, e)) throw std::logic_error("wtp_recognize: reconstruction mismatch");
  return true;
}

}  // namespace sct
