#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sct/character_table.hpp"
#include "sct/cyclotomic.hpp"
#include "sct/group.hpp"
#include "sct/partition.hpp"

// Supercharacter theories: a pair of partitions, one of the irreducible
// characters and one of the group, of equal size, where class blocks are
// unions of conjugacy classes and each block character sigma_X (the
// degree-weighted sum over a character block) is constant on each class
// block.  Verification is exact; mathematical rejection is data, not an
// exception, and carries the first violated condition with a witness.

namespace sct {

enum class RejectKind { size_mismatch, class_split, not_constant };

struct Rejection {
  RejectKind kind;
  std::string message;
  int x_block = -1;
  int k_block = -1;
  int g = -1;
  int h = -1;
};

template <class T>
struct Result {
  std::optional<T> value;
  std::optional<Rejection> rejection;

  bool ok() const { return value.has_value(); }
  static Result accepted(T v) {
    Result r;
    r.value = std::move(v);
    return r;
  }
  static Result rejected(Rejection rej) {
    Result r;
    r.rejection = std::move(rej);
    return r;
  }
};

struct SuperTheory {
  GroupPtr group;
  SetPartition char_part;   // blocks of character ids
  SetPartition class_part;  // blocks of element ids
  CycMatrix values;         // values[x][k]: sigma of char block x on class block k

  int size() const { return char_part.block_count(); }
};

inline bool same_theory(const SuperTheory& a, const SuperTheory& b) {
  return a.group.get() == b.group.get() && a.char_part == b.char_part &&
         a.class_part == b.class_part;
}

inline Result<SuperTheory> verify_definition(const CharacterTable& t, const SetPartition& X,
                                             const SetPartition& K) {
  const FiniteGroup& g = *t.group;
  const int c = t.num_chars();
  if (X.size() != c) throw std::invalid_argument("character partition has the wrong ground set");
  if (K.size() != g.order) throw std::invalid_argument("class partition has the wrong ground set");

  if (X.block_count() != K.block_count()) {
    Rejection rej{RejectKind::size_mismatch,
                  "partitions have different block counts (" + std::to_string(X.block_count()) +
                      " character blocks vs " + std::to_string(K.block_count()) + " class blocks)"};
    return Result<SuperTheory>::rejected(std::move(rej));
  }

  for (const auto& cls : g.classes.blocks()) {
    int home = K.block_of(cls[0]);
    for (int e : cls) {
      if (K.block_of(e) != home) {
        Rejection rej{RejectKind::class_split,
                      "elements " + std::to_string(cls[0]) + " and " + std::to_string(e) +
                          " are conjugate but lie in different blocks"};
        rej.k_block = home;
        rej.g = cls[0];
        rej.h = e;
        return Result<SuperTheory>::rejected(std::move(rej));
      }
    }
  }

  const int b = X.block_count();
  CycMatrix values(t.conductor, static_cast<std::size_t>(b), static_cast<std::size_t>(b));
  std::vector<Cyclotomic> sigma(static_cast<std::size_t>(g.num_classes()), Cyclotomic::zero(t.conductor));
  for (int xi = 0; xi < b; ++xi) {
    for (int k = 0; k < g.num_classes(); ++k) sigma[static_cast<std::size_t>(k)] = Cyclotomic::zero(t.conductor);
    for (int psi : X.block(xi)) {
      Rat deg(t.degree(psi));
      for (int k = 0; k < g.num_classes(); ++k)
        sigma[static_cast<std::size_t>(k)] += t.at(psi, k).scaled(deg);
    }
    for (int ki = 0; ki < b; ++ki) {
      const auto& block = K.block(ki);
      const Cyclotomic& v = sigma[static_cast<std::size_t>(g.class_of[static_cast<std::size_t>(block[0])])];
      for (int e : block) {
        if (sigma[static_cast<std::size_t>(g.class_of[static_cast<std::size_t>(e)])] != v) {
          Rejection rej{RejectKind::not_constant,
                        "block character " + std::to_string(xi) + " is not constant on class block " +
                            std::to_string(ki) + " (elements " + std::to_string(block[0]) + " and " +
                            std::to_string(e) + ")"};
          rej.x_block = xi;
          rej.k_block = ki;
          rej.g = block[0];
          rej.h = e;
          return Result<SuperTheory>::rejected(std::move(rej));
        }
      }
      values.at(static_cast<std::size_t>(xi), static_cast<std::size_t>(ki)) = v;
    }
  }
  return Result<SuperTheory>::accepted(SuperTheory{t.group, X, K, std::move(values)});
}

// Integer-only closure test on a partition of the conjugacy classes: for each
// pair of blocks, the product of their class-sum aggregates must have
// coefficients constant on every block.  block_of_class pins down membership,
// class_blocks lists the blocks as class-id lists.  Aborts on the first
// non-constant coefficient.
inline bool class_partition_admissible(const StructureConstants& sc,
                                       const std::vector<std::vector<int>>& class_blocks,
                                       const std::vector<int>& block_of_class,
                                       std::vector<long>* scratch = nullptr) {
  const int c = sc.c;
  std::vector<long> local;
  std::vector<long>& coef = scratch ? *scratch : local;
  coef.assign(static_cast<std::size_t>(c), 0);
  const std::size_t nb = class_blocks.size();
  for (std::size_t a = 0; a < nb; ++a) {
    for (std::size_t b = a; b < nb; ++b) {
      std::fill(coef.begin(), coef.end(), 0);
      for (int i : class_blocks[a])
        for (int j : class_blocks[b])
          for (int k = 0; k < c; ++k) coef[static_cast<std::size_t>(k)] += sc.at(i, j, k);
      for (int k = 0; k < c; ++k) {
        int head = class_blocks[static_cast<std::size_t>(block_of_class[static_cast<std::size_t>(k)])][0];
        if (coef[static_cast<std::size_t>(k)] != coef[static_cast<std::size_t>(head)]) return false;
      }
    }
  }
  return true;
}

// Decides whether a partition of the group is the class side of some theory,
// using no character data.  The partition must already be a class-union
// partition with {identity} as a block; those are preconditions, not part of
// the decision.
inline bool superclass_admissible(const FiniteGroup& g, const SetPartition& K) {
  if (K.size() != g.order) throw std::invalid_argument("partition has the wrong ground set");
  if (K.block(K.block_of(0)).size() != 1)
    throw std::invalid_argument("the identity must form a singleton block");
  for (const auto& cls : g.classes.blocks()) {
    int home = K.block_of(cls[0]);
    for (int e : cls)
      if (K.block_of(e) != home)
        throw std::invalid_argument("blocks must be unions of conjugacy classes");
  }
  const int c = g.num_classes();
  std::vector<int> block_of_class(static_cast<std::size_t>(c));
  std::vector<std::vector<int>> class_blocks(static_cast<std::size_t>(K.block_count()));
  for (int k = 0; k < c; ++k) {
    int b = K.block_of(g.class_reps[static_cast<std::size_t>(k)]);
    block_of_class[static_cast<std::size_t>(k)] = b;
    class_blocks[static_cast<std::size_t>(b)].push_back(k);
  }
  auto sc = structure_constant_table(g);
  return class_partition_admissible(sc, class_blocks, block_of_class);
}

// Unique character partition fitting a given class partition: characters are
// grouped by the vector of normalized block sums (the central character of
// each block aggregate), then the pair is re-verified.  A rejection means the
// class partition was not admissible in the first place (or the table is
// inconsistent); it is passed through as data.
inline Result<SuperTheory> x_from_k(const CharacterTable& t, const SetPartition& K) {
  const int c = t.num_chars();
  if (K.size() != t.group->order) throw std::invalid_argument("partition has the wrong ground set");
  std::vector<std::vector<Cyclotomic>> fingerprints;
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < c; ++i) {
    std::vector<Cyclotomic> fp;
    fp.reserve(static_cast<std::size_t>(K.block_count()));
    Rat deg(t.degree(i));
    for (const auto& block : K.blocks()) {
      Cyclotomic acc = Cyclotomic::zero(t.conductor);
      for (int e : block) acc += t.value_at_element(i, e);
      fp.push_back(acc.divided_by(deg));
    }
    bool placed = false;
    for (std::size_t s = 0; s < fingerprints.size() && !placed; ++s) {
      if (fingerprints[s] == fp) {
        groups[s].push_back(i);
        placed = true;
      }
    }
    if (!placed) {
      fingerprints.push_back(std::move(fp));
      groups.push_back({i});
    }
  }
  return verify_definition(t, SetPartition::from_blocks(c, groups), K);
}

// Unique class partition fitting a given character partition: classes are
// grouped by the vector of block character values, then re-verified.
inline Result<SuperTheory> k_from_x(const CharacterTable& t, const SetPartition& X) {
  const FiniteGroup& g = *t.group;
  if (X.size() != t.num_chars()) throw std::invalid_argument("partition has the wrong ground set");
  const int c = g.num_classes();
  std::vector<std::vector<Cyclotomic>> sigmas(
      static_cast<std::size_t>(X.block_count()),
      std::vector<Cyclotomic>(static_cast<std::size_t>(c), Cyclotomic::zero(t.conductor)));
  for (int xi = 0; xi < X.block_count(); ++xi)
    for (int psi : X.block(xi)) {
      Rat deg(t.degree(psi));
      for (int k = 0; k < c; ++k)
        sigmas[static_cast<std::size_t>(xi)][static_cast<std::size_t>(k)] += t.at(psi, k).scaled(deg);
    }
  std::vector<std::vector<Cyclotomic>> keys;
  std::vector<std::vector<int>> groups;
  for (int k = 0; k < c; ++k) {
    std::vector<Cyclotomic> key;
    key.reserve(sigmas.size());
    for (const auto& row : sigmas) key.push_back(row[static_cast<std::size_t>(k)]);
    bool placed = false;
    for (std::size_t s = 0; s < keys.size() && !placed; ++s) {
      if (keys[s] == key) {
        groups[s].push_back(k);
        placed = true;
      }
    }
    if (!placed) {
      keys.push_back(std::move(key));
      groups.push_back({k});
    }
  }
  std::vector<std::vector<int>> element_blocks(groups.size());
  for (std::size_t s = 0; s < groups.size(); ++s)
    for (int k : groups[s])
      for (int e : g.classes.block(k)) element_blocks[s].push_back(e);
  return verify_definition(t, X, SetPartition::from_blocks(g.order, element_blocks));
}

// Rowspace criterion for abelian groups: the class-side indicator matrix and
// the character-side indicators pushed through the conjugated table must span
// the same rowspace.  Both matrices always have full row rank (indicators are
// disjoint, the table is invertible), so after the block-count check this
// reduces to one rank computation on the stacked matrix with early abort.
inline bool matrix_condition(const CharacterTable& t, const SetPartition& X,
                             const SetPartition& K) {
  const FiniteGroup& g = *t.group;
  if (!g.abelian) throw std::invalid_argument("matrix_condition needs an abelian group");
  if (X.size() != t.num_chars() || K.size() != g.order)
    throw std::invalid_argument("partition has the wrong ground set");
  if (X.block_count() != K.block_count()) return false;
  const int r = K.block_count();
  const int n = g.order;
  CycMatrix stacked(t.conductor, static_cast<std::size_t>(2 * r), static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e)
    stacked.at(static_cast<std::size_t>(K.block_of(e)), static_cast<std::size_t>(e)) =
        Cyclotomic::one(t.conductor);
  for (int i = 0; i < t.num_chars(); ++i) {
    int row = r + X.block_of(i);
    for (int e = 0; e < n; ++e)
      stacked.at(static_cast<std::size_t>(row), static_cast<std::size_t>(e)) +=
          t.value_at_element(i, e).conjugate();
  }
  detail::ZCycRing ring(t.conductor);
  return detail::zcyc_rank(ring, detail::clear_denominators(stacked), stacked.cols,
                           static_cast<long>(r)) == static_cast<std::size_t>(r);
}

namespace detail {

inline SuperTheory must_verify(const CharacterTable& t, const SetPartition& X,
                               const SetPartition& K, const char* what) {
  auto res = verify_definition(t, X, K);
  if (!res.ok())
    throw std::logic_error(std::string(what) + ": construction failed verification: " +
                           res.rejection->message);
  return std::move(*res.value);
}

}  // namespace detail

// The finest theory: singleton characters, conjugacy classes.
inline SuperTheory minimal_theory(const CharacterTable& t) {
  return detail::must_verify(t, SetPartition::singletons(t.num_chars()), t.group->classes,
                             "minimal_theory");
}

// The coarsest theory: principal character alone, identity alone.
inline SuperTheory maximal_theory(const CharacterTable& t) {
  const int c = t.num_chars();
  const int n = t.group->order;
  std::vector<std::vector<int>> xb{{0}};
  std::vector<std::vector<int>> kb{{0}};
  if (c > 1) {
    xb.push_back({});
    for (int i = 1; i < c; ++i) xb[1].push_back(i);
  }
  if (n > 1) {
    kb.push_back({});
    for (int e = 1; e < n; ++e) kb[1].push_back(e);
  }
  return detail::must_verify(t, SetPartition::from_blocks(c, xb), SetPartition::from_blocks(n, kb),
                             "maximal_theory");
}

// The finest theory that factors over the normal subgroup n: conjugacy
// classes inside n stay separate, everything else is grouped by the conjugacy
// class of its image in the quotient.  The character side is recovered from
// the class side.  Degenerate n (trivial or all of G) collapses to the
// minimal theory.
inline SuperTheory finest_theory_over(const CharacterTable& t, const Subgroup& n) {
  const GroupPtr& g = t.group;
  if (n.parent.get() != g.get()) throw std::invalid_argument("subgroup belongs to another group");
  if (!set_is_normal(*g, n.elements)) throw std::invalid_argument("subgroup is not normal");
  auto qd = quotient(g, n);
  std::vector<std::vector<int>> blocks;
  for (const auto& cls : g->classes.blocks())
    if (n.contains(cls[0])) blocks.push_back(cls);
  const auto& qclasses = qd.group->classes;
  const std::size_t base = blocks.size();
  blocks.resize(base + static_cast<std::size_t>(qclasses.block_count() - 1));
  for (int x = 0; x < g->order; ++x) {
    int qc = qclasses.block_of(qd.projection[static_cast<std::size_t>(x)]);
    if (qc > 0) blocks[base + static_cast<std::size_t>(qc - 1)].push_back(x);
  }
  auto res = x_from_k(t, SetPartition::from_blocks(g->order, blocks));
  if (!res.ok())
    throw std::logic_error("finest_theory_over: construction failed verification: " +
                           res.rejection->message);
  return std::move(*res.value);
}

// The coarsest theory that factors over the normal subgroup n: class blocks
// {identity}, n minus identity, complement of n; character blocks {principal},
// other characters with n in their kernel, the rest.  Empty blocks drop out,
// so degenerate n collapses to the maximal theory.
inline SuperTheory coarsest_theory_over(const CharacterTable& t, const Subgroup& n) {
  const GroupPtr& g = t.group;
  if (n.parent.get() != g.get()) throw std::invalid_argument("subgroup belongs to another group");
  if (!set_is_normal(*g, n.elements)) throw std::invalid_argument("subgroup is not normal");
  std::vector<std::vector<int>> kb{{0}, {}, {}};
  for (int e = 1; e < g->order; ++e) kb[n.contains(e) ? 1 : 2].push_back(e);
  std::vector<std::vector<int>> xb{{0}, {}, {}};
  for (int i = 1; i < t.num_chars(); ++i) {
    bool kills_n = true;
    const Cyclotomic& deg = t.at(i, 0);
    for (int e : n.elements)
      if (t.value_at_element(i, e) != deg) {
        kills_n = false;
        break;
      }
    xb[kills_n ? 1 : 2].push_back(i);
  }
  auto drop_empty = [](std::vector<std::vector<int>>& bs) {
    bs.erase(std::remove_if(bs.begin(), bs.end(), [](const auto& b) { return b.empty(); }),
             bs.end());
  };
  drop_empty(kb);
  drop_empty(xb);
  return detail::must_verify(t, SetPartition::from_blocks(t.num_chars(), xb),
                             SetPartition::from_blocks(g->order, kb), "coarsest_theory_over");
}

namespace detail {

struct UnionGroups {
  std::vector<int> parent;
  explicit UnionGroups(int n) : parent(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  SetPartition to_partition() {
    std::vector<std::vector<int>> blocks;
    std::map<int, std::size_t> index;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) {
      int r = find(i);
      auto it = index.find(r);
      if (it == index.end()) {
        index.emplace(r, blocks.size());
        blocks.push_back({i});
      } else {
        blocks[it->second].push_back(i);
      }
    }
    return SetPartition::from_blocks(static_cast<int>(parent.size()), blocks);
  }
};

// Row index of the character whose values on class representatives are given.
inline int match_character_row(const CharacterTable& t, const std::vector<Cyclotomic>& values) {
  const int c = t.num_chars();
  for (int j = 0; j < c; ++j) {
    bool all = true;
    for (int k = 0; k < c && all; ++k) all = t.at(j, k) == values[static_cast<std::size_t>(k)];
    if (all) return j;
  }
  throw std::logic_error("transformed character is not a row of the table");
}

}  // namespace detail

// Orbit theory of a set of automorphisms: elements are grouped by the orbits
// of the generated group, characters by the induced action on rows.  Each
// permutation is checked to be an automorphism.
inline SuperTheory orbit_theory(const CharacterTable& t,
                                const std::vector<std::vector<int>>& automorphisms) {
  const FiniteGroup& g = *t.group;
  const int n = g.order;
  const int c = t.num_chars();
  detail::UnionGroups elems(n);
  detail::UnionGroups chars(c);
  for (const auto& a : automorphisms) {
    if (static_cast<int>(a.size()) != n) throw std::invalid_argument("automorphism has wrong length");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : a) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("automorphism is not a permutation");
      seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (a[static_cast<std::size_t>(g.at(x, y))] !=
            g.at(a[static_cast<std::size_t>(x)], a[static_cast<std::size_t>(y)]))
          throw std::invalid_argument("permutation is not an automorphism");
    std::vector<int> a_inv(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) a_inv[static_cast<std::size_t>(a[static_cast<std::size_t>(x)])] = x;
    for (int x = 0; x < n; ++x) elems.unite(x, a[static_cast<std::size_t>(x)]);
    for (int i = 0; i < c; ++i) {
      std::vector<Cyclotomic> moved;
      moved.reserve(static_cast<std::size_t>(c));
      for (int k = 0; k < c; ++k)
        moved.push_back(t.value_at_element(
            i, a_inv[static_cast<std::size_t>(g.class_reps[static_cast<std::size_t>(k)])]));
      chars.unite(i, detail::match_character_row(t, moved));
    }
  }
  return detail::must_verify(t, chars.to_partition(), elems.to_partition(), "orbit_theory");
}

// Orbit theory of a set of power maps on the character values: rows are
// grouped under the ring maps zeta -> zeta^p, and the class side is recovered
// from the character side.  The powers must form a subgroup of the units
// modulo the table conductor.
inline SuperTheory galois_orbit_theory(const CharacterTable& t, const std::vector<long>& powers) {
  const long m = t.conductor;
  if (powers.empty()) throw std::invalid_argument("empty power set");
  std::vector<long> norm;
  for (long p : powers) {
    long v = ((p % m) + m) % m;
    if (std::gcd(v == 0 ? m : v, m) != 1) throw std::invalid_argument("power not a unit modulo the conductor");
    norm.push_back(m == 1 ? 0 : v);
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
  for (long a : norm)
    for (long b : norm) {
      long ab = m == 1 ? 0 : (a * b) % m;
      if (!std::binary_search(norm.begin(), norm.end(), ab))
        throw std::invalid_argument("powers are not closed under multiplication");
    }
  const int c = t.num_chars();
  detail::UnionGroups chars(c);
  for (long p : norm) {
    for (int i = 0; i < c; ++i) {
      std::vector<Cyclotomic> moved;
      moved.reserve(static_cast<std::size_t>(c));
      for (int k = 0; k < c; ++k) moved.push_back(m == 1 ? t.at(i, k) : t.at(i, k).galois(p));
      chars.unite(i, detail::match_character_row(t, moved));
    }
  }
  auto res = k_from_x(t, chars.to_partition());
  if (!res.ok())
    throw std::logic_error("galois_orbit_theory: construction failed verification: " +
                           res.rejection->message);
  return std::move(*res.value);
}

// The blockwise-coarsest common refinement result: joining both sides of two
// theories on the same group always yields a theory again.
inline SuperTheory join_theories(const CharacterTable& t, const SuperTheory& a,
                                 const SuperTheory& b) {
  if (a.group.get() != t.group.get() || b.group.get() != t.group.get())
    throw std::invalid_argument("join_theories: group mismatch");
  return detail::must_verify(t, join(a.char_part, b.char_part), join(a.class_part, b.class_part),
                             "join_theories");
}

// Partial order: a is finer than (or equal to) b.  Decided on the character
// side; the class-side equivalence is a tested invariant.
inline bool theory_leq(const SuperTheory& a, const SuperTheory& b) {
  if (a.group.get() != b.group.get()) throw std::invalid_argument("theory_leq: group mismatch");
  return refines(a.char_part, b.char_part);
}

// Product theory on the direct product of two groups built from cyclic factor
// lists; the product group is built with the factor orders concatenated, so
// element and character ids combine as (a, b) -> a * |H| + b.
struct DirectProductResult {
  GroupPtr group;
  CharacterTable table;
  SuperTheory theory;
};

inline DirectProductResult direct_product_theory(const CharacterTable& ta, const SuperTheory& a,
                                                 const CharacterTable& tb, const SuperTheory& b) {
  if (a.group.get() != ta.group.get() || b.group.get() != tb.group.get())
    throw std::invalid_argument("direct_product_theory: table/theory mismatch");
  const GroupPtr& ga = a.group;
  const GroupPtr& gb = b.group;
  if ((ga->cyclic_orders.empty() && ga->order > 1) || (gb->cyclic_orders.empty() && gb->order > 1))
    throw std::invalid_argument("direct_product_theory needs groups built from cyclic factor lists");
  std::vector<long> orders = ga->cyclic_orders;
  orders.insert(orders.end(), gb->cyclic_orders.begin(), gb->cyclic_orders.end());
  auto pg = build_abelian(orders);
  auto pt = abelian_character_table(pg);
  const int nb = gb->order;
  auto combine = [nb](const SetPartition& pa, const SetPartition& pb, int total) {
    std::vector<std::vector<int>> blocks;
    for (const auto& ba : pa.blocks())
      for (const auto& bb : pb.blocks()) {
        std::vector<int> blk;
        blk.reserve(ba.size() * bb.size());
        for (int i : ba)
          for (int j : bb) blk.push_back(i * nb + j);
        blocks.push_back(std::move(blk));
      }
    return SetPartition::from_blocks(total, blocks);
  };
  SuperTheory th = detail::must_verify(
      pt, combine(a.char_part, b.char_part, pg->order),
      combine(a.class_part, b.class_part, pg->order), "direct_product_theory");
  return DirectProductResult{pg, std::move(pt), std::move(th)};
}

// Row and column sums of the character-table submatrix picked out by a set of
// characters and a set of elements.  On the blocks of a valid abelian theory
// the row sums are constant and the column sums are constant; the two common
// values coincide only when the block sizes agree.  No constancy is assumed
// here; this is the raw computation.
struct SubmatrixSums {
  std::vector<Cyclotomic> row_sums;  // one per character, summed over the elements
  std::vector<Cyclotomic> col_sums;  // one per element, summed over the characters
};

inline SubmatrixSums submatrix_sums(const CharacterTable& t, const std::vector<int>& chars,
                                    const std::vector<int>& elements) {
  SubmatrixSums s;
  for (int i : chars) {
    Cyclotomic acc = Cyclotomic::zero(t.conductor);
    for (int e : elements) acc += t.value_at_element(i, e);
    s.row_sums.push_back(std::move(acc));
  }
  for (int e : elements) {
    Cyclotomic acc = Cyclotomic::zero(t.conductor);
    for (int i : chars) acc += t.value_at_element(i, e);
    s.col_sums.push_back(std::move(acc));
  }
  return s;
}

}  // namespace sct
