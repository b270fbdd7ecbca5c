#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "sct/partition.hpp"

// Finite groups as validated Cayley tables.  Element ids run 0..n-1 with 0 the
// identity; conjugacy class 0 is {0}.  Derived groups (subgroup-as-group,
// quotient) remember how they were built, which lets canonically isomorphic
// realizations reached along different derivation paths be matched exactly.

namespace sct {

struct FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct FiniteGroup {
  int order = 1;
  std::vector<std::int32_t> mul;  // row-major order x order
  std::vector<std::int32_t> inv;
  long exponent = 1;
  bool abelian = true;
  SetPartition classes;
  std::vector<int> class_of;
  std::vector<int> class_reps;
  std::vector<long> class_sizes;
  std::vector<long> element_orders;
  std::vector<long> cyclic_orders;  // nonempty only for groups built from a cyclic-factor list

  enum class Derivation { root, subgroup, quotient };
  Derivation derivation = Derivation::root;
  GroupPtr parent;                // null for roots
  std::vector<int> to_parent;     // subgroup: local id -> parent id
  std::vector<int> projection;    // quotient: parent id -> coset id
  std::vector<int> section;       // quotient: coset id -> smallest parent member

  int at(int a, int b) const {
    return mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) + static_cast<std::size_t>(b)];
  }
  int inverse(int a) const { return inv[static_cast<std::size_t>(a)]; }
  int num_classes() const { return classes.block_count(); }
};

namespace detail {

inline void finalize_group(FiniteGroup& g) {
  const int n = g.order;
  // inverses and orders
  g.inv.assign(static_cast<std::size_t>(n), -1);
  g.element_orders.assign(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.at(a, b) == 0) {
        g.inv[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (g.inv[static_cast<std::size_t>(a)] < 0) throw std::invalid_argument("element has no inverse");
    long ord = 1;
    int x = a;
    while (x != 0) {
      x = g.at(x, a);
      ++ord;
    }
    g.element_orders[static_cast<std::size_t>(a)] = ord;
  }
  g.exponent = 1;
  for (long ord : g.element_orders) g.exponent = std::lcm(g.exponent, ord);
  g.abelian = true;
  for (int a = 0; a < n && g.abelian; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g.at(a, b) != g.at(b, a)) {
        g.abelian = false;
        break;
      }
  // conjugacy classes
  std::vector<int> class_of(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int e = 0; e < n; ++e) {
    if (class_of[static_cast<std::size_t>(e)] != -1) continue;
    std::vector<int> stack{e};
    class_of[static_cast<std::size_t>(e)] = next;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y) {
        int z = g.at(g.at(y, x), g.inverse(y));
        if (class_of[static_cast<std::size_t>(z)] == -1) {
          class_of[static_cast<std::size_t>(z)] = next;
          stack.push_back(z);
        }
      }
    }
    ++next;
  }
  g.class_of = class_of;
  g.classes = SetPartition::from_rgs(std::move(class_of));
  g.class_reps.clear();
  g.class_sizes.clear();
  for (const auto& block : g.classes.blocks()) {
    g.class_reps.push_back(block[0]);
    g.class_sizes.push_back(static_cast<long>(block.size()));
  }
}

inline void validate_cayley(const FiniteGroup& g, bool exhaustive_assoc) {
  const int n = g.order;
  if (g.mul.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw std::invalid_argument("cayley table has wrong shape");
  for (int a = 0; a < n; ++a) {
    if (g.at(0, a) != a || g.at(a, 0) != a) throw std::invalid_argument("id 0 is not an identity");
  }
  std::vector<char> seen;
  for (int a = 0; a < n; ++a) {
    seen.assign(static_cast<std::size_t>(n), 0);
    for (int b = 0; b < n; ++b) {
      int v = g.at(a, b);
      if (v < 0 || v >= n) throw std::invalid_argument("cayley entry out of range");
      if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("cayley row is not a permutation");
      seen[static_cast<std::size_t>(v)] = 1;
    }
    seen.assign(static_cast<std::size_t>(n), 0);
    for (int b = 0; b < n; ++b) {
      int v = g.at(b, a);
      if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("cayley column is not a permutation");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  if (exhaustive_assoc && n <= 200) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.at(g.at(a, b), c) != g.at(a, g.at(b, c)))
            throw std::invalid_argument("cayley table is not associative");
  } else {
    std::mt19937 rng(0xC0FFEE);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 2000000; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (g.at(g.at(a, b), c) != g.at(a, g.at(b, c)))
        throw std::invalid_argument("cayley table is not associative");
    }
  }
}

}  // namespace detail

// Direct product of cyclic groups Z_{d1} x ... x Z_{dr}; the empty list is the
// trivial group.  Ids are mixed-radix tuples, last factor least significant.
inline GroupPtr build_abelian(const std::vector<long>& orders) {
  long n = 1;
  for (long d : orders) {
    if (d < 1) throw std::invalid_argument("cyclic factor orders must be >= 1");
    n *= d;
    if (n > 1000000) throw std::invalid_argument("abelian group too large");
  }
  auto g = std::make_shared<FiniteGroup>();
  g->order = static_cast<int>(n);
  g->cyclic_orders = orders;
  const std::size_t r = orders.size();
  std::vector<long> stride(r, 1);
  for (std::size_t t = r; t-- > 1;) stride[t - 1] = stride[t] * orders[t];
  g->mul.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (long a = 0; a < n; ++a) {
    for (long b = 0; b < n; ++b) {
      long idx = 0;
      for (std::size_t t = 0; t < r; ++t) {
        long da = (a / stride[t]) % orders[t];
        long db = (b / stride[t]) % orders[t];
        idx += ((da + db) % orders[t]) * stride[t];
      }
      g->mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] =
          static_cast<std::int32_t>(idx);
    }
  }
  detail::finalize_group(*g);
  return g;
}

inline GroupPtr build_from_cayley(const std::vector<std::vector<int>>& table) {
  auto g = std::make_shared<FiniteGroup>();
  g->order = static_cast<int>(table.size());
  if (g->order == 0) throw std::invalid_argument("empty cayley table");
  g->mul.reserve(static_cast<std::size_t>(g->order) * static_cast<std::size_t>(g->order));
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != g->order) throw std::invalid_argument("ragged cayley table");
    for (int v : row) g->mul.push_back(static_cast<std::int32_t>(v));
  }
  detail::validate_cayley(*g, true);
  detail::finalize_group(*g);
  return g;
}

struct PermClosure {
  GroupPtr group;
  std::vector<std::vector<int>> perms;  // element id -> permutation of 0..degree-1
};

// Closure of the generators under composition, breadth-first, identity first.
// Ids are assigned in discovery order, so the labeling is reproducible.
inline PermClosure build_from_permutations(const std::vector<std::vector<int>>& gens,
                                           int order_cap = 10080) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  const std::size_t degree = gens[0].size();
  for (const auto& p : gens) {
    if (p.size() != degree) throw std::invalid_argument("generators act on different degrees");
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || static_cast<std::size_t>(v) >= degree || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("generator is not a permutation");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::vector<int>> els{identity};
  std::map<std::vector<int>, int> index{{identity, 0}};
  for (std::size_t head = 0; head < els.size(); ++head) {
    for (const auto& gen : gens) {
      std::vector<int> prod(degree);
      for (std::size_t x = 0; x < degree; ++x)
        prod[x] = els[head][static_cast<std::size_t>(gen[x])];
      if (index.emplace(prod, static_cast<int>(els.size())).second) {
        els.push_back(prod);
        if (static_cast<int>(els.size()) > order_cap)
          throw std::invalid_argument("permutation closure exceeds the order cap");
      }
    }
  }
  const int n = static_cast<int>(els.size());
  auto g = std::make_shared<FiniteGroup>();
  g->order = n;
  g->mul.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(degree);
      for (std::size_t x = 0; x < degree; ++x)
        prod[x] = els[static_cast<std::size_t>(a)][static_cast<std::size_t>(
            els[static_cast<std::size_t>(b)][x])];
      g->mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] =
          static_cast<std::int32_t>(index.at(prod));
    }
  }
  detail::finalize_group(*g);
  return PermClosure{std::move(g), std::move(els)};
}

inline std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::vector<int> type;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    std::size_t x = s;
    while (!seen[x]) {
      seen[x] = 1;
      x = static_cast<std::size_t>(perm[x]);
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end(), std::greater<int>());
  return type;
}

struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements;  // sorted, contains 0
  bool is_normal = false;

  bool contains(int x) const { return std::binary_search(elements.begin(), elements.end(), x); }
  long order() const { return static_cast<long>(elements.size()); }
};

inline bool set_is_subgroup(const FiniteGroup& g, const std::vector<int>& sorted_elements) {
  if (sorted_elements.empty() || sorted_elements[0] != 0) return false;
  for (int x : sorted_elements)
    for (int y : sorted_elements)
      if (!std::binary_search(sorted_elements.begin(), sorted_elements.end(), g.at(x, y)))
        return false;
  return true;
}

inline bool set_is_normal(const FiniteGroup& g, const std::vector<int>& sorted_elements) {
  for (int y = 0; y < g.order; ++y)
    for (int x : sorted_elements)
      if (!std::binary_search(sorted_elements.begin(), sorted_elements.end(),
                              g.at(g.at(y, x), g.inverse(y))))
        return false;
  return true;
}

inline Subgroup subgroup_closure(const GroupPtr& g, const std::vector<int>& seed) {
  std::vector<char> in(static_cast<std::size_t>(g->order), 0);
  std::vector<int> els{0};
  in[0] = 1;
  for (int s : seed) {
    if (s < 0 || s >= g->order) throw std::invalid_argument("seed element out of range");
    if (!in[static_cast<std::size_t>(s)]) {
      in[static_cast<std::size_t>(s)] = 1;
      els.push_back(s);
    }
  }
  for (std::size_t head = 0; head < els.size(); ++head) {
    for (std::size_t other = 0; other < els.size(); ++other) {
      int p = g->at(els[head], els[other]);
      if (!in[static_cast<std::size_t>(p)]) {
        in[static_cast<std::size_t>(p)] = 1;
        els.push_back(p);
      }
      if (head != other) {
        p = g->at(els[other], els[head]);
        if (!in[static_cast<std::size_t>(p)]) {
          in[static_cast<std::size_t>(p)] = 1;
          els.push_back(p);
        }
      }
    }
  }
  std::sort(els.begin(), els.end());
  Subgroup s{g, std::move(els), false};
  s.is_normal = set_is_normal(*g, s.elements);
  return s;
}

// All normal subgroups, found by closing unions of conjugacy classes that
// contain the identity.  Sorted by order, then lexicographically.
inline std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
  const int c = g->num_classes();
  if (c > 24) throw std::invalid_argument("too many classes for normal-subgroup enumeration");
  std::vector<Subgroup> found;
  std::vector<std::vector<int>> seen_sets;
  for (std::uint64_t mask = 0; mask < (1ull << (c - 1)); ++mask) {
    long total = 1;
    for (int k = 1; k < c; ++k)
      if (mask & (1ull << (k - 1))) total += g->class_sizes[static_cast<std::size_t>(k)];
    if (g->order % total != 0) continue;
    std::vector<int> els;
    els.reserve(static_cast<std::size_t>(total));
    els.push_back(0);
    for (int k = 1; k < c; ++k)
      if (mask & (1ull << (k - 1)))
        for (int x : g->classes.block(k)) els.push_back(x);
    std::sort(els.begin(), els.end());
    if (!set_is_subgroup(*g, els)) continue;
    found.push_back(Subgroup{g, std::move(els), true});
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return found;
}

inline GroupPtr subgroup_as_group(const Subgroup& s) {
  const FiniteGroup& p = *s.parent;
  const int n = static_cast<int>(s.elements.size());
  if (!set_is_subgroup(p, s.elements)) throw std::invalid_argument("element set is not a subgroup");
  std::vector<int> local(static_cast<std::size_t>(p.order), -1);
  for (int i = 0; i < n; ++i) local[static_cast<std::size_t>(s.elements[static_cast<std::size_t>(i)])] = i;
  auto g = std::make_shared<FiniteGroup>();
  g->order = n;
  g->mul.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g->mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] =
          static_cast<std::int32_t>(local[static_cast<std::size_t>(
              p.at(s.elements[static_cast<std::size_t>(a)], s.elements[static_cast<std::size_t>(b)]))]);
  g->derivation = FiniteGroup::Derivation::subgroup;
  g->parent = s.parent;
  g->to_parent = s.elements;
  detail::finalize_group(*g);
  return g;
}

struct QuotientData {
  GroupPtr group;
  std::vector<int> projection;  // parent id -> coset id
  std::vector<int> section;     // coset id -> smallest coset member
};

// Quotient by a normal subgroup; cosets are labeled by smallest member, so the
// identity coset N gets id 0.  The projection is verified to be a homomorphism.
inline QuotientData quotient(const GroupPtr& g, const Subgroup& n) {
  if (n.parent.get() != g.get()) throw std::invalid_argument("subgroup belongs to another group");
  if (!set_is_normal(*g, n.elements)) throw std::invalid_argument("quotient by a non-normal subgroup");
  const int order = g->order;
  std::vector<int> coset_of(static_cast<std::size_t>(order), -1);
  std::vector<int> reps;
  for (int x = 0; x < order; ++x) {
    if (coset_of[static_cast<std::size_t>(x)] != -1) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : n.elements) coset_of[static_cast<std::size_t>(g->at(x, h))] = id;
  }
  const int q = static_cast<int>(reps.size());
  auto qg = std::make_shared<FiniteGroup>();
  qg->order = q;
  qg->mul.assign(static_cast<std::size_t>(q) * static_cast<std::size_t>(q), 0);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      qg->mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(q) + static_cast<std::size_t>(b)] =
          static_cast<std::int32_t>(coset_of[static_cast<std::size_t>(
              g->at(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]))]);
  qg->derivation = FiniteGroup::Derivation::quotient;
  qg->parent = g;
  qg->projection = coset_of;
  qg->section = reps;
  detail::finalize_group(*qg);
  // homomorphism check
  if (order <= 200) {
    for (int x = 0; x < order; ++x)
      for (int y = 0; y < order; ++y)
        if (coset_of[static_cast<std::size_t>(g->at(x, y))] !=
            qg->at(coset_of[static_cast<std::size_t>(x)], coset_of[static_cast<std::size_t>(y)]))
          throw std::logic_error("quotient projection is not a homomorphism");
  } else {
    std::mt19937 rng(0xBEEF);
    std::uniform_int_distribution<int> pick(0, order - 1);
    for (int t = 0; t < 200000; ++t) {
      int x = pick(rng), y = pick(rng);
      if (coset_of[static_cast<std::size_t>(g->at(x, y))] !=
          qg->at(coset_of[static_cast<std::size_t>(x)], coset_of[static_cast<std::size_t>(y)]))
        throw std::logic_error("quotient projection is not a homomorphism");
    }
  }
  return QuotientData{std::move(qg), std::move(coset_of), std::move(reps)};
}

// Coefficients a with K_i * K_j = sum_k a[k] K_k in the class algebra: a[k]
// counts the pairs (x, y) in K_i x K_j with xy equal to a fixed member of K_k.
inline std::vector<long> class_structure_constants(const FiniteGroup& g, int i, int j) {
  std::vector<long> per_element(static_cast<std::size_t>(g.order), 0);
  for (int x : g.classes.block(i))
    for (int y : g.classes.block(j)) ++per_element[static_cast<std::size_t>(g.at(x, y))];
  std::vector<long> a(static_cast<std::size_t>(g.num_classes()));
  for (int k = 0; k < g.num_classes(); ++k)
    a[static_cast<std::size_t>(k)] = per_element[static_cast<std::size_t>(g.class_reps[static_cast<std::size_t>(k)])];
  return a;
}

struct StructureConstants {
  int c = 0;
  std::vector<long> flat;  // [i][j][k]
  long at(int i, int j, int k) const {
    return flat[(static_cast<std::size_t>(i) * static_cast<std::size_t>(c) + static_cast<std::size_t>(j)) *
                    static_cast<std::size_t>(c) +
                static_cast<std::size_t>(k)];
  }
};

inline StructureConstants structure_constant_table(const FiniteGroup& g) {
  StructureConstants t;
  t.c = g.num_classes();
  t.flat.assign(static_cast<std::size_t>(t.c) * static_cast<std::size_t>(t.c) * static_cast<std::size_t>(t.c), 0);
  std::vector<long> per_element(static_cast<std::size_t>(g.order));
  for (int i = 0; i < t.c; ++i) {
    for (int j = 0; j < t.c; ++j) {
      std::fill(per_element.begin(), per_element.end(), 0);
      for (int x : g.classes.block(i))
        for (int y : g.classes.block(j)) ++per_element[static_cast<std::size_t>(g.at(x, y))];
      for (int k = 0; k < t.c; ++k)
        t.flat[(static_cast<std::size_t>(i) * static_cast<std::size_t>(t.c) + static_cast<std::size_t>(j)) *
                   static_cast<std::size_t>(t.c) +
               static_cast<std::size_t>(k)] =
            per_element[static_cast<std::size_t>(g.class_reps[static_cast<std::size_t>(k)])];
    }
  }
  return t;
}

inline GroupPtr root_of(const GroupPtr& g) {
  GroupPtr r = g;
  while (r->parent) r = r->parent;
  return r;
}

// Each element expressed as the set of ancestor-group elements it stands for;
// a null ancestor means the root of the derivation chain.
inline std::vector<std::vector<int>> element_tags(const GroupPtr& g,
                                                  const FiniteGroup* ancestor = nullptr) {
  if (g.get() == ancestor || (!ancestor && !g->parent)) {
    std::vector<std::vector<int>> tags(static_cast<std::size_t>(g->order));
    for (int i = 0; i < g->order; ++i) tags[static_cast<std::size_t>(i)] = {i};
    return tags;
  }
  if (!g->parent) throw std::invalid_argument("element_tags: ancestor is not on the derivation path");
  auto up = element_tags(g->parent, ancestor);
  std::vector<std::vector<int>> tags(static_cast<std::size_t>(g->order));
  if (g->derivation == FiniteGroup::Derivation::subgroup) {
    for (int i = 0; i < g->order; ++i)
      tags[static_cast<std::size_t>(i)] = up[static_cast<std::size_t>(g->to_parent[static_cast<std::size_t>(i)])];
  } else {
    for (int x = 0; x < g->parent->order; ++x) {
      auto& dst = tags[static_cast<std::size_t>(g->projection[static_cast<std::size_t>(x)])];
      dst.insert(dst.end(), up[static_cast<std::size_t>(x)].begin(), up[static_cast<std::size_t>(x)].end());
    }
    for (auto& t : tags) std::sort(t.begin(), t.end());
  }
  return tags;
}

// The canonical isomorphism between two realizations of the same abstract
// group derived from one root.  Matched by element tags, then verified to be
// a homomorphism; throws if the realizations do not correspond.
inline std::vector<int> group_iso_by_tags(const GroupPtr& a, const GroupPtr& b) {
  if (a->order != b->order) throw std::invalid_argument("group_iso_by_tags: order mismatch");
  if (root_of(a).get() != root_of(b).get())
    throw std::invalid_argument("group_iso_by_tags: groups come from different roots");
  auto ta = element_tags(a);
  auto tb = element_tags(b);
  std::map<std::vector<int>, int> where;
  for (int i = 0; i < b->order; ++i) where[tb[static_cast<std::size_t>(i)]] = i;
  std::vector<int> iso(static_cast<std::size_t>(a->order), -1);
  for (int i = 0; i < a->order; ++i) {
    auto it = where.find(ta[static_cast<std::size_t>(i)]);
    if (it == where.end()) throw std::invalid_argument("group_iso_by_tags: element tags do not match");
    iso[static_cast<std::size_t>(i)] = it->second;
  }
  if (iso[0] != 0) throw std::logic_error("group_iso_by_tags: identity not preserved");
  for (int x = 0; x < a->order; ++x)
    for (int y = 0; y < a->order; ++y)
      if (iso[static_cast<std::size_t>(a->at(x, y))] !=
          b->at(iso[static_cast<std::size_t>(x)], iso[static_cast<std::size_t>(y)]))
        throw std::logic_error("group_iso_by_tags: tag matching is not a homomorphism");
  return iso;
}

}  // namespace sct
