#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "sct/cyclotomic.hpp"
#include "sct/group.hpp"

// Exact character tables.  Rows are irreducible characters with the principal
// character first; columns follow the group's conjugacy class order, so column
// 0 is the identity class and carries the degrees.  Abelian tables are
// computed here; nonabelian tables are supplied as data and revalidated by
// validate_table before use.

namespace sct {

struct CharacterTable {
  GroupPtr group;
  long conductor = 1;
  CycMatrix entries;  // rows characters, cols classes
  // abelian tables only: exps[i][g] with chi_i(g) = zeta_conductor^exps[i][g],
  // indexed by element (classes are singletons).  Empty for loaded tables.
  std::vector<std::vector<int>> exps;

  int num_chars() const { return static_cast<int>(entries.rows); }
  const Cyclotomic& at(int chi, int cls) const {
    return entries.at(static_cast<std::size_t>(chi), static_cast<std::size_t>(cls));
  }
  const Cyclotomic& value_at_element(int chi, int g) const {
    return at(chi, group->class_of[static_cast<std::size_t>(g)]);
  }
  Int degree(int chi) const {
    Rat d = at(chi, 0).rational_value();
    if (!is_integer(d) || d <= 0) throw std::logic_error("character degree is not a positive integer");
    return boost::multiprecision::numerator(d);
  }
};

namespace detail {

// All homomorphisms into Z_m written additively, as exponent vectors indexed
// by element.  Images of a generator g are constrained to multiples of
// m / ord(g); coincidences between generator powers are caught by the
// breadth-first consistency check, so no presentation is needed.
inline std::vector<std::vector<int>> enumerate_homs_to_zm(const FiniteGroup& g, long m) {
  const int n = g.order;
  std::vector<int> gens;
  {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    in[0] = 1;
    long covered = 1;
    for (int e = 1; e < n && covered < n; ++e) {
      if (in[static_cast<std::size_t>(e)]) continue;
      gens.push_back(e);
      // close the current set under multiplication by the new generator
      std::vector<int> members;
      for (int x = 0; x < n; ++x)
        if (in[static_cast<std::size_t>(x)]) members.push_back(x);
      for (std::size_t head = 0; head < members.size(); ++head) {
        int y = g.at(members[head], e);
        if (!in[static_cast<std::size_t>(y)]) {
          in[static_cast<std::size_t>(y)] = 1;
          members.push_back(y);
          ++covered;
        }
      }
    }
  }
  std::vector<std::vector<int>> states;
  {
    std::vector<int> f(static_cast<std::size_t>(n), -1);
    f[0] = 0;
    states.push_back(std::move(f));
  }
  for (int e : gens) {
    long r = g.element_orders[static_cast<std::size_t>(e)];
    if (m % r != 0) throw std::invalid_argument("element order does not divide the target modulus");
    long step = m / r;
    std::vector<std::vector<int>> next;
    for (const auto& base : states) {
      for (long k = 0; k < r; ++k) {
        int v = static_cast<int>(k * step);
        std::vector<int> f = base;
        bool ok = true;
        std::vector<int> queue;
        for (int x = 0; x < n && ok; ++x)
          if (f[static_cast<std::size_t>(x)] >= 0) queue.push_back(x);
        for (std::size_t head = 0; head < queue.size() && ok; ++head) {
          int x = queue[head];
          int y = g.at(x, e);
          int want = static_cast<int>((f[static_cast<std::size_t>(x)] + v) % m);
          if (f[static_cast<std::size_t>(y)] < 0) {
            f[static_cast<std::size_t>(y)] = want;
            queue.push_back(y);
          } else if (f[static_cast<std::size_t>(y)] != want) {
            ok = false;
          }
        }
        if (ok) next.push_back(std::move(f));
      }
    }
    states = std::move(next);
  }
  for (const auto& f : states)
    for (int v : f)
      if (v < 0) throw std::logic_error("homomorphism enumeration left elements unassigned");
  std::sort(states.begin(), states.end());
  return states;
}

}  // namespace detail

// Character table of an abelian group.  Groups built from a cyclic-factor
// list use the product formula directly, so the table is symmetric and row
// arithmetic matches element arithmetic; anything else gets its characters by
// enumerating homomorphisms into Z_exponent, rows sorted lexicographically by
// exponent vector (the principal character sorts first either way).
inline CharacterTable abelian_character_table(const GroupPtr& g) {
  if (!g->abelian) throw std::invalid_argument("abelian_character_table: group is not abelian");
  const int n = g->order;
  const long m = g->exponent;
  CharacterTable t;
  t.group = g;
  t.conductor = m;
  std::vector<std::vector<int>> exps;
  if (!g->cyclic_orders.empty() || n == 1) {
    const auto& orders = g->cyclic_orders;
    const std::size_t r = orders.size();
    std::vector<long> stride(r, 1);
    for (std::size_t q = r; q-- > 1;) stride[q - 1] = stride[q] * orders[q];
    exps.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int a = 0; a < n; ++a)
      for (int x = 0; x < n; ++x) {
        long acc = 0;
        for (std::size_t q = 0; q < r; ++q) {
          long da = (a / stride[q]) % orders[q];
          long dx = (x / stride[q]) % orders[q];
          acc = (acc + (m / orders[q]) * ((da * dx) % orders[q])) % m;
        }
        exps[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)] = static_cast<int>(acc);
      }
  } else {
    exps = detail::enumerate_homs_to_zm(*g, m);
    if (static_cast<int>(exps.size()) != n)
      throw std::logic_error("abelian group has the wrong number of characters");
  }
  t.entries = CycMatrix(m, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < n; ++x)
      t.entries.at(static_cast<std::size_t>(i), static_cast<std::size_t>(x)) =
          Cyclotomic::root_of_unity(m, exps[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)]);
  t.exps = std::move(exps);
  return t;
}

// Full consistency check: shape, principal row, positive integer degrees with
// squares summing to |G|, first orthogonality, and chi(g^{-1}) = conj(chi(g)).
inline void validate_table(const CharacterTable& t) {
  const FiniteGroup& g = *t.group;
  const int c = g.num_classes();
  if (static_cast<int>(t.entries.rows) != c || static_cast<int>(t.entries.cols) != c)
    throw std::invalid_argument("character table is not square of class-count size");
  if (t.entries.conductor != t.conductor) throw std::invalid_argument("table conductor mismatch");
  const Cyclotomic one = Cyclotomic::one(t.conductor);
  for (int k = 0; k < c; ++k)
    if (t.at(0, k) != one) throw std::invalid_argument("first row is not the principal character");
  Int degree_square_sum = 0;
  for (int i = 0; i < c; ++i) {
    Int d = t.degree(i);
    degree_square_sum += d * d;
  }
  if (degree_square_sum != g.order)
    throw std::invalid_argument("degree squares do not sum to the group order");
  for (int i = 0; i < c; ++i) {
    for (int j = i; j < c; ++j) {
      Cyclotomic acc = Cyclotomic::zero(t.conductor);
      for (int k = 0; k < c; ++k) {
        Cyclotomic term = t.at(i, k);
        term *= t.at(j, k).conjugate();
        acc += term.scaled(Rat(g.class_sizes[static_cast<std::size_t>(k)]));
      }
      Rat want = (i == j) ? Rat(g.order) : Rat(0);
      if (acc != Cyclotomic::from_rational(t.conductor, want))
        throw std::invalid_argument("rows fail first orthogonality");
    }
  }
  for (int k = 0; k < c; ++k) {
    int inv_class = g.class_of[static_cast<std::size_t>(
        g.inverse(g.class_reps[static_cast<std::size_t>(k)]))];
    for (int i = 0; i < c; ++i)
      if (t.at(i, inv_class) != t.at(i, k).conjugate())
        throw std::invalid_argument("inverse classes are not conjugate columns");
  }
}

// Assembles and validates a table given in group class order.
inline CharacterTable table_from_rows(const GroupPtr& g, long conductor,
                                      const std::vector<std::vector<Cyclotomic>>& rows) {
  CharacterTable t;
  t.group = g;
  t.conductor = conductor;
  const int c = g->num_classes();
  if (static_cast<int>(rows.size()) != c) throw std::invalid_argument("wrong number of characters");
  t.entries = CycMatrix(conductor, static_cast<std::size_t>(c), static_cast<std::size_t>(c));
  for (int i = 0; i < c; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
      throw std::invalid_argument("ragged character table");
    for (int k = 0; k < c; ++k) {
      const Cyclotomic& v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      if (conductor % v.conductor() != 0)
        throw std::invalid_argument("entry conductor does not divide the table conductor");
      t.entries.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) = v.embedded(conductor);
    }
  }
  validate_table(t);
  return t;
}

inline std::vector<int> kernel_of(const CharacterTable& t, int chi) {
  const Cyclotomic& deg = t.at(chi, 0);
  std::vector<int> ker;
  for (int x = 0; x < t.group->order; ++x)
    if (t.value_at_element(chi, x) == deg) ker.push_back(x);
  return ker;
}

// Row index of the pointwise product of two abelian characters.
inline int char_product_index(const CharacterTable& t, int i, int j) {
  if (t.exps.empty()) throw std::invalid_argument("char_product_index needs an abelian table");
  const int n = t.group->order;
  std::vector<int> want(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    want[static_cast<std::size_t>(x)] = static_cast<int>(
        (t.exps[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)] +
         t.exps[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)]) %
        t.conductor);
  for (int r = 0; r < n; ++r)
    if (t.exps[static_cast<std::size_t>(r)] == want) return r;
  throw std::logic_error("character product is not a row of the table");
}

// For each character of the quotient, the row of the parent's table equal to
// its pullback along the projection.  The image is exactly the set of parent
// characters whose kernel contains the subgroup being factored out.
inline std::vector<int> inflation_char_map(const CharacterTable& tq, const QuotientData& qd,
                                           const CharacterTable& tg) {
  if (tq.group.get() != qd.group.get()) throw std::invalid_argument("quotient table mismatch");
  if (qd.group->parent.get() != tg.group.get()) throw std::invalid_argument("parent table mismatch");
  long m = lcm_ll(tq.conductor, tg.conductor);
  const int c = tg.group->num_classes();
  std::vector<int> map;
  map.reserve(static_cast<std::size_t>(tq.num_chars()));
  for (int j = 0; j < tq.num_chars(); ++j) {
    int found = -1;
    for (int i = 0; i < tg.num_chars(); ++i) {
      bool match = true;
      for (int k = 0; k < c && match; ++k) {
        int rep = tg.group->class_reps[static_cast<std::size_t>(k)];
        const Cyclotomic& up = tq.value_at_element(j, qd.projection[static_cast<std::size_t>(rep)]);
        match = up.embedded(m) == tg.at(i, k).embedded(m);
      }
      if (match) {
        found = i;
        break;
      }
    }
    if (found < 0) throw std::logic_error("quotient character has no inflation in the parent table");
    map.push_back(found);
  }
  return map;
}

// Inner product of chi restricted to the subgroup with the subgroup's own
// irreducible psi; always a nonnegative integer.
inline Int restriction_multiplicity(const CharacterTable& tg, int chi, const Subgroup& n,
                                    const CharacterTable& tn, int psi) {
  if (n.parent.get() != tg.group.get()) throw std::invalid_argument("subgroup belongs elsewhere");
  if (tn.group->derivation != FiniteGroup::Derivation::subgroup ||
      tn.group->to_parent != n.elements)
    throw std::invalid_argument("subgroup table does not realize the subgroup");
  long m = lcm_ll(tg.conductor, tn.conductor);
  Cyclotomic acc = Cyclotomic::zero(m);
  for (int local = 0; local < static_cast<int>(n.elements.size()); ++local) {
    int up = n.elements[static_cast<std::size_t>(local)];
    Cyclotomic term = tg.value_at_element(chi, up).embedded(m);
    term *= tn.value_at_element(psi, local).embedded(m).conjugate();
    acc += term;
  }
  acc = acc.divided_by(Rat(n.order()));
  if (!acc.is_rational()) throw std::logic_error("restriction multiplicity is irrational");
  Rat r = acc.rational_value();
  if (!is_integer(r) || r < 0) throw std::logic_error("restriction multiplicity is not a nonnegative integer");
  return boost::multiprecision::numerator(r);
}

}  // namespace sct
