#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sct/enumerate.hpp"
#include "sct/products.hpp"

// Duality for abelian groups under index reuse: when the descriptor table is
// symmetric, character a and element a share a label, so Irr(G) is G itself
// and the dual of a theory just swaps its two partitions on the same table.
// Symmetry holds for tables built from a cyclic decomposition; tables with
// discovery-ordered rows are rejected rather than silently relabeled.

namespace sct {

namespace detail {

inline void require_dual_table(const CharacterTable& t) {
  if (!t.group->abelian) throw std::invalid_argument("dual: group is not abelian");
  const int n = t.group->order;
  if (t.num_chars() != n) throw std::logic_error("dual: abelian table is not square");
  if (!t.exps.empty()) {
    for (int a = 0; a < n; ++a)
      for (int x = a + 1; x < n; ++x)
        if (t.exps[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)] !=
            t.exps[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)])
          throw std::invalid_argument("dual: character table is not symmetric");
    return;
  }
  for (int a = 0; a < n; ++a)
    for (int x = a + 1; x < n; ++x)
      if (!(t.value_at_element(a, x) == t.value_at_element(x, a)))
        throw std::invalid_argument("dual: character table is not symmetric");
}

}  // namespace detail

inline SuperTheory dual_theory(const CharacterTable& t, const SuperTheory& c) {
  if (c.group.get() != t.group.get())
    throw std::invalid_argument("dual_theory: theory belongs to another table");
  detail::require_dual_table(t);
  return detail::must_verify(t, c.class_part, c.char_part,
                             "dual_theory: swapped partitions fail verification");
}

// Characters trivial on the given subset, as a sorted subgroup of the shared
// index set.  For a subgroup H this is Irr(G/H) seen inside Irr(G) = G.
inline std::vector<int> annihilator_of(const CharacterTable& t, const std::vector<int>& h_elements) {
  if (!t.group->abelian) throw std::invalid_argument("annihilator_of: group is not abelian");
  const int n = t.group->order;
  std::vector<int> out;
  if (!t.exps.empty()) {
    for (int a = 0; a < n; ++a) {
      bool trivial = true;
      for (int h : h_elements)
        if (t.exps[static_cast<std::size_t>(a)][static_cast<std::size_t>(h)] != 0) {
          trivial = false;
          break;
        }
      if (trivial) out.push_back(a);
    }
    return out;
  }
  const Cyclotomic one = Cyclotomic::one(t.conductor);
  for (int a = 0; a < n; ++a) {
    bool trivial = true;
    for (int h : h_elements)
      if (!(t.value_at_element(a, h) == one)) {
        trivial = false;
        break;
      }
    if (trivial) out.push_back(a);
  }
  return out;
}

// Every theory maps to a theory, injectively, and applying the dual twice
// gives the identity.  Sweeps the full enumeration, so the cap applies.
inline bool dual_bijection_check(const CharacterTable& t, EnumerateOptions opt = {}) {
  auto res = enumerate_sup(t.group, &t, opt);
  std::vector<SetPartition> duals;
  duals.reserve(res.theories.size());
  for (const auto& e : res.theories) {
    auto d = dual_theory(t, e);
    if (!std::binary_search(res.class_partitions.begin(), res.class_partitions.end(),
                            d.class_part))
      return false;
    if (!same_theory(dual_theory(t, d), e)) return false;
    duals.push_back(d.class_part);
  }
  std::sort(duals.begin(), duals.end());
  if (std::adjacent_find(duals.begin(), duals.end()) != duals.end()) return false;
  return duals.size() == res.class_partitions.size();
}

// A subgroup is a union of superclasses exactly when its annihilator is a
// union of the dual theory's superclasses.  Returns whether the two sides
// agree for this theory and subgroup.
inline bool dual_cnormal_check(const CharacterTable& t, const SuperTheory& c,
                               const std::vector<int>& n_elements) {
  if (!set_is_subgroup(*t.group, n_elements))
    throw std::invalid_argument("dual_cnormal_check: not a subgroup");
  const bool primal = detail::blocks_respect(c, n_elements, nullptr);
  const bool mirrored =
      detail::blocks_respect(dual_theory(t, c), annihilator_of(t, n_elements), nullptr);
  return primal == mirrored;
}

// Transport of a theory on a subgroup M to the quotient of the dual group by
// the annihilator of M.  Cosets of the annihilator restrict to single
// characters of M, which matches coset ids to the subgroup realization's rows;
// the transported class side is the image of the character side, and the
// character side is recovered by verification.
inline SuperTheory iota_transport(Workspace& ws, const std::vector<int>& m_elements,
                                  const SuperTheory& c) {
  detail::require_dual_table(ws.table());
  auto m_sorted = m_elements;
  std::sort(m_sorted.begin(), m_sorted.end());
  const auto ann = annihilator_of(ws.table(), m_sorted);
  auto& qcx = ws.quot(ann);
  const int qn = qcx.qd.group->order;

  std::vector<int> elem_of_char;
  if (c.group.get() == ws.group().get()) {
    // whole-group theory: a character is its own restriction, so the coset map
    // is the projection itself
    if (static_cast<int>(m_sorted.size()) != ws.group()->order)
      throw std::invalid_argument("iota_transport: whole-group theory over a proper subgroup");
    elem_of_char = qcx.qd.projection;
  } else {
    auto& scx = ws.sub(m_sorted);
    if (c.group.get() != scx.as_group.get())
      throw std::invalid_argument("iota_transport: theory is not on the cached subgroup realization");
    if (qn != scx.as_group->order)
      throw std::logic_error("iota_transport: annihilator quotient has the wrong order");
    elem_of_char.assign(static_cast<std::size_t>(qn), -1);
    for (int q = 0; q < qn; ++q) {
      const auto& cons = scx.constituents[static_cast<std::size_t>(qcx.qd.section[static_cast<std::size_t>(q)])];
      if (cons.size() != 1)
        throw std::logic_error("iota_transport: restriction of a linear character is not a single row");
      if (elem_of_char[static_cast<std::size_t>(cons[0])] != -1)
        throw std::logic_error("iota_transport: two cosets restrict to the same character");
      elem_of_char[static_cast<std::size_t>(cons[0])] = q;
    }
  }

  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(c.char_part.block_count()));
  for (const auto& blk : c.char_part.blocks()) {
    std::vector<int> img;
    img.reserve(blk.size());
    for (int j : blk) img.push_back(elem_of_char[static_cast<std::size_t>(j)]);
    blocks.push_back(std::move(img));
  }
  auto r = x_from_k(qcx.table, SetPartition::from_blocks(qn, blocks));
  if (!r.ok())
    throw std::logic_error("iota_transport: transported partition fails verification: " +
                           r.rejection->message);
  return *r.value;
}

// Dual of a theory on the quotient G/N, realized on the annihilator subgroup
// of N inside the dual group.  Inflation carries the quotient's characters
// onto the annihilator's elements.
inline SuperTheory dual_on_annihilator(Workspace& ws, const std::vector<int>& n_elements,
                                       const SuperTheory& d) {
  detail::require_dual_table(ws.table());
  auto& qcx = ws.quot(n_elements);
  if (d.group.get() != qcx.qd.group.get())
    throw std::invalid_argument("dual_on_annihilator: theory is not on the cached quotient realization");
  const auto ann = annihilator_of(ws.table(), n_elements);
  auto& scx = ws.sub(ann);
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(d.char_part.block_count()));
  for (const auto& blk : d.char_part.blocks()) {
    std::vector<int> img;
    img.reserve(blk.size());
    for (int q : blk) {
      const int local = scx.local_of[static_cast<std::size_t>(qcx.inflation[static_cast<std::size_t>(q)])];
      if (local < 0)
        throw std::logic_error("dual_on_annihilator: inflated character escapes the annihilator");
      img.push_back(local);
    }
    blocks.push_back(std::move(img));
  }
  auto r = x_from_k(scx.table, SetPartition::from_blocks(scx.as_group->order, blocks));
  if (!r.ok())
    throw std::logic_error("dual_on_annihilator: transported partition fails verification: " +
                           r.rejection->message);
  return *r.value;
}

struct DualLawReport {
  std::int64_t wedges_checked = 0;
  std::int64_t theories_checked = 0;
  std::vector<std::string> violations;
};

// Two laws over a subgroup chain N <= M of an abelian group: the dual of a
// wedge product is the mirrored wedge of the duals over the annihilator chain
// ann(M) <= ann(N), and a theory factors over (N, M) exactly when its dual
// factors over the mirrored pair.  The report lists violations; none are
// expected.
inline DualLawReport dual_product_laws(Workspace& ws, const std::vector<int>& n_elements,
                                       const std::vector<int>& m_elements,
                                       EnumerateOptions opt = {}) {
  detail::require_dual_table(ws.table());
  DualLawReport rep;
  const auto& tg = ws.table();
  auto& scx = ws.sub(m_elements);
  auto& qcx = ws.quot(n_elements);
  const auto ann_m = annihilator_of(tg, m_elements);
  const auto ann_n = annihilator_of(tg, n_elements);

  std::vector<int> n_local;
  for (int x : n_elements) {
    const int l = scx.local_of[static_cast<std::size_t>(x)];
    if (l < 0) throw std::invalid_argument("dual_product_laws: subgroups do not form a chain");
    n_local.push_back(l);
  }
  std::sort(n_local.begin(), n_local.end());
  std::vector<int> m_img;
  for (int x : m_elements) m_img.push_back(qcx.qd.projection[static_cast<std::size_t>(x)]);
  std::sort(m_img.begin(), m_img.end());
  m_img.erase(std::unique(m_img.begin(), m_img.end()), m_img.end());

  const auto cs = enumerate_sup(scx.as_group, &scx.table, opt).theories;
  const auto ds = enumerate_sup(qcx.qd.group, &qcx.table, opt).theories;
  for (const auto& c : cs) {
    if (!detail::blocks_respect(c, n_local, nullptr)) continue;
    for (const auto& d : ds) {
      if (!detail::blocks_respect(d, m_img, nullptr)) continue;
      std::optional<SuperTheory> e;
      try {
        e = wtp_product(ws, n_elements, m_elements, c, d);
      } catch (const std::invalid_argument&) {
        continue;  // the factors disagree on the overlap; not a wedge instance
      }
      ++rep.wedges_checked;
      try {
        const auto lhs = dual_theory(tg, *e);
        const auto first = dual_on_annihilator(ws, n_elements, d);
        const auto second = iota_transport(ws, m_elements, c);
        const auto rhs = wtp_product(ws, ann_m, ann_n, first, second);
        if (!same_theory(lhs, rhs))
          rep.violations.push_back("dual of a wedge is not the mirrored wedge of the duals");
      } catch (const std::exception& ex) {
        rep.violations.push_back(std::string("mirrored wedge failed: ") + ex.what());
      }
    }
  }

  for (const auto& e : enumerate_sup(ws.group(), &tg, opt).theories) {
    ++rep.theories_checked;
    const bool primal = wtp_recognize(ws, e, n_elements, m_elements);
    const bool mirrored = wtp_recognize(ws, dual_theory(tg, e), ann_m, ann_n);
    if (primal != mirrored)
      rep.violations.push_back("factoring over the pair disagrees with the dual over the mirrored pair");
  }
  return rep;
}

}  // namespace sct
