// Acceptance suite: one pass/fail line per check, exit status is the number
// of failures.  Every check is exact; the time budgets are part of the check.
//
// Run from anywhere; the bundled S6 table is found through SCT_DATA_DIR.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sct/duality.hpp"
#include "sct/io.hpp"

using namespace sct;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  o.pass = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += why;
}

// ---------------------------------------------------------------- check 1
// S6 from two generators: the two cycle-type partitions are both admissible,
// their meet is not, and their join extends to a full theory over the bundled
// character table.

using Type = std::vector<int>;

SetPartition s6_partition(const std::map<Type, std::vector<int>>& by_type,
                          const std::vector<std::vector<Type>>& spec) {
  std::vector<std::vector<int>> blocks;
  for (const auto& group : spec) {
    std::vector<int> blk;
    for (const auto& t : group) {
      const auto& ids = by_type.at(t);
      blk.insert(blk.end(), ids.begin(), ids.end());
    }
    std::sort(blk.begin(), blk.end());
    blocks.push_back(std::move(blk));
  }
  return SetPartition::from_blocks(720, blocks);
}

Outcome check_s6_join() {
  Outcome o;
  auto pc = build_from_permutations({{1, 0, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 0}});
  if (pc.group->order != 720 || pc.group->num_classes() != 11) {
    fail(o, "closure is not S6");
    return o;
  }
  std::map<Type, std::vector<int>> by_type;
  for (int e = 0; e < pc.group->order; ++e)
    by_type[cycle_type(pc.perms[static_cast<std::size_t>(e)])].push_back(e);

  const Type one{1, 1, 1, 1, 1, 1}, t2{2, 1, 1, 1, 1}, t22{2, 2, 1, 1}, t222{2, 2, 2},
      t3{3, 1, 1, 1}, t32{3, 2, 1}, t33{3, 3}, t4{4, 1, 1}, t42{4, 2}, t5{5, 1}, t6{6};
  auto K = s6_partition(by_type, {{one}, {t2, t222, t4}, {t6, t32}, {t22}, {t3, t33}, {t42}, {t5}});
  auto L = s6_partition(by_type, {{one}, {t2, t222, t4, t6, t32}, {t22}, {t3}, {t33}, {t42}, {t5}});

  if (!superclass_admissible(*pc.group, K)) fail(o, "K is not admissible");
  if (!superclass_admissible(*pc.group, L)) fail(o, "L is not admissible");
  auto common = meet(K, L);
  if (superclass_admissible(*pc.group, common)) fail(o, "meet unexpectedly admissible");
  auto joined = join(K, L);
  if (!superclass_admissible(*pc.group, joined)) fail(o, "join is not admissible");

  std::ifstream in(std::string(SCT_DATA_DIR) + "/s6.json");
  if (!in) {
    fail(o, "cannot open bundled s6 table");
    return o;
  }
  auto table = table_from_json(Json::parse(in));
  if (table.group->classes != pc.group->classes) {
    fail(o, "bundled table labels classes differently");
    return o;
  }
  auto full = x_from_k(table, joined);
  if (!full.ok())
    fail(o, "join does not re-verify: " + full.rejection->message);
  else if (full.value->size() != joined.block_count())
    fail(o, "join theory has the wrong size");
  std::ostringstream d;
  d << "meet " << common.block_count() << " blocks rejected, join " << joined.block_count()
    << " blocks verified";
  if (o.pass) o.detail = d.str();
  return o;
}

// ---------------------------------------------------------------- check 2
// The three verifiers agree on every abelian group of order at most 8:
// the pair criteria (definition and rowspace) on every candidate pair, and
// the class-side filter against existence of a character-side partner.
// Candidate spaces are the engine's: identity and principal blocks pinned.
// Unpinned pairs are swept exhaustively through order 5 and sampled above.

std::vector<SetPartition> pinned_partitions(int n) {
  std::vector<SetPartition> out;
  for (CoarseningIterator it(SetPartition::singletons(n), 0); !it.done(); it.advance())
    out.push_back(it.current());
  return out;
}

Outcome check_verifier_agreement() {
  Outcome o;
  const std::vector<std::vector<long>> shapes = {{1}, {2},      {3}, {4}, {2, 2},    {5},
                                                 {6}, {7},      {8}, {2, 4}, {2, 2, 2}};
  long pairs = 0, groups = 0;
  for (const auto& orders : shapes) {
    auto g = build_abelian(orders);
    auto t = abelian_character_table(g);
    const int n = g->order;
    ++groups;

    auto pinned = pinned_partitions(n);
    for (const auto& k : pinned) {
      const bool adm = superclass_admissible(*g, k);
      const bool partnered = x_from_k(t, k).ok();
      bool witnessed = false;
      for (const auto& x : pinned) {
        const bool def = verify_definition(t, x, k).ok();
        const bool mat = matrix_condition(t, x, k);
        ++pairs;
        if (def != mat) {
          fail(o, "definition and rowspace disagree on a pinned pair, order " +
                      std::to_string(n));
          return o;
        }
        witnessed = witnessed || def;
      }
      if (adm != partnered || adm != witnessed) {
        fail(o, "class-side filter disagrees with existence, order " + std::to_string(n));
        return o;
      }
    }

    if (n <= 5) {
      auto all = all_partitions(n);
      for (const auto& x : all)
        for (const auto& k : all) {
          ++pairs;
          if (verify_definition(t, x, k).ok() != matrix_condition(t, x, k)) {
            fail(o, "disagreement on an unpinned pair, order " + std::to_string(n));
            return o;
          }
        }
    } else {
      // deterministic unpinned sample: random growth strings, fixed seed
      std::mt19937 rng(20260816u + static_cast<unsigned>(n));
      auto random_partition = [&]() {
        std::vector<int> rgs(static_cast<std::size_t>(n), 0);
        int mx = 0;
        for (int i = 1; i < n; ++i) {
          rgs[static_cast<std::size_t>(i)] =
              static_cast<int>(rng() % static_cast<unsigned>(mx + 2));
          mx = std::max(mx, rgs[static_cast<std::size_t>(i)]);
        }
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(mx + 1));
        for (int i = 0; i < n; ++i)
          blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i);
        return SetPartition::from_blocks(n, blocks);
      };
      for (int trial = 0; trial < 300; ++trial) {
        auto x = random_partition();
        auto k = random_partition();
        ++pairs;
        if (verify_definition(t, x, k).ok() != matrix_condition(t, x, k)) {
          fail(o, "disagreement on a sampled pair, order " + std::to_string(n));
          return o;
        }
      }
    }
  }
  std::ostringstream d;
  d << pairs << " pairs across " << groups << " groups";
  o.detail = d.str();
  return o;
}

// ---------------------------------------------------------------- check 3
// Cyclic enumeration counts against the definition-level search.  The search
// tries every pair of equal-sized partitions and keeps those whose
// degree-weighted block sums are constant on each class block; no pinning, no
// early aborts.  The recorded counts for Z_1..Z_8 are 1,1,2,3,3,7,4,10.

long definition_search_count(const CharacterTable& t) {
  const int c = t.group->num_classes();
  const auto parts = all_partitions(c);
  long found = 0;
  for (const auto& x : parts) {
    std::vector<std::vector<Cyclotomic>> col(static_cast<std::size_t>(c));
    for (int k = 0; k < c; ++k)
      for (const auto& block : x.blocks()) {
        Cyclotomic s = Cyclotomic::from_rational(t.conductor, Rat(0));
        for (int chi : block) s += t.at(chi, k).scaled(Rat(t.degree(chi)));
        col[static_cast<std::size_t>(k)].push_back(s);
      }
    std::vector<int> label(static_cast<std::size_t>(c), -1);
    int next = 0;
    for (int k = 0; k < c; ++k) {
      if (label[static_cast<std::size_t>(k)] != -1) continue;
      label[static_cast<std::size_t>(k)] = next;
      for (int j = k + 1; j < c; ++j)
        if (label[static_cast<std::size_t>(j)] == -1 &&
            col[static_cast<std::size_t>(j)] == col[static_cast<std::size_t>(k)])
          label[static_cast<std::size_t>(j)] = next;
      ++next;
    }
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(next));
    for (int k = 0; k < c; ++k)
      groups[static_cast<std::size_t>(label[static_cast<std::size_t>(k)])].push_back(k);
    const auto constant_on = SetPartition::from_blocks(c, groups);
    for (const auto& k : parts)
      if (k.block_count() == x.block_count() && refines(k, constant_on)) ++found;
  }
  return found;
}

Outcome check_cyclic_counts() {
  Outcome o;
  const std::vector<long> recorded{1, 1, 2, 3, 3, 7, 4, 10};
  std::ostringstream d;
  for (long n = 1; n <= 8; ++n) {
    auto g = build_abelian({n});
    auto t = abelian_character_table(g);
    const long oracle = definition_search_count(t);
    const auto res = enumerate_sup(g, &t);
    const long engine = static_cast<long>(res.theories.size());
    if (oracle != recorded[static_cast<std::size_t>(n - 1)])
      fail(o, "search count drifted from the recorded value at n=" + std::to_string(n));
    if (engine != oracle)
      fail(o, "enumeration disagrees with the search at n=" + std::to_string(n));
    if (res.stats.candidates != static_cast<std::int64_t>(bell_number(static_cast<int>(n) - 1)))
      fail(o, "candidate count is not Bell(n-1) at n=" + std::to_string(n));
    d << engine << (n < 8 ? "," : "");
  }
  if (o.pass) o.detail = "counts " + d.str();
  return o;
}

// ---------------------------------------------------------------- check 4
// Duality on Z8 and Z2xZ4: every enumerated theory re-verifies, its dual
// verifies, dualizing is a bijection of the full set, and applying it twice
// is the identity.

Outcome check_duality() {
  Outcome o;
  for (const auto& orders : {std::vector<long>{8}, std::vector<long>{2, 4}}) {
    auto g = build_abelian(orders);
    auto t = abelian_character_table(g);
    auto res = enumerate_sup(g, &t);
    std::vector<SetPartition> dual_parts;
    for (const auto& th : res.theories) {
      if (!verify_definition(t, th.char_part, th.class_part).ok()) {
        fail(o, "an enumerated theory failed re-verification");
        return o;
      }
      auto d = dual_theory(t, th);
      if (!verify_definition(t, d.char_part, d.class_part).ok()) {
        fail(o, "a dual failed verification");
        return o;
      }
      if (!same_theory(dual_theory(t, d), th)) {
        fail(o, "double dual is not the identity");
        return o;
      }
      dual_parts.push_back(d.class_part);
    }
    std::sort(dual_parts.begin(), dual_parts.end());
    if (std::adjacent_find(dual_parts.begin(), dual_parts.end()) != dual_parts.end())
      fail(o, "dualizing collapsed two theories");
    if (dual_parts != res.class_partitions) fail(o, "duals do not exhaust the enumeration");
    if (!dual_bijection_check(t)) fail(o, "bijection check failed");
    if (!o.pass) return o;
  }
  o.detail = "both groups: dual set equals the enumeration, involution exact";
  return o;
}

// ---------------------------------------------------------------- check 5
// Product laws on {0} < {0,4} < {0,2,4,6} < Z8: the star size law and
// factoring round-trips over every factor pair on both subgroups,
// associativity across the chain, the wedge size law with recognized margins,
// wedge collapse to star on a degenerate chain, and factorization of every
// theory of Z8 with an observable reassembly at every stage.

std::vector<SuperTheory> theories_of(const CharacterTable& t) {
  std::vector<SuperTheory> out;
  for (CoarseningIterator it(t.group->classes, 0); !it.done(); it.advance()) {
    auto part = it.current();
    if (!superclass_admissible(*t.group, part)) continue;
    auto r = x_from_k(t, part);
    if (!r.ok()) throw std::logic_error("admissible partition failed attachment");
    out.push_back(*r.value);
  }
  return out;
}

Outcome check_product_laws() {
  Outcome o;
  auto t8 = abelian_character_table(build_abelian({8}));
  Workspace ws(t8);
  const std::vector<int> n = {0, 4};
  const std::vector<int> m = {0, 2, 4, 6};
  long stars = 0, wedges = 0, stages = 0;

  for (const auto& nset : {n, m}) {
    auto& sc = ws.sub(nset);
    auto& qc = ws.quot(nset);
    for (const auto& c : theories_of(sc.table))
      for (const auto& d : theories_of(qc.table)) {
        auto e = star_product(ws, nset, c, d);
        ++stars;
        if (e.size() != c.size() + d.size() - 1) {
          fail(o, "star size law violated");
          return o;
        }
        auto fo = factor_over(ws, e, nset);
        if (!fo.ok() || !same_theory(fo.factors->on_sub, c) ||
            !same_theory(fo.factors->on_quot, d)) {
          fail(o, "factoring does not invert the star");
          return o;
        }
        if (!same_theory(star_product(ws, nset, fo.factors->on_sub, fo.factors->on_quot), e)) {
          fail(o, "star of the recovered factors drifted");
          return o;
        }
      }
  }

  // associativity: both groupings along the chain agree
  {
    Workspace wm(ws.sub(m).table);
    Workspace wq(ws.quot(n).table);
    const std::vector<int> n_in_m = {0, 2};
    const std::vector<int> m_in_q = {0, 2};
    auto as = theories_of(wm.sub(n_in_m).table);
    auto bs_left = theories_of(wm.quot(n_in_m).table);
    auto as_outer = theories_of(ws.sub(n).table);
    auto bs_right = theories_of(wq.sub(m_in_q).table);
    auto cs_left = theories_of(ws.quot(m).table);
    auto cs_right = theories_of(wq.quot(m_in_q).table);
    if (as.size() != 1 || bs_left.size() != 1 || cs_left.size() != 1 || as_outer.size() != 1 ||
        bs_right.size() != 1 || cs_right.size() != 1) {
      fail(o, "stage pools are not singletons");
      return o;
    }
    auto lhs = star_product(ws, m, star_product(wm, n_in_m, as[0], bs_left[0]), cs_left[0]);
    auto rhs = star_product(ws, n, as_outer[0], star_product(wq, m_in_q, bs_right[0], cs_right[0]));
    if (!same_theory(lhs, rhs)) {
      fail(o, "star is not associative along the chain");
      return o;
    }
  }

  // wedge products: size law |E| = |C| + |D| - |overlap|, margins recovered
  {
    auto& scm = ws.sub(m);
    auto& qcn = ws.quot(n);
    std::vector<SuperTheory> cs, ds;
    for (const auto& c : theories_of(scm.table)) {
      int w = -1;
      if (detail::blocks_respect(c, {0, 2}, &w)) cs.push_back(c);
    }
    for (const auto& d : theories_of(qcn.table)) {
      int w = -1;
      if (detail::blocks_respect(d, {0, 2}, &w)) ds.push_back(d);
    }
    if (cs.empty() || ds.empty()) {
      fail(o, "no wedge-compatible factors");
      return o;
    }
    for (const auto& c : cs)
      for (const auto& d : ds) {
        auto below = detail::overlap_from_below(ws, n, m, c);
        auto above = detail::overlap_from_above(ws, n, m, d);
        if (!detail::same_theory_up_to_iso(below, above)) continue;
        auto e = wtp_product(ws, n, m, c, d);
        ++wedges;
        if (e.size() != c.size() + d.size() - above.size()) {
          fail(o, "wedge size law violated");
          return o;
        }
        if (!same_theory(restrict_deflate(ws, e, m).on_sub, c) ||
            !same_theory(restrict_deflate(ws, e, n).on_quot, d)) {
          fail(o, "wedge margins drifted");
          return o;
        }
        if (!wtp_recognize(ws, e, n, m)) {
          fail(o, "wedge not recognized");
          return o;
        }
      }
    if (wedges == 0) {
      fail(o, "no compatible wedge pair");
      return o;
    }
  }

  // collapsed chain: the wedge over (k, k) is exactly the star over k
  for (const auto& k : {n, m}) {
    auto& sck = ws.sub(k);
    auto& qck = ws.quot(k);
    for (const auto& c : theories_of(sck.table))
      for (const auto& d : theories_of(qck.table))
        if (!same_theory(wtp_product(ws, k, k, c, d), star_product(ws, k, c, d))) {
          fail(o, "degenerate wedge differs from the star");
          return o;
        }
  }

  // factorization of every theory: monotone chain, round-trip at every stage
  for (const auto& e : theories_of(t8)) {
    auto fc = unique_factorization(ws, e);
    if (fc.chain.front() != std::vector<int>{0} ||
        static_cast<int>(fc.chain.back().size()) != 8) {
      fail(o, "factorization chain endpoints are wrong");
      return o;
    }
    for (std::size_t i = 0; i + 1 < fc.chain.size(); ++i)
      if (fc.chain[i].size() >= fc.chain[i + 1].size() ||
          !std::includes(fc.chain[i + 1].begin(), fc.chain[i + 1].end(), fc.chain[i].begin(),
                         fc.chain[i].end())) {
        fail(o, "factorization chain is not strictly increasing");
        return o;
      }
    if (fc.factors.size() + 1 != fc.chain.size()) {
      fail(o, "factor count does not match the chain");
      return o;
    }
    for (const auto& stage : fc.chain) {
      if (stage.size() == 1 || static_cast<int>(stage.size()) == 8) continue;
      auto fo = factor_over(ws, e, stage);
      ++stages;
      if (!fo.ok() ||
          !same_theory(star_product(ws, stage, fo.factors->on_sub, fo.factors->on_quot), e)) {
        fail(o, "reassembly failed at a chain stage");
        return o;
      }
    }
    auto again = unique_factorization(ws, e);
    if (again.chain != fc.chain) {
      fail(o, "factorization is not deterministic");
      return o;
    }
  }

  std::ostringstream d;
  d << stars << " stars, " << wedges << " wedges, " << stages << " reassembled stages";
  o.detail = d.str();
  return o;
}

// ---------------------------------------------------------------- check 6
// Dual-product laws swept over the Z8 chain and the Z2xZ4 chain, including
// the degenerate single-subgroup chains, with zero violations.

Outcome check_dual_product_laws() {
  Outcome o;
  std::int64_t wedges = 0, theories = 0;
  auto run = [&](Workspace& ws, const std::vector<int>& n, const std::vector<int>& m) {
    auto rep = dual_product_laws(ws, n, m);
    wedges += rep.wedges_checked;
    theories += rep.theories_checked;
    if (!rep.violations.empty()) fail(o, rep.violations.front());
  };

  auto t8 = abelian_character_table(build_abelian({8}));
  Workspace w8(t8);
  run(w8, {0, 4}, {0, 2, 4, 6});
  run(w8, {0, 4}, {0, 4});
  run(w8, {0, 2, 4, 6}, {0, 2, 4, 6});

  auto t24 = abelian_character_table(build_abelian({2, 4}));
  Workspace w24(t24);
  run(w24, {0, 2}, {0, 1, 2, 3});
  run(w24, {0, 2}, {0, 2});
  run(w24, {0, 1, 2, 3}, {0, 1, 2, 3});

  if (o.pass) {
    std::ostringstream d;
    d << wedges << " wedges, " << theories << " theories, zero violations";
    o.detail = d.str();
  }
  return o;
}

// ---------------------------------------------------------------- check 7
// Constructions: the automorphism orbit theories of Z5 form the 3-element
// chain that the enumeration finds, and direct products of the factor
// theories of Z2xZ2 re-verify and appear in its enumeration.

Outcome check_constructions() {
  Outcome o;
  auto g5 = build_abelian({5});
  auto t5 = abelian_character_table(g5);

  // subgroups of Aut(Z5): trivial, inversion, full; as power sets and as
  // explicit permutation generators
  auto th_triv = galois_orbit_theory(t5, {1});
  auto th_inv = galois_orbit_theory(t5, {1, 4});
  auto th_full = galois_orbit_theory(t5, {1, 2, 3, 4});
  if (!same_theory(th_triv, orbit_theory(t5, {{0, 1, 2, 3, 4}})) ||
      !same_theory(th_inv, orbit_theory(t5, {{0, 4, 3, 2, 1}})) ||
      !same_theory(th_full, orbit_theory(t5, {{0, 2, 4, 1, 3}})))
    fail(o, "power orbits and permutation orbits differ");
  if (!same_theory(th_triv, minimal_theory(t5)) || !same_theory(th_full, maximal_theory(t5)))
    fail(o, "orbit extremes are not the lattice extremes");
  if (!(theory_leq(th_triv, th_inv) && theory_leq(th_inv, th_full)) ||
      same_theory(th_triv, th_inv) || same_theory(th_inv, th_full))
    fail(o, "orbit theories do not form a strict 3-chain");

  auto res5 = enumerate_sup(g5, &t5);
  std::vector<SetPartition> orbit_parts{th_triv.class_part, th_inv.class_part,
                                        th_full.class_part};
  std::sort(orbit_parts.begin(), orbit_parts.end());
  if (res5.class_partitions != orbit_parts)
    fail(o, "orbit chain does not match the enumeration of Z5");

  // direct products on Z2 x Z2
  auto ga = build_abelian({2});
  auto gb = build_abelian({2});
  auto ta = abelian_character_table(ga);
  auto tb = abelian_character_table(gb);
  auto as = theories_of(ta);
  auto bs = theories_of(tb);
  auto res22 = enumerate_sup(build_abelian({2, 2}));
  long products = 0;
  for (const auto& a : as)
    for (const auto& b : bs) {
      auto pr = direct_product_theory(ta, a, tb, b);
      ++products;
      if (!verify_definition(pr.table, pr.theory.char_part, pr.theory.class_part).ok()) {
        fail(o, "a direct product failed verification");
        return o;
      }
      if (std::find(res22.class_partitions.begin(), res22.class_partitions.end(),
                    pr.theory.class_part) == res22.class_partitions.end()) {
        fail(o, "a direct product is missing from the enumeration of Z2xZ2");
        return o;
      }
    }

  if (o.pass) {
    std::ostringstream d;
    d << "3-chain matches enumeration, " << products << " product(s) re-verified";
    o.detail = d.str();
  }
  return o;
}

// ---------------------------------------------------------------- gate
// Single-threaded enumeration over twelve classes pushes Bell(11) candidates
// through the integer filter.

Outcome check_enumeration_gate() {
  Outcome o;
  auto g = build_abelian({12});
  auto res = enumerate_sup(g);
  if (res.stats.candidates != 678570) fail(o, "candidate count is not Bell(11)");
  std::ostringstream d;
  d << res.stats.admissible << " admissible of " << res.stats.candidates;
  if (o.pass) o.detail = d.str();
  return o;
}

}  // namespace

int main() {
  struct Check {
    const char* name;
    Outcome (*run)();
    long budget_ms;  // <= 0 means no stated budget
  };
  const Check checks[] = {
      {"s6 join counterexample", check_s6_join, 60000},
      {"verifier agreement, abelian orders 1..8", check_verifier_agreement, 300000},
      {"cyclic enumeration counts", check_cyclic_counts, 0},
      {"duality on Z8 and Z2xZ4", check_duality, 60000},
      {"product laws on the Z8 chain", check_product_laws, 120000},
      {"dual-product laws on both chains", check_dual_product_laws, 120000},
      {"orbit and direct-product constructions", check_constructions, 10000},
      {"twelve-class enumeration gate", check_enumeration_gate, 300000},
  };

  int failures = 0;
  for (const auto& c : checks) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (o.pass && c.budget_ms > 0 && ms > c.budget_ms) {
      o.pass = false;
      o.detail += " [over budget of " + std::to_string(c.budget_ms) + " ms]";
    }
    if (!o.pass) ++failures;
    std::printf("%-42s %s (%lld ms)%s%s\n", c.name, o.pass ? "PASS" : "FAIL",
                static_cast<long long>(ms), o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  }
  if (failures) std::printf("%d check(s) failed\n", failures);
  return failures;
}
