#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "sct/products.hpp"

using namespace sct;

namespace {

Cyclotomic ci(long v) { return Cyclotomic::from_rational(1, Rat(v)); }

CharacterTable s3_table() {
  auto s3 = build_from_permutations({{1, 0, 2}, {1, 2, 0}}).group;
  return table_from_rows(s3, 6,
                         {{ci(1), ci(1), ci(1)}, {ci(1), ci(-1), ci(1)}, {ci(2), ci(0), ci(-1)}});
}

// every theory on an abelian group, by filtering pinned coarsenings of the
// (singleton) classes
std::vector<SuperTheory> all_theories(const CharacterTable& t) {
  std::vector<SuperTheory> out;
  for (CoarseningIterator it(t.group->classes, 0); !it.done(); it.advance()) {
    auto part = it.current();
    if (!superclass_admissible(*t.group, part)) continue;
    auto r = x_from_k(t, part);
    REQUIRE(r.ok());
    out.push_back(*r.value);
  }
  return out;
}

std::vector<std::vector<int>> subgroup_sets(const std::vector<Subgroup>& subs) {
  std::vector<std::vector<int>> out;
  for (const auto& s : subs) out.push_back(s.elements);
  return out;
}

}  // namespace

TEST_CASE("c-normal subgroups of the reference theories") {
  auto t8 = abelian_character_table(build_abelian({8}));
  auto expect8 = subgroup_sets(normal_subgroups(t8.group));
  REQUIRE(subgroup_sets(c_normal_subgroups(minimal_theory(t8))) == expect8);
  REQUIRE(subgroup_sets(c_normal_subgroups(maximal_theory(t8))) ==
          std::vector<std::vector<int>>{{0}, {0, 1, 2, 3, 4, 5, 6, 7}});
  auto n = subgroup_closure(t8.group, {4});
  REQUIRE(subgroup_sets(c_normal_subgroups(coarsest_theory_over(t8, n))) ==
          std::vector<std::vector<int>>{{0}, {0, 4}, {0, 1, 2, 3, 4, 5, 6, 7}});

  auto ts3 = s3_table();
  REQUIRE(subgroup_sets(c_normal_subgroups(minimal_theory(ts3))) ==
          subgroup_sets(normal_subgroups(ts3.group)));
  for (const auto& s : c_normal_subgroups(minimal_theory(ts3))) {
    REQUIRE(s.is_normal);
    REQUIRE(set_is_normal(*ts3.group, s.elements));
  }
  REQUIRE(c_normal_subgroups(maximal_theory(ts3)).size() == 2);
}

TEST_CASE("ambient invariance of subgroup theories") {
  auto ts3 = s3_table();
  Workspace ws(ts3);
  auto& a3 = ws.sub({0, 2, 5});
  // transpositions swap the two nontrivial rotations, so singletons break
  REQUIRE_FALSE(is_g_invariant(ts3.group, a3.sub, minimal_theory(a3.table)));
  REQUIRE(is_g_invariant(ts3.group, a3.sub, maximal_theory(a3.table)));

  auto t8 = abelian_character_table(build_abelian({8}));
  Workspace w8(t8);
  auto& half = w8.sub({0, 2, 4, 6});
  for (const auto& c : all_theories(half.table))
    REQUIRE(is_g_invariant(t8.group, half.sub, c));

  // a theory on an unrelated realization of the same order is rejected
  auto t4 = abelian_character_table(build_abelian({4}));
  REQUIRE_THROWS_AS(is_g_invariant(t8.group, half.sub, minimal_theory(t4)), std::invalid_argument);
  Subgroup flip;
  flip.parent = ts3.group;
  flip.elements = {0, 1};
  REQUIRE_THROWS_AS(is_g_invariant(ts3.group, flip, minimal_theory(t4)), std::invalid_argument);
}

TEST_CASE("workspace gates the character side on commutativity") {
  auto ts3 = s3_table();
  Workspace ws(ts3);
  REQUIRE_THROWS_AS(ws.sub({0, 1, 2, 3, 4, 5}), std::invalid_argument);
  REQUIRE_NOTHROW(ws.sub({0, 2, 5}));
  REQUIRE_NOTHROW(ws.quot({0, 2, 5}));
  REQUIRE_THROWS_AS(ws.sub({0, 1}), std::invalid_argument);  // not normal
}

TEST_CASE("star products hit the bounding theories") {
  auto t8 = abelian_character_table(build_abelian({8}));
  Workspace ws(t8);
  for (std::vector<int> nset : {std::vector<int>{0, 4}, std::vector<int>{0, 2, 4, 6}}) {
    auto& sc = ws.sub(nset);
    auto& qc = ws.quot(nset);
    REQUIRE(same_theory(star_product(ws, nset, maximal_theory(sc.table), maximal_theory(qc.table)),
                        coarsest_theory_over(t8, sc.sub)));
    REQUIRE(same_theory(star_product(ws, nset, minimal_theory(sc.table), minimal_theory(qc.table)),
                        finest_theory_over(t8, sc.sub)));
  }

  auto ts3 = s3_table();
  Workspace w3(ts3);
  auto& a3 = w3.sub({0, 2, 5});
  auto& q3 = w3.quot({0, 2, 5});
  REQUIRE(same_theory(star_product(w3, {0, 2, 5}, maximal_theory(a3.table), maximal_theory(q3.table)),
                      coarsest_theory_over(ts3, a3.sub)));
  // conjugacy classes of S3 inside A3 are singletons, so the minimal theory of
  // A3 is not invariant and the star is refused
  REQUIRE_THROWS_AS(
      star_product(w3, {0, 2, 5}, minimal_theory(a3.table), minimal_theory(q3.table)),
      std::invalid_argument);
}

TEST_CASE("star size law and factoring round-trips, exhaustively") {
  auto t8 = abelian_character_table(build_abelian({8}));
  Workspace ws(t8);
  for (std::vector<int> nset : {std::vector<int>{0, 4}, std::vector<int>{0, 2, 4, 6}}) {
    auto& sc = ws.sub(nset);
    auto& qc = ws.quot(nset);
    std::vector<SuperTheory> built;
    for (const auto& c : all_theories(sc.table))
      for (const auto& d : all_theories(qc.table)) {
        auto e = star_product(ws, nset, c, d);
        REQUIRE(e.size() == c.size() + d.size() - 1);
        auto fo = factor_over(ws, e, nset);
        REQUIRE(fo.ok());
        REQUIRE(same_theory(fo.factors->on_sub, c));
        REQUIRE(same_theory(fo.factors->on_quot, d));
        built.push_back(e);
      }
    // distinct factor pairs give distinct products
    for (std::size_t i = 0; i < built.size(); ++i)
      for (std::size_t j = i + 1; j < built.size(); ++j)
        REQUIRE_FALSE(same_theory(built[i], built[j]));
  }
}

TEST_CASE("factoring failures name the broken condition") {
  auto t8 = abelian_character_table(build_abelian({8}));
  Workspace ws(t8);
  auto fo = factor_over(ws, minimal_theory(t8), {0, 4});
  REQUIRE_FALSE(fo.ok());
  REQUIRE(fo.failure.find("cosets") != std::string::npos);
  REQUIRE(fo.witness_block >= 0);

  auto fo2 = factor_over(ws, maximal_theory(t8), {0, 4});
  REQUIRE_FALSE(fo2.ok());
  REQUIRE(fo2.failure.find("union of superclasses") != std::string::npos);
  REQUIRE(fo2.witness_block == 1);

  auto gal = galois_orbit_theory(t8, {1, 3});
  auto fo3 = factor_over(ws, gal, {0, 4});
  REQUIRE_FALSE(fo3.ok());
  REQUIRE(fo3.failure.find("cosets") != std::string::npos);

  // degenerate ends always factor
  REQUIRE(factor_over(ws, gal, {0}).ok());
  REQUIRE(factor_over(ws, gal, {0, 1, 2, 3, 4, 5, 6, 7}).ok());
}

TEST_CASE("restriction and deflation") {
  auto t8 = abelian_character_table(build_abelian({8}));
  Workspace ws(t8);
  auto n = subgroup_closure(t8.group, {2});

  auto rd = restrict_deflate(ws, coarsest_theory_over(t8, n), n.elements);
  REQUIRE(same_theory(rd.on_sub, maximal_theory(ws.sub(n.elements).table)));
  REQUIRE(same_theory(rd.on_quot, maximal_theory(ws.quot(n.elements).table)));

  // over the trivial subgroup the deflation is the theory itself
  auto gal = galois_orbit_theory(t8, {1, 3});
  auto rd1 = restrict_deflate(ws, gal, {0});
  REQUIRE(rd1.on_sub.size() == 1);
  REQUIRE(rd1.on_quot.class_part == gal.class_part);
  REQUIRE(rd1.on_quot.size() == gal.size());

  REQUIRE_THROWS_AS(restrict_deflate(ws, maximal_theory(t8), {0, 4}), std::invalid_argument);
}

TEST_CASE("interpolation and double-factoring containment") {
  auto t8 = abelian_character_table(build_abelian({8}));
  auto t22 = abelian_character_table(build_abelian({2, 2}));
  for (const auto* t : {&t8, &t22}) {
    Workspace ws(*t);
    std::vector<Subgroup> proper;
    for (const auto& s : normal_subgroups(t->group))
      if (static_cast<int>(s.elements.size()) > 1 &&
          static_cast<int>(s.elements.size()) < t->group->order)
        proper.push_back(s);
    for (const auto& e : all_theories(*t)) {
      std::vector<std::vector<int>> wins;
      for (const auto& s : proper) {
        const bool ok = factor_over(ws, e, s.elements).ok();
        const bool sandwich = theory_leq(finest_theory_over(*t, s), e) &&
                              theory_leq(e, coarsest_theory_over(*t, s));
        REQUIRE(ok == sandwich);
        if (ok) wins.push_back(s.elements);
      }
      for (std::size_t i = 0; i < wins.size(); ++i)
        for (std::size_t j = i + 1; j < wins.size(); ++j) {
          const bool ij = std::includes(wins[j].begin(), wins[j].end(), wins[i].begin(), wins[i].end());
          const bool ji = std::includes(wins[i].begin(), wins[i].end(), wins[j].begin(), wins[j].end());
          REQUIRE((ij || ji));
        }
    }
  }
}

TEST_CASE("greedy factorization chains") {
  auto t8 = abelian_character_table(build_abelian({8}));
  Workspace ws(t8);

  // singleton superclasses outside any subgroup block factoring
  auto fmin = unique_factorization(ws, minimal_theory(t8));
  REQUIRE(fmin.chain == std::vector<std::vector<int>>{{0}, {0, 1, 2, 3, 4, 5, 6, 7}});
  REQUIRE(fmin.factors.size() == 1);
  REQUIRE(fmin.indecomposable[0]);

  // the iterated star of minimal factors walks the whole subgroup chain
  auto chained = x_from_k(t8, SetPartition::from_blocks(8, {{0}, {4}, {2, 6}, {1, 3, 5, 7}}));
  REQUIRE(chained.ok());
  auto fm = unique_factorization(ws, *chained.value);
  REQUIRE(fm.chain == std::vector<std::vector<int>>{
                          {0}, {0, 4}, {0, 2, 4, 6}, {0, 1, 2, 3, 4, 5, 6, 7}});
  REQUIRE(fm.factors.size() == 3);
  for (const auto& f : fm.factors) REQUIRE(f.size() == 2);
  REQUIRE(std::all_of(fm.indecomposable.begin(), fm.indecomposable.end(), [](bool b) { return b; }));

  auto fM = unique_factorization(ws, maximal_theory(t8));
  REQUIRE(fM.chain == std::vector<std::vector<int>>{{0}, {0, 1, 2, 3, 4, 5, 6, 7}});
  REQUIRE(fM.factors.size() == 1);
  REQUIRE(fM.factors[0].size() == 2);
  REQUIRE(fM.indecomposable[0]);

  auto gal = galois_orbit_theory(t8, {1, 3});
  auto fg = unique_factorization(ws, gal);
  REQUIRE(fg.chain.size() == 2);
  REQUIRE(fg.factors[0].size() == 5);

  auto t4 = abelian_character_table(build_abelian({4}));
  Workspace w4(t4);
  auto n4 = subgroup_closure(t4.group, {2});
  auto f4 = unique_factorization(w4, coarsest_theory_over(t4, n4));
  REQUIRE(f4.chain == std::vector<std::vector<int>>{{0}, {0, 2}, {0, 1, 2, 3}});
  REQUIRE(f4.factors.size() == 2);

  // determinism across repeated runs
  auto again = unique_factorization(ws, *chained.value);
  REQUIRE(again.chain == fm.chain);
  for (std::size_t i = 0; i < again.factors.size(); ++i) {
    REQUIRE(again.factors[i].class_part == fm.factors[i].class_part);
    REQUIRE(again.factors[i].char_part == fm.factors[i].char_part);
  }

  // every theory decomposes cleanly: strictly increasing normal chain
  for (const auto& e : all_theories(t8)) {
    auto fc = unique_factorization(ws, e);
    REQUIRE(fc.chain.front() == std::vector<int>{0});
    REQUIRE(static_cast<int>(fc.chain.back().size()) == t8.group->order);
    for (std::size_t i = 0; i + 1 < fc.chain.size(); ++i) {
      REQUIRE(fc.chain[i].size() < fc.chain[i + 1].size());
      REQUIRE(std::includes(fc.chain[i + 1].begin(), fc.chain[i + 1].end(), fc.chain[i].begin(),
                            fc.chain[i].end()));
      REQUIRE(set_is_normal(*t8.group, fc.chain[i + 1]));
    }
    REQUIRE(std::all_of(fc.indecomposable.begin(), fc.indecomposable.end(),
                        [](bool b) { return b; }));
  }

  auto t1 = abelian_character_table(build_abelian({}));
  Workspace w1(t1);
  REQUIRE_THROWS_AS(unique_factorization(w1, minimal_theory(t1)), std::invalid_argument);
}

TEST_CASE("star is associative along subgroup chains") {
  // {0} < {0,4} < {0,2,4,6} < Z8, both groupings built through different towers
  auto t8 = abelian_character_table(build_abelian({8}));
  Workspace ws(t8);
  const std::vector<int> m = {0, 2, 4, 6};
  const std::vector<int> n = {0, 4};

  Workspace wm(ws.sub(m).table);
  Workspace wq(ws.quot(n).table);
  const std::vector<int> n_in_m = {0, 2};
  const std::vector<int> m_in_q = {0, 2};

  auto left_inner = star_product(wm, n_in_m, minimal_theory(wm.sub(n_in_m).table),
                                 minimal_theory(wm.quot(n_in_m).table));
  auto lhs = star_product(ws, m, left_inner, minimal_theory(ws.quot(m).table));
  auto right_inner = star_product(wq, m_in_q, minimal_theory(wq.sub(m_in_q).table),
                                  minimal_theory(wq.quot(m_in_q).table));
  auto rhs = star_product(ws, n, minimal_theory(ws.sub(n).table), right_inner);
  REQUIRE(same_theory(lhs, rhs));
  REQUIRE(lhs.class_part == SetPartition::from_blocks(8, {{0}, {4}, {2, 6}, {1, 3, 5, 7}}));

  // {0} < {0,4,8} < {0,2,...,10} < Z12 with both theories of the order-3 stage
  auto t12 = abelian_character_table(build_abelian({12}));
  Workspace w12(t12);
  const std::vector<int> m12 = {0, 2, 4, 6, 8, 10};
  const std::vector<int> n12 = {0, 4, 8};
  Workspace wm12(w12.sub(m12).table);
  Workspace wq12(w12.quot(n12).table);
  const std::vector<int> n_in_m12 = {0, 2, 4};
  const std::vector<int> m_in_q12 = {0, 2};

  auto sub_pool_left = all_theories(wm12.sub(n_in_m12).table);
  auto sub_pool_right = all_theories(w12.sub(n12).table);
  REQUIRE(sub_pool_left.size() == 2);
  REQUIRE(sub_pool_right.size() == 2);
  auto by_size = [](std::vector<SuperTheory>& v) {
    std::sort(v.begin(), v.end(),
              [](const SuperTheory& a, const SuperTheory& b) { return a.size() < b.size(); });
  };
  by_size(sub_pool_left);
  by_size(sub_pool_right);
  for (std::size_t i = 0; i < sub_pool_left.size(); ++i) {
    auto left_in = star_product(wm12, n_in_m12, sub_pool_left[i],
                                minimal_theory(wm12.quot(n_in_m12).table));
    auto lhs12 = star_product(w12, m12, left_in, minimal_theory(w12.quot(m12).table));
    auto right_in = star_product(wq12, m_in_q12, minimal_theory(wq12.sub(m_in_q12).table),
                                 minimal_theory(wq12.quot(m_in_q12).table));
    auto rhs12 = star_product(w12, n12, sub_pool_right[i], right_in);
    REQUIRE(same_theory(lhs12, rhs12));
  }
}

TEST_CASE("wedge products along the eight-chain") {
  auto t8 = abelian_character_table(build_abelian({8}));
  Workspace ws(t8);
  const std::vector<int> n = {0, 4};
  const std::vector<int> m = {0, 2, 4, 6};
  auto& scm = ws.sub(m);
  auto& qcn = ws.quot(n);

  // factor pools: C must absorb N, D must absorb M/N
  std::vector<SuperTheory> cs, ds;
  for (const auto& c : all_theories(scm.table)) {
    int w = -1;
    if (detail::blocks_respect(c, {0, 2}, &w)) cs.push_back(c);
  }
  for (const auto& d : all_theories(qcn.table)) {
    int w = -1;
    if (detail::blocks_respect(d, {0, 2}, &w)) ds.push_back(d);
  }
  REQUIRE(cs.size() == 2);
  REQUIRE(ds.size() == 2);

  std::vector<SuperTheory> sup8 = all_theories(t8);
  for (const auto& c : cs)
    for (const auto& d : ds) {
      auto e = wtp_product(ws, n, m, c, d);
      REQUIRE(e.size() == c.size() + d.size() - 2);
      REQUIRE(same_theory(restrict_deflate(ws, e, m).on_sub, c));
      REQUIRE(same_theory(restrict_deflate(ws, e, n).on_quot, d));
      REQUIRE(wtp_recognize(ws, e, n, m));

      // uniqueness: no other theory recognizes with the same margins
      int hits = 0;
      for (const auto& f : sup8) {
        if (!wtp_recognize(ws, f, n, m)) continue;
        if (same_theory(restrict_deflate(ws, f, m).on_sub, c) &&
            same_theory(restrict_deflate(ws, f, n).on_quot, d)) {
          ++hits;
          REQUIRE(same_theory(f, e));
        }
      }
      REQUIRE(hits == 1);
    }

  // collapsed chain: the wedge is exactly the star
  for (std::vector<int> k : {n, m}) {
    auto& sck = ws.sub(k);
    auto& qck = ws.quot(k);
    for (const auto& c : all_theories(sck.table))
      for (const auto& d : all_theories(qck.table))
        REQUIRE(same_theory(wtp_product(ws, k, k, c, d), star_product(ws, k, c, d)));
  }

  // full-group upper end: the wedge reproduces the inner theory
  const std::vector<int> all = {0, 1, 2, 3, 4, 5, 6, 7};
  auto& scg = ws.sub(all);
  for (const auto& c : all_theories(scg.table)) {
    int w = -1;
    if (!detail::blocks_respect(c, {0, 4}, &w)) continue;
    for (const auto& d : all_theories(qcn.table)) {
      bool compatible = detail::same_theory_up_to_iso(
          detail::overlap_from_below(ws, n, all, c), detail::overlap_from_above(ws, n, all, d));
      if (!compatible) {
        REQUIRE_THROWS_AS(wtp_product(ws, n, all, c, d), std::invalid_argument);
        continue;
      }
      auto e = wtp_product(ws, n, all, c, d);
      REQUIRE(e.class_part == c.class_part);
      REQUIRE(e.size() == c.size());
    }
  }
}

TEST_CASE("wedge precondition failures are named") {
  auto t8 = abelian_character_table(build_abelian({8}));
  Workspace ws(t8);
  const std::vector<int> n = {0, 4};
  const std::vector<int> m = {0, 2, 4, 6};
  auto& scm = ws.sub(m);
  auto& qcn = ws.quot(n);

  // N not C-normal: the coarse theory on M lumps 4 with 2 and 6
  REQUIRE_THROWS_WITH(
      wtp_product(ws, n, m, maximal_theory(scm.table), minimal_theory(qcn.table)),
      Catch::Matchers::ContainsSubstring("not a union of first-factor superclasses"));
  // M/N not D-normal
  REQUIRE_THROWS_WITH(
      wtp_product(ws, n, m, minimal_theory(scm.table), maximal_theory(qcn.table)),
      Catch::Matchers::ContainsSubstring("not a union of second-factor superclasses"));
  // N not inside M
  REQUIRE_THROWS_AS(wtp_recognize(ws, minimal_theory(t8), m, n), std::invalid_argument);

  // incompatible overlap at the full-group end
  const std::vector<int> all = {0, 1, 2, 3, 4, 5, 6, 7};
  auto& scg = ws.sub(all);
  SuperTheory c = minimal_theory(scg.table);
  auto d_pool = all_theories(qcn.table);
  auto coarse_d = std::find_if(d_pool.begin(), d_pool.end(),
                               [](const SuperTheory& d) { return d.size() == 2; });
  REQUIRE(coarse_d != d_pool.end());
  REQUIRE_THROWS_WITH(wtp_product(ws, n, all, c, *coarse_d),
                      Catch::Matchers::ContainsSubstring("overlap"));
}

TEST_CASE("wedge recognition degenerates to factoring") {
  auto t8 = abelian_character_table(build_abelian({8}));
  Workspace ws(t8);
  std::vector<std::vector<int>> subs;
  for (const auto& s : normal_subgroups(t8.group)) subs.push_back(s.elements);
  for (const auto& e : all_theories(t8))
    for (const auto& s : subs)
      REQUIRE(wtp_recognize(ws, e, s, s) == factor_over(ws, e, s).ok());
  REQUIRE_FALSE(wtp_recognize(ws, minimal_theory(t8), {0, 4}, {0, 2, 4, 6}));
  auto gal = galois_orbit_theory(t8, {1, 3});
  REQUIRE_FALSE(wtp_recognize(ws, gal, {0, 4}, {0, 2, 4, 6}));
}
