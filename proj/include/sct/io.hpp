#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sct/products.hpp"

// JSON forms for the artifacts the command line reads and writes.  Everything
// is exact: rationals travel as "p/q" strings, cyclotomic values as reduced
// power-basis coordinates, and nlohmann's object keys sort themselves, so a
// value re-read and re-emitted is byte-identical.

namespace sct {

using Json = nlohmann::json;

inline std::string rat_to_string(const Rat& r) { return r.str(); }

inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (char ch : s)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
      throw std::invalid_argument("malformed rational: " + s);
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

inline Json cyc_to_json(const Cyclotomic& z) {
  Json coeffs = Json::array();
  for (const auto& r : z.coeffs()) coeffs.push_back(rat_to_string(r));
  return Json{{"conductor", z.conductor()}, {"coeffs", std::move(coeffs)}};
}

inline Cyclotomic cyc_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
    throw std::invalid_argument("cyclotomic value needs a conductor and coefficients");
  const long m = j.at("conductor").get<long>();
  if (m <= 0) throw std::invalid_argument("conductor must be positive");
  Cyclotomic z = Cyclotomic::zero(m);
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || coeffs.size() != z.coeffs().size())
    throw std::invalid_argument("coefficient list does not match the power basis");
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rat r = rat_from_string(coeffs[k].get<std::string>());
    if (r != 0) z += Cyclotomic::root_of_unity(m, static_cast<long>(k)).scaled(r);
  }
  return z;
}

inline Json group_to_json(const GroupPtr& g) {
  if (!g->cyclic_orders.empty() || g->order == 1) {
    Json orders = Json::array();
    for (long o : g->cyclic_orders) orders.push_back(o);
    if (g->order == 1 && orders.empty()) orders.push_back(1);
    return Json{{"kind", "abelian"}, {"orders", std::move(orders)}};
  }
  Json table = Json::array();
  for (int a = 0; a < g->order; ++a) {
    Json row = Json::array();
    for (int b = 0; b < g->order; ++b) row.push_back(g->at(a, b));
    table.push_back(std::move(row));
  }
  return Json{{"kind", "cayley"}, {"table", std::move(table)}};
}

inline GroupPtr group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("group description needs a kind");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "abelian") {
    auto orders = j.at("orders").get<std::vector<long>>();
    return build_abelian(orders);
  }
  if (kind == "cayley") {
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    return build_from_cayley(table);
  }
  if (kind == "perm") {
    auto gens = j.at("generators").get<std::vector<std::vector<int>>>();
    if (j.contains("degree"))
      for (const auto& p : gens)
        if (static_cast<int>(p.size()) != j.at("degree").get<int>())
          throw std::invalid_argument("generator degree does not match the declared degree");
    return build_from_permutations(gens).group;
  }
  if (kind == "dual") return group_from_json(j.at("of"));  // index reuse: same labels
  throw std::invalid_argument("unknown group kind: " + kind);
}

inline Json partition_to_json(const SetPartition& p) {
  Json blocks = Json::array();
  for (const auto& blk : p.blocks()) blocks.push_back(blk);
  return blocks;
}

inline SetPartition partition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be a list of blocks");
  auto blocks = j.get<std::vector<std::vector<int>>>();
  int n = 0;
  for (const auto& blk : blocks) n += static_cast<int>(blk.size());
  return SetPartition::from_blocks(n, blocks);
}

inline Json table_to_json(const CharacterTable& t) {
  Json degrees = Json::array();
  for (int i = 0; i < t.num_chars(); ++i)
    degrees.push_back(static_cast<std::int64_t>(t.degree(i)));
  Json entries = Json::array();
  for (int i = 0; i < t.num_chars(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < t.group->num_classes(); ++k) row.push_back(cyc_to_json(t.at(i, k)));
    entries.push_back(std::move(row));
  }
  Json class_sizes = Json::array();
  for (long s : t.group->class_sizes) class_sizes.push_back(s);
  return Json{{"group", group_to_json(t.group)},
              {"conductor", t.conductor},
              {"degrees", std::move(degrees)},
              {"entries", std::move(entries)},
              {"class_sizes", std::move(class_sizes)}};
}

inline CharacterTable table_from_json(const Json& j) {
  auto g = group_from_json(j.at("group"));
  const long m = j.at("conductor").get<long>();
  const auto& entries = j.at("entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != g->num_classes())
    throw std::invalid_argument("entry rows do not match the class count");
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& jrow : entries) {
    std::vector<Cyclotomic> row;
    for (const auto& cell : jrow) {
      auto z = cyc_from_json(cell);
      if (m % z.conductor() != 0)
        throw std::invalid_argument("table entry does not embed in the declared conductor");
      row.push_back(std::move(z));
    }
    rows.push_back(std::move(row));
  }
  auto t = table_from_rows(g, m, rows);  // full consistency check happens here
  if (j.contains("degrees")) {
    const auto& degrees = j.at("degrees");
    if (static_cast<int>(degrees.size()) != t.num_chars())
      throw std::invalid_argument("degree list does not match the character count");
    for (int i = 0; i < t.num_chars(); ++i)
      if (Int(degrees[static_cast<std::size_t>(i)].get<std::int64_t>()) != t.degree(i))
        throw std::invalid_argument("declared degree disagrees with the table");
  }
  if (j.contains("class_sizes")) {
    auto sizes = j.at("class_sizes").get<std::vector<long>>();
    if (sizes != t.group->class_sizes)
      throw std::invalid_argument("declared class sizes disagree with the group");
  }
  return t;
}

inline Json theory_to_json(const SuperTheory& e) {
  return Json{{"group", group_to_json(e.group)},
              {"char_part", partition_to_json(e.char_part)},
              {"class_part", partition_to_json(e.class_part)}};
}

// Partitions of a theory file, checked only for shape; verification against a
// table is the caller's move (and its rejection is data, not an exception).
struct TheoryParts {
  SetPartition char_part;
  SetPartition class_part;
};

inline TheoryParts theory_parts_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("char_part") || !j.contains("class_part"))
    throw std::invalid_argument("theory needs char_part and class_part");
  return TheoryParts{partition_from_json(j.at("char_part")),
                     partition_from_json(j.at("class_part"))};
}

inline Json rejection_to_json(const Rejection& r) {
  const char* kind = r.kind == RejectKind::size_mismatch ? "size_mismatch"
                     : r.kind == RejectKind::class_split ? "class_split"
                                                         : "not_constant";
  return Json{{"error", kind},
              {"message", r.message},
              {"witness",
               Json{{"x_block", r.x_block}, {"k_block", r.k_block}, {"g", r.g}, {"h", r.h}}}};
}

inline Json factorization_to_json(const FactorizationChain& f) {
  Json chain = Json::array();
  for (const auto& level : f.chain) chain.push_back(level);
  Json factors = Json::array();
  for (const auto& e : f.factors) factors.push_back(theory_to_json(e));
  return Json{{"chain", std::move(chain)}, {"factors", std::move(factors)}};
}

}  // namespace sct
