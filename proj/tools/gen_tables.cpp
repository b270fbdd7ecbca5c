// Writes the bundled character tables under data/.  The symmetric-group
// tables come from the Murnaghan-Nakayama rule; the two order-8 tables are
// stated directly.  Every table passes through table_from_rows, so the same
// validation that guards user input guards these files.
//
// All four groups here have rational integer character values, so the files
// declare conductor 1 and the reader embeds as needed.

#include <sct/io.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

using namespace sct;

namespace {

using Part = std::vector<int>;

// Partitions of n in descending lexicographic order, so the one-row
// partition (the trivial character) comes first and the all-ones partition
// (the sign character) comes last.
std::vector<Part> partitions_of(int n) {
  std::vector<Part> out;
  Part cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Murnaghan-Nakayama recursion on beta numbers.  Removing a border strip of
// length r is the same as lowering one beta number by r while keeping the
// set distinct; the crossing count gives the sign.
long long mn_value(const Part& lambda, const Part& rho,
                   std::map<std::pair<Part, Part>, long long>& memo) {
  if (rho.empty()) return 1;  // lambda is empty too; sums always match
  auto key = std::make_pair(lambda, rho);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  const int r = rho[0];
  const Part rest(rho.begin() + 1, rho.end());
  const int rows = static_cast<int>(lambda.size());
  std::vector<int> beta(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i)
    beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (rows - 1 - i);

  long long total = 0;
  for (int i = 0; i < rows; ++i) {
    const int nb = beta[static_cast<std::size_t>(i)] - r;
    if (nb < 0) continue;
    if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int height = 0;
    for (int b : beta)
      if (b > nb && b < beta[static_cast<std::size_t>(i)]) ++height;
    auto nbeta = beta;
    nbeta[static_cast<std::size_t>(i)] = nb;
    std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
    Part mu(static_cast<std::size_t>(rows));
    for (int j = 0; j < rows; ++j)
      mu[static_cast<std::size_t>(j)] = nbeta[static_cast<std::size_t>(j)] - (rows - 1 - j);
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    const long long sub = mn_value(mu, rest, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

Cyclotomic integer_value(long long v) { return Cyclotomic::from_rational(1, Rat(v)); }

Json perm_group_json(int degree, const std::vector<std::vector<int>>& gens) {
  Json jgens = Json::array();
  for (const auto& g : gens) jgens.push_back(g);
  return Json{{"kind", "perm"}, {"degree", degree}, {"generators", jgens}};
}

Json symmetric_table_json(int n, const std::vector<std::vector<int>>& gens) {
  auto pc = build_from_permutations(gens);
  const auto& g = pc.group;
  std::vector<Part> types;
  for (int k = 0; k < g->num_classes(); ++k)
    types.push_back(cycle_type(pc.perms[static_cast<std::size_t>(g->class_reps[static_cast<std::size_t>(k)])]));

  std::map<std::pair<Part, Part>, long long> memo;
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& lambda : partitions_of(n)) {
    std::vector<Cyclotomic> row;
    for (const auto& rho : types) row.push_back(integer_value(mn_value(lambda, rho, memo)));
    rows.push_back(std::move(row));
  }

  auto t = table_from_rows(g, 1, rows);
  Json j = table_to_json(t);
  j["group"] = perm_group_json(n, gens);
  return j;
}

// D4 and Q8 share a character table: four linear characters lifted from the
// central quotient (Klein four) plus one of degree two.  Classes are located
// by size rather than by index so the layout of the closure does not matter.
Json order8_table_json(const std::vector<std::vector<int>>& gens) {
  auto pc = build_from_permutations(gens);
  const auto& g = pc.group;
  if (g->order != 8 || g->num_classes() != 5)
    throw std::logic_error("generators do not give a non-abelian group of order 8");

  int central = -1;
  std::vector<int> twos;
  for (int k = 0; k < g->num_classes(); ++k) {
    if (g->class_sizes[static_cast<std::size_t>(k)] == 1 && k != g->class_of[0]) central = k;
    if (g->class_sizes[static_cast<std::size_t>(k)] == 2) twos.push_back(k);
  }
  if (central < 0 || twos.size() != 3) throw std::logic_error("unexpected class structure");

  const int c = g->num_classes();
  auto row_with = [&](long long at_id, long long at_z, long long s0, long long s1, long long s2) {
    std::vector<Cyclotomic> row(static_cast<std::size_t>(c), integer_value(0));
    row[static_cast<std::size_t>(g->class_of[0])] = integer_value(at_id);
    row[static_cast<std::size_t>(central)] = integer_value(at_z);
    row[static_cast<std::size_t>(twos[0])] = integer_value(s0);
    row[static_cast<std::size_t>(twos[1])] = integer_value(s1);
    row[static_cast<std::size_t>(twos[2])] = integer_value(s2);
    return row;
  };
  std::vector<std::vector<Cyclotomic>> rows{
      row_with(1, 1, 1, 1, 1),   row_with(1, 1, 1, -1, -1), row_with(1, 1, -1, 1, -1),
      row_with(1, 1, -1, -1, 1), row_with(2, -2, 0, 0, 0),
  };

  auto t = table_from_rows(g, 1, rows);
  Json j = table_to_json(t);
  j["group"] = perm_group_json(static_cast<int>(pc.perms[0].size()), gens);
  return j;
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << j.dump() << '\n';
  std::cout << path << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data";
  try {
    write_file(dir + "/s3.json", symmetric_table_json(3, {{1, 0, 2}, {1, 2, 0}}));
    write_file(dir + "/s6.json",
               symmetric_table_json(6, {{1, 0, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 0}}));
    write_file(dir + "/d4.json", order8_table_json({{1, 2, 3, 0}, {2, 1, 0, 3}}));
    write_file(dir + "/q8.json",
               order8_table_json({{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}}));
  } catch (const std::exception& e) {
    std::cerr << "gen_tables: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
