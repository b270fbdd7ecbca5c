// Command-line surface.  Exit codes: 0 on success (JSON on stdout, DOT for
// lattice), 1 when the mathematics rejects the input (a structured report
// with the violated condition and a witness), 2 for anything malformed.
//
// Group specs: Z8 or Z2xZ4 for abelian groups, cayley:<path> or perm:<path>
// for files.  A perm/cayley file may be a bare group object or any JSON with
// a "group" field (so a table file works as a group spec).  Theory files name
// their group either as such an object or as a spec string.

#include <CLI11.hpp>

#include <sct/duality.hpp>
#include <sct/io.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace sct;

namespace {

struct MalformedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical rejection: the report is the command's output.
struct MathReject : std::runtime_error {
  Json report;
  explicit MathReject(Json r) : std::runtime_error(r.dump()), report(std::move(r)) {}
};

[[noreturn]] void reject_with(const Rejection& r, const std::string& input = "") {
  Json j = rejection_to_json(r);
  if (!input.empty()) j["input"] = input;
  throw MathReject(std::move(j));
}

[[noreturn]] void reject_message(const std::string& condition, const std::string& message) {
  throw MathReject(Json{{"error", condition}, {"message", message}});
}

Json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw MalformedInput("cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const std::exception& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

GroupPtr parse_group_spec(const std::string& spec) {
  auto from_file = [](const std::string& path, const std::string& kind) {
    Json j = read_json(path);
    if (j.is_object() && j.contains("group")) j = j.at("group");
    if (!j.is_object() || !j.contains("kind") || j.at("kind").get<std::string>() != kind)
      throw MalformedInput(path + " does not describe a " + kind + " group");
    return group_from_json(j);
  };
  if (spec.rfind("cayley:", 0) == 0) return from_file(spec.substr(7), "cayley");
  if (spec.rfind("perm:", 0) == 0) return from_file(spec.substr(5), "perm");

  std::vector<long> dims;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    if (spec[pos] != 'Z' && spec[pos] != 'z')
      throw MalformedInput("bad group spec: " + spec);
    std::size_t end = ++pos;
    while (end < spec.size() && std::isdigit(static_cast<unsigned char>(spec[end]))) ++end;
    if (end == pos) throw MalformedInput("bad group spec: " + spec);
    dims.push_back(std::stol(spec.substr(pos, end - pos)));
    if (dims.back() < 1) throw MalformedInput("bad group spec: " + spec);
    pos = end;
    if (pos < spec.size()) {
      if (spec[pos] != 'x' && spec[pos] != 'X')
        throw MalformedInput("bad group spec: " + spec);
      ++pos;
      if (pos == spec.size()) throw MalformedInput("bad group spec: " + spec);
    }
  }
  if (dims.empty()) throw MalformedInput("bad group spec: " + spec);
  return build_abelian(dims);
}

std::vector<int> parse_elements(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw MalformedInput("bad element list: " + s);
    }
  }
  if (out.empty()) throw MalformedInput("empty element list");
  return out;
}

bool same_structure(const FiniteGroup& a, const FiniteGroup& b) {
  return a.order == b.order && a.mul == b.mul;
}

// Group spec string or table path resolved into a working context.  Tables
// come from --table files or are generated for abelian groups; the group
// field stamped into outputs stays as the user wrote it when possible.
struct Context {
  GroupPtr group;
  std::optional<CharacterTable> table;
  Json group_field;
};

Context make_context(const std::string& group_spec, const std::string& table_path,
                     bool need_table) {
  if (!table_path.empty()) {
    Json j = read_json(table_path);
    auto t = table_from_json(j);
    if (!group_spec.empty() && !same_structure(*parse_group_spec(group_spec), *t.group))
      throw MalformedInput("--group does not match the group of " + table_path);
    Json gf = j.at("group");
    auto g = t.group;
    return Context{g, std::move(t), std::move(gf)};
  }
  if (group_spec.empty()) throw MalformedInput("need --group or --table");
  auto g = parse_group_spec(group_spec);
  Context ctx{g, std::nullopt, Json(group_spec)};
  if (g->abelian || g->order == 1)
    ctx.table = abelian_character_table(g);
  else if (need_table)
    throw MalformedInput("this command needs a character table; pass --table");
  return ctx;
}

struct LoadedTheory {
  TheoryParts parts;
  GroupPtr group;
};

LoadedTheory load_theory_file(const std::string& path) {
  Json j = read_json(path);
  TheoryParts parts = theory_parts_from_json(j);
  if (!j.contains("group")) throw MalformedInput(path + ": theory has no group field");
  const Json& gf = j.at("group");
  GroupPtr g = gf.is_string() ? parse_group_spec(gf.get<std::string>()) : group_from_json(gf);
  return LoadedTheory{std::move(parts), std::move(g)};
}

SetPartition load_partition_file(const std::string& path, int ground) {
  Json j = read_json(path);
  if (j.is_object() && j.contains("class_part")) j = j.at("class_part");
  auto p = partition_from_json(j);
  if (p.size() != ground)
    throw MalformedInput(path + ": partition covers " + std::to_string(p.size()) +
                         " elements, the group has " + std::to_string(ground));
  return p;
}

Json theory_json_with_group(const SuperTheory& e, const Json& group_field) {
  Json j = theory_to_json(e);
  j["group"] = group_field;
  return j;
}

// Binds a theory file to a specific realization (the ambient group, or a
// subgroup/quotient built by a workspace) and verifies it there.
SuperTheory bind_theory(const LoadedTheory& lt, const CharacterTable& t, const std::string& path) {
  if (!same_structure(*lt.group, *t.group))
    throw MalformedInput(path + ": theory group does not match the expected group");
  auto res = verify_definition(t, lt.parts.char_part, lt.parts.class_part);
  if (!res.ok()) reject_with(*res.rejection, path);
  return std::move(*res.value);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw MalformedInput("cannot write " + out_path);
  f << text;
}

// Class-side prechecks, reported as rejections rather than thrown, so the
// command line can show a witness for hand-written partitions.
void check_class_side(const FiniteGroup& g, const SetPartition& K, const std::string& input) {
  const auto idb = K.block(K.block_of(0));
  if (idb.size() != 1) {
    Rejection r{RejectKind::class_split, "the identity must form a singleton block",
                -1, K.block_of(0), 0, idb[0] == 0 ? idb[1] : idb[0]};
    reject_with(r, input);
  }
  for (const auto& cls : g.classes.blocks()) {
    const int home = K.block_of(cls[0]);
    for (int e : cls)
      if (K.block_of(e) != home) {
        Rejection r{RejectKind::class_split,
                    "conjugate elements fall into different blocks", -1, home, cls[0], e};
        reject_with(r, input);
      }
  }
}

// Replays the admissibility decision keeping the failing triple: the products
// of blocks a and b must have constant class-sum coefficients on each block.
Rejection class_constancy_witness(const FiniteGroup& g, const SetPartition& K) {
  const int c = g.num_classes();
  std::vector<int> block_of_class(static_cast<std::size_t>(c));
  std::vector<std::vector<int>> class_blocks(static_cast<std::size_t>(K.block_count()));
  for (int k = 0; k < c; ++k) {
    const int b = K.block_of(g.class_reps[static_cast<std::size_t>(k)]);
    block_of_class[static_cast<std::size_t>(k)] = b;
    class_blocks[static_cast<std::size_t>(b)].push_back(k);
  }
  const auto sc = structure_constant_table(g);
  std::vector<long> coef(static_cast<std::size_t>(c));
  for (std::size_t a = 0; a < class_blocks.size(); ++a)
    for (std::size_t b = a; b < class_blocks.size(); ++b) {
      std::fill(coef.begin(), coef.end(), 0);
      for (int i : class_blocks[a])
        for (int j : class_blocks[b])
          for (int k = 0; k < c; ++k) coef[static_cast<std::size_t>(k)] += sc.at(i, j, k);
      for (int k = 0; k < c; ++k) {
        const int head = class_blocks[static_cast<std::size_t>(
            block_of_class[static_cast<std::size_t>(k)])][0];
        if (coef[static_cast<std::size_t>(k)] != coef[static_cast<std::size_t>(head)])
          return Rejection{RejectKind::not_constant,
                           "the product of blocks " + std::to_string(a) + " and " +
                               std::to_string(b) + " is not constant on block " +
                               std::to_string(block_of_class[static_cast<std::size_t>(k)]),
                           -1, block_of_class[static_cast<std::size_t>(k)],
                           g.class_reps[static_cast<std::size_t>(k)],
                           g.class_reps[static_cast<std::size_t>(head)]};
      }
    }
  throw std::logic_error("admissibility replay found no witness");
}

long long cap_from(const CLI::Option* cap_opt, long long cap_value) {
  if (cap_opt->count() > 0) return cap_value;
  if (const char* env = std::getenv("SCT_CAP")) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(env, &used);
      if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw MalformedInput(std::string("bad SCT_CAP value: ") + env);
    }
  }
  return cap_value;
}

// ---- verbs ----------------------------------------------------------------

int cmd_enumerate(const Context& ctx, long long cap, int jobs, bool with_chars,
                  const std::string& out) {
  EnumerateOptions opt;
  opt.cap = cap;
  opt.jobs = jobs;
  opt.with_characters = with_chars && ctx.table.has_value();
  auto r = enumerate_sup(ctx.group, ctx.table ? &*ctx.table : nullptr, opt);

  std::string text;
  for (std::size_t i = 0; i < r.class_partitions.size(); ++i) {
    Json line;
    if (opt.with_characters)
      line = theory_json_with_group(r.theories[i], ctx.group_field);
    else
      line = Json{{"class_part", partition_to_json(r.class_partitions[i])},
                  {"group", ctx.group_field}};
    text += line.dump();
    text += '\n';
  }
  Json summary{{"admissible", r.stats.admissible},
               {"candidates", r.stats.candidates},
               {"group", ctx.group_field},
               {"pruned", r.stats.pruned},
               {"wall_ms", static_cast<std::int64_t>(std::llround(r.stats.wall_ms))}};
  text += summary.dump();
  text += '\n';
  write_output(text, out);
  return 0;
}

int cmd_verify(const Context& ctx, const std::string& classes_path,
               const std::string& theory_path, const std::string& out) {
  if (theory_path.empty() == classes_path.empty())
    throw MalformedInput("pass exactly one of --classes and --theory");

  if (!theory_path.empty()) {
    if (!ctx.table) throw MalformedInput("verifying a theory needs a character table");
    auto lt = load_theory_file(theory_path);
    auto e = bind_theory(lt, *ctx.table, theory_path);
    write_output(theory_json_with_group(e, ctx.group_field).dump() + "\n", out);
    return 0;
  }

  auto K = load_partition_file(classes_path, ctx.group->order);
  if (ctx.table) {
    auto res = x_from_k(*ctx.table, K);
    if (!res.ok()) reject_with(*res.rejection, classes_path);
    write_output(theory_json_with_group(*res.value, ctx.group_field).dump() + "\n", out);
    return 0;
  }
  check_class_side(*ctx.group, K, classes_path);
  if (!superclass_admissible(*ctx.group, K))
    reject_with(class_constancy_witness(*ctx.group, K), classes_path);
  Json okj{{"admissible", true}, {"class_part", partition_to_json(K)}, {"group", ctx.group_field}};
  write_output(okj.dump() + "\n", out);
  return 0;
}

int cmd_join(const Context& ctx, const std::string& a_path, const std::string& b_path,
             const std::string& out) {
  if (ctx.table) {
    auto ea = bind_theory(load_theory_file(a_path), *ctx.table, a_path);
    auto eb = bind_theory(load_theory_file(b_path), *ctx.table, b_path);
    auto j = join_theories(*ctx.table, ea, eb);
    write_output(theory_json_with_group(j, ctx.group_field).dump() + "\n", out);
    return 0;
  }
  auto ka = load_partition_file(a_path, ctx.group->order);
  auto kb = load_partition_file(b_path, ctx.group->order);
  for (const auto& [k, path] : {std::pair{&ka, &a_path}, std::pair{&kb, &b_path}}) {
    check_class_side(*ctx.group, *k, *path);
    if (!superclass_admissible(*ctx.group, *k))
      reject_with(class_constancy_witness(*ctx.group, *k), *path);
  }
  auto kj = join(ka, kb);
  if (!superclass_admissible(*ctx.group, kj))
    throw std::logic_error("join of admissible partitions failed admissibility");
  Json okj{{"admissible", true}, {"class_part", partition_to_json(kj)},
           {"group", ctx.group_field}};
  write_output(okj.dump() + "\n", out);
  return 0;
}

int cmd_dual(const Context& ctx, const std::string& theory_path, const std::string& out) {
  if (!ctx.table) throw MalformedInput("dual needs an abelian group or a table");
  auto e = bind_theory(load_theory_file(theory_path), *ctx.table, theory_path);
  auto d = dual_theory(*ctx.table, e);
  write_output(theory_json_with_group(d, ctx.group_field).dump() + "\n", out);
  return 0;
}

int cmd_star(const Context& ctx, const std::string& sub_list, const std::string& c_path,
             const std::string& d_path, const std::string& out) {
  if (!ctx.table) throw MalformedInput("star needs a character table");
  Workspace ws(*ctx.table);
  const auto n = parse_elements(sub_list);
  auto& sc = ws.sub(n);
  auto& qc = ws.quot(n);
  auto c = bind_theory(load_theory_file(c_path), sc.table, c_path);
  auto d = bind_theory(load_theory_file(d_path), qc.table, d_path);
  try {
    auto e = star_product(ws, n, c, d);
    write_output(theory_json_with_group(e, ctx.group_field).dump() + "\n", out);
    return 0;
  } catch (const std::invalid_argument& ex) {
    reject_message("not_a_star_product", ex.what());
  }
}

int cmd_wtp(const Context& ctx, const std::string& n_list, const std::string& m_list,
            const std::string& c_path, const std::string& d_path, const std::string& out) {
  if (!ctx.table) throw MalformedInput("wtp needs a character table");
  Workspace ws(*ctx.table);
  const auto n = parse_elements(n_list);
  const auto m = parse_elements(m_list);
  auto& scm = ws.sub(m);
  auto& qcn = ws.quot(n);
  auto c = bind_theory(load_theory_file(c_path), scm.table, c_path);
  auto d = bind_theory(load_theory_file(d_path), qcn.table, d_path);
  try {
    auto e = wtp_product(ws, n, m, c, d);
    write_output(theory_json_with_group(e, ctx.group_field).dump() + "\n", out);
    return 0;
  } catch (const std::invalid_argument& ex) {
    reject_message("not_a_wedge_product", ex.what());
  }
}

int cmd_factor(const Context& ctx, const std::string& theory_path, const std::string& sub_list,
               const std::string& out) {
  if (!ctx.table) throw MalformedInput("factor needs a character table");
  auto e = bind_theory(load_theory_file(theory_path), *ctx.table, theory_path);
  Workspace ws(*ctx.table);
  if (!sub_list.empty()) {
    const auto n = parse_elements(sub_list);
    auto outcome = factor_over(ws, e, n);
    if (!outcome.ok())
      throw MathReject(Json{{"error", "not_factorable"},
                            {"message", outcome.failure},
                            {"witness", Json{{"k_block", outcome.witness_block}}}});
    Json pair{{"on_sub", theory_to_json(outcome.factors->on_sub)},
              {"on_quot", theory_to_json(outcome.factors->on_quot)}};
    write_output(pair.dump() + "\n", out);
    return 0;
  }
  auto chain = unique_factorization(ws, e);
  write_output(factorization_to_json(chain).dump() + "\n", out);
  return 0;
}

int cmd_lattice(const Context& ctx, long long cap, int jobs, const std::string& out) {
  EnumerateOptions opt;
  opt.cap = cap;
  opt.jobs = jobs;
  opt.with_characters = false;
  auto r = enumerate_sup(ctx.group, nullptr, opt);
  write_output(lattice_dot(r), out);
  return 0;
}

int cmd_orbit(const Context& ctx, const std::string& powers_list, const std::string& autos_path,
              const std::string& out) {
  if (!ctx.table) throw MalformedInput("orbit needs a character table");
  if (powers_list.empty() == autos_path.empty())
    throw MalformedInput("pass exactly one of --powers and --autos");
  SuperTheory e = [&] {
    if (!powers_list.empty()) {
      std::vector<long> powers;
      for (int v : parse_elements(powers_list)) powers.push_back(v);
      return galois_orbit_theory(*ctx.table, powers);
    }
    Json j = read_json(autos_path);
    return orbit_theory(*ctx.table, j.get<std::vector<std::vector<int>>>());
  }();
  write_output(theory_json_with_group(e, ctx.group_field).dump() + "\n", out);
  return 0;
}

int cmd_table(const std::string& group_spec, const std::string& in_path, const std::string& out) {
  if (group_spec.empty() == in_path.empty())
    throw MalformedInput("pass exactly one of --group and --in");
  Json j;
  if (!in_path.empty()) {
    Json original = read_json(in_path);
    auto t = table_from_json(original);
    j = table_to_json(t);
    j["group"] = original.at("group");  // keep the file's group form
  } else {
    auto g = parse_group_spec(group_spec);
    if (!g->abelian && g->order != 1)
      throw MalformedInput("tables are generated for abelian groups only; use --in for files");
    j = table_to_json(abelian_character_table(g));
  }
  write_output(j.dump() + "\n", out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supercharacter theories of finite groups"};
  app.require_subcommand(1);

  std::string group_spec, table_path, out_path;
  std::string classes_path, theory_path, a_path, b_path, c_path, d_path;
  std::string sub_list, n_list, m_list, powers_list, autos_path, in_path;
  long long cap = EnumerateOptions{}.cap;
  int jobs = 1;
  bool with_chars = true;

  auto add_common = [&](CLI::App* sub, bool with_table = true) {
    sub->add_option("--group", group_spec, "group spec: Z8, Z2xZ4, cayley:<path>, perm:<path>");
    if (with_table) sub->add_option("--table", table_path, "character table JSON file");
    sub->add_option("--out", out_path, "write output here instead of stdout");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list every supercharacter theory");
  add_common(enumerate);
  auto* cap_opt = enumerate->add_option("--cap", cap, "candidate budget (env SCT_CAP)");
  enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 1024));
  enumerate->add_flag("--with-characters,!--no-characters", with_chars,
                      "attach character partitions when a table is available");

  auto* verify = app.add_subcommand("verify", "check a partition or theory");
  add_common(verify);
  verify->add_option("--classes", classes_path, "class-side partition JSON");
  verify->add_option("--theory", theory_path, "theory JSON");

  auto* join_cmd = app.add_subcommand("join", "join two theories or class partitions");
  add_common(join_cmd);
  join_cmd->add_option("--a", a_path, "first input")->required();
  join_cmd->add_option("--b", b_path, "second input")->required();

  auto* dual = app.add_subcommand("dual", "dual theory on an abelian group");
  add_common(dual);
  dual->add_option("--theory", theory_path, "theory JSON")->required();

  auto* star = app.add_subcommand("star", "star product over a normal subgroup");
  add_common(star);
  star->add_option("--sub", sub_list, "subgroup as element ids, e.g. 0,4")->required();
  star->add_option("--c", c_path, "theory on the subgroup realization")->required();
  star->add_option("--d", d_path, "theory on the quotient realization")->required();

  auto* wtp = app.add_subcommand("wtp", "wedge product over nested normal subgroups");
  add_common(wtp);
  wtp->add_option("--n", n_list, "smaller subgroup element ids")->required();
  wtp->add_option("--m", m_list, "larger subgroup element ids")->required();
  wtp->add_option("--c", c_path, "theory on the larger subgroup realization")->required();
  wtp->add_option("--d", d_path, "theory on the quotient realization")->required();

  auto* factor = app.add_subcommand("factor", "factor a theory over a subgroup, or fully");
  add_common(factor);
  factor->add_option("--theory", theory_path, "theory JSON")->required();
  factor->add_option("--sub", sub_list, "subgroup as element ids; omit for the full chain");

  auto* lattice = app.add_subcommand("lattice", "DOT drawing of the theory lattice");
  add_common(lattice);
  auto* lat_cap_opt = lattice->add_option("--cap", cap, "candidate budget (env SCT_CAP)");
  lattice->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 1024));

  auto* orbit = app.add_subcommand("orbit", "orbit theory from power maps or automorphisms");
  add_common(orbit);
  orbit->add_option("--powers", powers_list, "unit powers mod the conductor, e.g. 1,3");
  orbit->add_option("--autos", autos_path, "JSON list of automorphism permutations");

  auto* table_cmd = app.add_subcommand("table", "emit a character table");
  table_cmd->add_option("--group", group_spec, "abelian group spec");
  table_cmd->add_option("--in", in_path, "re-emit a table file in canonical form");
  table_cmd->add_option("--out", out_path, "write output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (table_cmd->parsed()) return cmd_table(group_spec, in_path, out_path);

    const bool need_table = dual->parsed() || star->parsed() || wtp->parsed() ||
                            factor->parsed() || orbit->parsed();
    Context ctx = make_context(group_spec, table_path, need_table);

    if (enumerate->parsed())
      return cmd_enumerate(ctx, cap_from(cap_opt, cap), jobs, with_chars, out_path);
    if (verify->parsed()) return cmd_verify(ctx, classes_path, theory_path, out_path);
    if (join_cmd->parsed()) return cmd_join(ctx, a_path, b_path, out_path);
    if (dual->parsed()) return cmd_dual(ctx, theory_path, out_path);
    if (star->parsed()) return cmd_star(ctx, sub_list, c_path, d_path, out_path);
    if (wtp->parsed()) return cmd_wtp(ctx, n_list, m_list, c_path, d_path, out_path);
    if (factor->parsed()) return cmd_factor(ctx, theory_path, sub_list, out_path);
    if (lattice->parsed()) return cmd_lattice(ctx, cap_from(lat_cap_opt, cap), jobs, out_path);
    if (orbit->parsed()) return cmd_orbit(ctx, powers_list, autos_path, out_path);
    throw MalformedInput("no command");
  } catch (const MathReject& m) {
    try {
      write_output(m.report.dump() + "\n", out_path);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
