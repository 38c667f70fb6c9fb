// Command-line front end: character tables, classification reports, positional
// indices, statement checks and corpus scans.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "charpos/character_table.hpp"
#include "charpos/classify.hpp"
#include "charpos/corpus.hpp"
#include "charpos/errors.hpp"
#include "charpos/positions.hpp"
#include "charpos/report_json.hpp"
#include "charpos/structure.hpp"

using namespace charpos;

namespace {

struct Common {
  std::size_t cap = kDefaultSubgroupCap;
  bool no_fast_paths = false;
  bool json = true;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--cap", c.cap, "Order cap for groups and subgroup enumeration")->check(CLI::PositiveNumber);
  cmd->add_flag("--no-fast-paths", c.no_fast_paths, "Search supersolvable subgroups instead of trusting them");
  auto* j = cmd->add_flag("--json", c.json, "JSON output (default)");
  auto* t = cmd->add_flag("--text{false}", c.json, "Plain text output");
  j->excludes(t);
}

void emit(const Common& c, const std::string& body) {
  if (c.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error("cannot write " + c.out);
  f << body;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ClassifyOptions options(const Common& c) {
  ClassifyOptions o;
  o.fast_paths = !c.no_fast_paths;
  o.subgroup_cap = c.cap;
  return o;
}

int cmd_table(const Common& c, const std::string& ref) {
  auto T = character_table(resolve_reference(ref, c.cap));
  emit(c, c.json ? dump(to_json(T)) : T.to_text());
  return 0;
}

int cmd_classify(const Common& c, const std::string& ref) {
  auto r = classify(resolve_reference(ref, c.cap), options(c), ref);
  emit(c, c.json ? dump(to_json(r)) : to_text(r));
  return r.violations().empty() ? 0 : 1;
}

int cmd_posind(const Common& c, const std::string& ref, const std::string& selector) {
  auto G = resolve_reference(ref, c.cap);
  PermGroup H = [&] {
    if (selector == "derived") return derived_subgroup(G);
    if (selector == "trivial") return PermGroup::trivial(G.degree());
    try {
      return PermGroup::from_generators(G.degree(), parse_permutation_list(selector, G.degree()), c.cap);
    } catch (const MalformedPermutation& e) {
      throw PreconditionViolation(std::string("bad subgroup selector: ") + e.what());
    }
  }();
  PositionContext ctx(character_table(G));
  auto S = analyze_subgroup(ctx, make_subgroup_record(G, H));
  if (!c.json) {
    emit(c, std::to_string(S.posind.value) + "\n");
    return 0;
  }
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = ref;
  j["cd"] = ctx.cd();
  j["subgroup_generators"] = generators_json(H.generators());
  j["subgroup_order"] = H.order();
  j["posind"] = S.posind.value;
  Json mins = Json::array();
  for (auto phi : S.posind.minimizers)
    mins.push_back(Json{{"phi", phi}, {"degree", S.context.table().degree(phi)}, {"pos", S.context.pos(phi)}});
  j["minimizers"] = std::move(mins);
  emit(c, dump(j));
  return 0;
}

int cmd_verify(const Common& c, const std::string& ref) {
  auto G = resolve_reference(ref, c.cap);
  auto table = verify_table(character_table(G));
  auto statements = verify_statements(G, options(c));
  bool bad = !table.ok();
  for (const auto& s : statements) bad = bad || s.outcome == Outcome::violated;
  if (c.json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["group"] = ref;
    j["table_violations"] = table.violations;
    Json st = Json::array();
    for (const auto& s : statements)
      st.push_back(Json{{"id", s.id}, {"outcome", std::string(to_string(s.outcome))}, {"detail", s.detail}});
    j["statements"] = std::move(st);
    emit(c, dump(j));
  } else {
    std::string body;
    for (const auto& v : table.violations) body += "table: " + v + "\n";
    for (const auto& s : statements) body += s.id + ": " + std::string(to_string(s.outcome)) + " (" + s.detail + ")\n";
    emit(c, body);
  }
  return bad ? 1 : 0;
}

int cmd_scan(const Common& c, const std::string& corpus, bool cap_given, bool fast_given) {
  auto spec = corpus.empty() ? default_corpus() : load_corpus(corpus);
  if (cap_given) spec.cap = c.cap;
  if (fast_given) spec.fast_paths = false;
  auto r = scan(spec);
  for (const auto& u : r.unverified) std::cerr << "unverified: " << u.group << ": " << u.reason << "\n";
  emit(c, c.json ? dump(to_json(r)) : to_text(r));
  return r.violations.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character tables, character positions and the group classes built on them"};
  app.require_subcommand(1);

  Common c;
  std::string ref, selector, corpus;

  auto* table = app.add_subcommand("table", "Print the character table of a group");
  auto* cls = app.add_subcommand("classify", "Classify a group and check every statement");
  auto* pi = app.add_subcommand("posind", "Positional index of a subgroup");
  auto* verify = app.add_subcommand("verify", "Check the table and every statement for one group");
  auto* sc = app.add_subcommand("scan", "Classify every group of a corpus");
  for (auto* cmd : {table, cls, pi, verify, sc}) {
    add_common(cmd, c);
    cmd->add_option("--out", c.out, "Write the report to this file");
  }
  for (auto* cmd : {table, cls, pi, verify})
    cmd->add_option("group", ref, "Corpus name, constructor expression, or file:PATH")->required();
  pi->add_option("subgroup", selector, "'derived', 'trivial', or generators such as \"(1 2),(1 2 3)\"")->required();
  sc->add_option("--corpus", corpus, "Corpus file (default: built-in corpus)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (table->parsed()) return cmd_table(c, ref);
    if (cls->parsed()) return cmd_classify(c, ref);
    if (pi->parsed()) return cmd_posind(c, ref, selector);
    if (verify->parsed()) return cmd_verify(c, ref);
    if (sc->parsed()) return cmd_scan(c, corpus, sc->count("--cap") > 0, c.no_fast_paths);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
