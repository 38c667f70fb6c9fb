#include "charpos/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "charpos/constructors.hpp"
#include "charpos/errors.hpp"

namespace charpos {

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t parse_count(std::string_view s, std::size_t line, const char* what) {
  std::size_t v = 0;
  if (s.empty()) throw ParseError(line, std::string("missing ") + what);
  for (char c : s) {
    if (c < '0' || c > '9') throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

} // namespace

PermGroup parse_group_text(std::string_view text, std::size_t cap) {
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    if (!have_degree) {
      if (line.substr(0, 6) != "degree") throw ParseError(i + 1, "expected 'degree N'");
      degree = parse_count(trim(line.substr(6)), i + 1, "degree");
      if (degree == 0) throw ParseError(i + 1, "degree must be positive");
      have_degree = true;
      continue;
    }
    try {
      gens.push_back(Permutation::parse(line, degree));
    } catch (const MalformedPermutation& e) {
      throw ParseError(i + 1, e.what());
    }
  }
  if (!have_degree) throw ParseError(lines.size(), "missing 'degree N' header");
  if (gens.empty()) return PermGroup::trivial(degree);
  return PermGroup::from_generators(degree, std::move(gens), cap);
}

PermGroup parse_group_file(const std::filesystem::path& path, std::size_t cap) {
  return parse_group_text(read_file(path), cap);
}

std::string write_group_text(const PermGroup& G) {
  std::string out = "degree " + std::to_string(G.degree()) + "\n";
  for (const auto& g : G.generators()) out += g.to_string() + "\n";
  return out;
}

// ---------------------------------------------------------------------------

CorpusSpec default_corpus() {
  CorpusSpec spec;
  auto add = [&](std::string name, std::string source) { spec.entries.push_back({std::move(name), std::move(source)}); };
  for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 18, 24, 27, 32})
    add("C" + std::to_string(n), "cyclic(" + std::to_string(n) + ")");
  for (int order = 6; order <= 96; order += 2)
    add("D" + std::to_string(order), "dihedral(" + std::to_string(order) + ")");
  for (int order = 8; order <= 96; order += 4)
    add("Q" + std::to_string(order), "generalized_quaternion(" + std::to_string(order) + ")");
  for (int n = 1; n <= 4; ++n) add("S" + std::to_string(n), "symmetric(" + std::to_string(n) + ")");
  for (int n = 3; n <= 5; ++n) add("A" + std::to_string(n), "alternating(" + std::to_string(n) + ")");
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {7, 2}})
    add(std::to_string(p) + "^" + std::to_string(k), "elementary_abelian(" + std::to_string(p) + "," + std::to_string(k) + ")");
  add("SL(2,3)", "sl23()");
  add("7:3", "frobenius21()");
  add("3^(1+2)", "extraspecial27()");
  // Direct products around the orders 24 and 48 and a few more up to 96.
  add("SL(2,3)xC2", "direct_product(sl23(), cyclic(2))");
  add("SL(2,3)xC3", "direct_product(sl23(), cyclic(3))");
  add("SL(2,3)xC4", "direct_product(sl23(), cyclic(4))");
  add("SL(2,3)x2^2", "direct_product(sl23(), elementary_abelian(2,2))");
  add("S4xC2", "direct_product(symmetric(4), cyclic(2))");
  add("S4xC3", "direct_product(symmetric(4), cyclic(3))");
  add("S4xC4", "direct_product(symmetric(4), cyclic(4))");
  add("S4x2^2", "direct_product(symmetric(4), elementary_abelian(2,2))");
  add("A4xC2", "direct_product(alternating(4), cyclic(2))");
  add("A4xC3", "direct_product(alternating(4), cyclic(3))");
  add("A4xC4", "direct_product(alternating(4), cyclic(4))");
  add("A4x2^2", "direct_product(alternating(4), elementary_abelian(2,2))");
  add("A4xS3", "direct_product(alternating(4), symmetric(3))");
  add("A4xQ8", "direct_product(alternating(4), generalized_quaternion(8))");
  add("A4xD8", "direct_product(alternating(4), dihedral(8))");
  add("S3xC3", "direct_product(symmetric(3), cyclic(3))");
  add("S3xC4", "direct_product(symmetric(3), cyclic(4))");
  add("S3xS3", "direct_product(symmetric(3), symmetric(3))");
  add("S3xD8", "direct_product(symmetric(3), dihedral(8))");
  add("S3xQ8", "direct_product(symmetric(3), generalized_quaternion(8))");
  add("D8xC3", "direct_product(dihedral(8), cyclic(3))");
  add("Q8xC2", "direct_product(generalized_quaternion(8), cyclic(2))");
  add("Q8xC3", "direct_product(generalized_quaternion(8), cyclic(3))");
  add("D8xD8", "direct_product(dihedral(8), dihedral(8))");
  add("Q8xQ8", "direct_product(generalized_quaternion(8), generalized_quaternion(8))");
  add("7:3xC2", "direct_product(frobenius21(), cyclic(2))");
  add("7:3xC3", "direct_product(frobenius21(), cyclic(3))");
  add("3^(1+2)xC2", "direct_product(extraspecial27(), cyclic(2))");
  add("3^(1+2)xC3", "direct_product(extraspecial27(), cyclic(3))");
  return spec;
}

CorpusSpec parse_corpus(std::string_view text, const std::filesystem::path& base_dir) {
  CorpusSpec spec;
  std::set<std::string> names;
  auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = lines[i];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto sp = line.find_first_of(" \t");
    auto key = line.substr(0, sp);
    auto rest = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
    if (key == "cap") {
      spec.cap = parse_count(rest, i + 1, "cap");
      if (spec.cap == 0) throw ParseError(i + 1, "cap must be positive");
    } else if (key == "fast_paths") {
      if (rest == "on") spec.fast_paths = true;
      else if (rest == "off") spec.fast_paths = false;
      else throw ParseError(i + 1, "fast_paths expects on or off");
    } else if (key == "group") {
      auto sp2 = rest.find_first_of(" \t");
      if (sp2 == std::string_view::npos) throw ParseError(i + 1, "expected 'group NAME SOURCE'");
      std::string name(rest.substr(0, sp2));
      std::string source(trim(rest.substr(sp2)));
      if (!names.insert(name).second) throw ParseError(i + 1, "duplicate group name '" + name + "'");
      if (source.rfind("file:", 0) == 0) {
        std::filesystem::path p = source.substr(5);
        if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
        source = "file:" + p.string();
      }
      spec.entries.push_back({std::move(name), std::move(source)});
    } else {
      throw ParseError(i + 1, "unknown directive '" + std::string(key) + "'");
    }
  }
  return spec;
}

CorpusSpec load_corpus(const std::filesystem::path& path) {
  return parse_corpus(read_file(path), path.parent_path());
}

PermGroup resolve(const CorpusEntry& entry, std::size_t cap) {
  if (entry.source.rfind("file:", 0) == 0) return parse_group_file(entry.source.substr(5), cap);
  return construct(entry.source, cap);
}

PermGroup resolve_reference(std::string_view ref, std::size_t cap) {
  for (const auto& e : default_corpus().entries)
    if (e.name == ref) return resolve(e, cap);
  return resolve(CorpusEntry{std::string(ref), std::string(ref)}, cap);
}

// ---------------------------------------------------------------------------

namespace {

const char* const kFlagNames[] = {"abelian", "nilpotent", "supersolvable", "solvable", "perfect",
                                  "m_group", "taketa_group", "pr_group", "weak_ipr_group", "ipr_group"};

void count_flags(const ClassificationReport& r, std::map<std::string, std::size_t>& counts) {
  auto bump = [&](const char* name, bool on) { counts[name] += on ? 1 : 0; };
  bump("abelian", r.structure.abelian);
  bump("nilpotent", r.structure.nilpotent);
  bump("supersolvable", r.structure.supersolvable);
  bump("solvable", r.structure.solvable);
  bump("perfect", r.structure.perfect);
  bump("m_group", r.m_group.value_or(false));
  bump("taketa_group", r.taketa_group);
  bump("pr_group", r.pr_group.value_or(false));
  bump("weak_ipr_group", r.weak_ipr_group.value_or(false));
  bump("ipr_group", r.ipr_group.value_or(false));
}

} // namespace

ScanReport scan(const CorpusSpec& spec) {
  ScanReport out;
  out.cap = spec.cap;
  out.fast_paths = spec.fast_paths;
  for (const char* f : kFlagNames) out.counts[f] = 0;
  out.counts["groups"] = 0;
  ClassifyOptions opts;
  opts.fast_paths = spec.fast_paths;
  opts.subgroup_cap = spec.cap;
  for (const auto& entry : spec.entries) {
    std::optional<PermGroup> G;
    try {
      G = resolve(entry, spec.cap);
    } catch (const CapExceeded& e) {
      out.unverified.push_back({entry.name, e.what()});
      continue;
    }
    auto r = classify(*G, opts, entry.name);
    for (const auto* v : r.violations()) out.violations.push_back({entry.name, v->id, v->detail});
    if (!r.skipped.empty()) out.unverified.push_back({entry.name, "subgroup cap exceeded"});
    if (r.m_group && r.ipr_group && *r.m_group) {
      ++out.m_implies_ipr.checked;
      if (!*r.ipr_group) out.m_implies_ipr.counterexamples.push_back(entry.name);
    }
    if (r.taketa_group && r.pr_group) {
      ++out.taketa_implies_pr.checked;
      if (!*r.pr_group) out.taketa_implies_pr.counterexamples.push_back(entry.name);
    }
    count_flags(r, out.counts);
    ++out.counts["groups"];
    out.groups.push_back(std::move(r));
  }
  return out;
}

namespace {

Json claim_json(const ClaimTally& t) {
  Json j;
  j["checked"] = t.checked;
  j["counterexamples"] = t.counterexamples;
  return j;
}

} // namespace

Json to_json(const ScanReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["cap"] = r.cap;
  j["fast_paths"] = r.fast_paths;
  Json counts;
  counts["groups"] = r.counts.at("groups");
  for (const char* f : kFlagNames) counts[f] = r.counts.at(f);
  j["counts"] = std::move(counts);
  Json claims;
  claims["m_implies_ipr"] = claim_json(r.m_implies_ipr);
  claims["taketa_implies_pr"] = claim_json(r.taketa_implies_pr);
  j["claims"] = std::move(claims);
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(Json{{"group", x.group}, {"statement", x.statement}, {"detail", x.detail}});
  j["violations"] = std::move(v);
  Json u = Json::array();
  for (const auto& x : r.unverified) u.push_back(Json{{"group", x.group}, {"reason", x.reason}});
  j["unverified"] = std::move(u);
  Json groups = Json::array();
  for (const auto& g : r.groups) groups.push_back(to_json(g));
  j["groups"] = std::move(groups);
  return j;
}

std::string to_text(const ScanReport& r) {
  std::ostringstream out;
  out << "groups " << r.counts.at("groups") << "  cap " << r.cap << "  fast paths " << (r.fast_paths ? "on" : "off")
      << '\n';
  for (const char* f : kFlagNames) out << "  " << f << ' ' << r.counts.at(f) << '\n';
  out << "M => IPR: " << r.m_implies_ipr.checked << " checked, " << r.m_implies_ipr.counterexamples.size()
      << " counterexamples\n";
  out << "Taketa => PR: " << r.taketa_implies_pr.checked << " checked, "
      << r.taketa_implies_pr.counterexamples.size() << " counterexamples\n";
  out << "violations " << r.violations.size() << '\n';
  for (const auto& v : r.violations) out << "  " << v.group << ": " << v.statement << ": " << v.detail << '\n';
  out << "unverified " << r.unverified.size() << '\n';
  for (const auto& u : r.unverified) out << "  " << u.group << ": " << u.reason << '\n';
  return out.str();
}

} // namespace charpos
