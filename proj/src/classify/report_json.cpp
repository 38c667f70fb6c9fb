#include "charpos/report_json.hpp"

#include <sstream>

#include "charpos/errors.hpp"

namespace charpos {

Json generators_json(const std::vector<Permutation>& gens) {
  Json a = Json::array();
  for (const auto& g : gens) a.push_back(g.to_string());
  return a;
}

Json to_json(const PrtWitness& w) {
  Json j;
  j["chi"] = w.chi;
  j["subgroup_generators"] = generators_json(w.subgroup.subgroup.generators());
  j["subgroup_order"] = w.subgroup.subgroup.order();
  j["phi"] = w.phi;
  j["pos_phi"] = w.pos_phi;
  j["posind"] = w.posind_value;
  j["pos_chi"] = w.pos_chi;
  return j;
}

Json to_json(const MonomialWitness& w) {
  Json j;
  j["chi"] = w.chi;
  j["subgroup_generators"] = generators_json(w.subgroup.subgroup.generators());
  j["subgroup_order"] = w.subgroup.subgroup.order();
  j["phi"] = w.phi;
  return j;
}

Json to_json(const IprCertificate& cert) {
  Json j;
  j["degree"] = cert.degree;
  Json nodes = Json::array();
  for (const auto& n : cert.nodes) {
    Json node;
    node["generators"] = generators_json(n.generators);
    node["order"] = n.order;
    node["leaf"] = to_string(n.leaf);
    Json entries = Json::array();
    for (const auto& e : n.entries) {
      Json x;
      x["chi"] = e.chi;
      x["chi_degree"] = e.chi_degree;
      x["pos_chi"] = e.pos_chi;
      x["subgroup_generators"] = generators_json(e.subgroup_generators);
      x["fusion"] = e.fusion;
      x["phi"] = e.phi;
      x["pos_phi"] = e.pos_phi;
      x["posind"] = e.posind;
      x["conjugator"] = e.conjugator.to_string();
      x["child"] = e.child;
      entries.push_back(std::move(x));
    }
    node["entries"] = std::move(entries);
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  return j;
}

namespace {

std::vector<Permutation> parse_generators(const Json& a, std::size_t degree) {
  std::vector<Permutation> out;
  for (const auto& g : a) out.push_back(Permutation::parse(g.get<std::string>(), degree));
  return out;
}

IprCertificate::Leaf parse_leaf(const std::string& s) {
  if (s == "none") return IprCertificate::Leaf::none;
  if (s == "abelian") return IprCertificate::Leaf::abelian;
  if (s == "supersolvable") return IprCertificate::Leaf::supersolvable;
  throw FormatError("unknown leaf kind '" + s + "'");
}

} // namespace

IprCertificate certificate_from_json(const Json& j) {
  try {
    IprCertificate cert;
    cert.degree = j.at("degree").get<std::size_t>();
    for (const auto& n : j.at("nodes")) {
      IprCertificate::Node node;
      node.generators = parse_generators(n.at("generators"), cert.degree);
      node.order = n.at("order").get<std::size_t>();
      node.leaf = parse_leaf(n.at("leaf").get<std::string>());
      for (const auto& x : n.at("entries")) {
        IprCertificate::Entry e;
        e.chi = x.at("chi").get<std::size_t>();
        e.chi_degree = x.at("chi_degree").get<std::size_t>();
        e.pos_chi = x.at("pos_chi").get<std::size_t>();
        e.subgroup_generators = parse_generators(x.at("subgroup_generators"), cert.degree);
        e.fusion = x.at("fusion").get<std::vector<std::size_t>>();
        e.phi = x.at("phi").get<std::size_t>();
        e.pos_phi = x.at("pos_phi").get<std::size_t>();
        e.posind = x.at("posind").get<std::size_t>();
        e.conjugator = Permutation::parse(x.at("conjugator").get<std::string>(), cert.degree);
        e.child = x.at("child").get<std::size_t>();
        node.entries.push_back(std::move(e));
      }
      cert.nodes.push_back(std::move(node));
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("certificate: ") + e.what());
  } catch (const MalformedPermutation& e) {
    throw FormatError(std::string("certificate: ") + e.what());
  }
}

namespace {

Json optional_flag(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

} // namespace

Json to_json(const ClassificationReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = r.name;
  j["order"] = r.order;
  j["degree"] = r.degree;
  j["generators"] = generators_json(r.generators);
  j["fast_paths"] = r.fast_paths;
  Json flags;
  flags["abelian"] = r.structure.abelian;
  flags["nilpotent"] = r.structure.nilpotent;
  flags["supersolvable"] = r.structure.supersolvable;
  flags["solvable"] = r.structure.solvable;
  flags["perfect"] = r.structure.perfect;
  flags["m_group"] = optional_flag(r.m_group);
  flags["taketa_group"] = r.taketa_group;
  flags["pr_group"] = optional_flag(r.pr_group);
  flags["weak_ipr_group"] = optional_flag(r.weak_ipr_group);
  flags["ipr_group"] = optional_flag(r.ipr_group);
  j["flags"] = std::move(flags);
  j["derived_length"] = r.derived_length ? Json(*r.derived_length) : Json(nullptr);
  j["cd"] = r.cd;
  j["cd_size"] = r.cd.size();
  j["taketa_inequality"] = r.taketa_inequality ? Json(*r.taketa_inequality) : Json("not applicable");
  Json st = Json::array();
  for (const auto& s : r.statements) {
    Json x;
    x["id"] = s.id;
    x["outcome"] = to_string(s.outcome);
    x["detail"] = s.detail;
    st.push_back(std::move(x));
  }
  j["statements"] = std::move(st);
  Json w;
  w["monomial"] = Json::array();
  for (const auto& m : r.monomial) w["monomial"].push_back(to_json(m));
  w["pr"] = Json::array();
  for (const auto& p : r.pr) w["pr"].push_back(to_json(p));
  w["taketa_pr"] = Json::array();
  for (const auto& p : r.taketa_pr) w["taketa_pr"].push_back(to_json(p));
  j["witnesses"] = std::move(w);
  j["ipr_certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  j["skipped"] = r.skipped;
  return j;
}

Json to_json(const CharacterTable& T) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  const auto& G = T.group();
  j["order"] = G.order();
  j["degree"] = G.degree();
  j["generators"] = generators_json(G.generators());
  Json classes = Json::array();
  for (const auto& c : T.classes().classes()) {
    Json x;
    x["representative"] = G.element(c.representative).to_string();
    x["size"] = c.size;
    x["element_order"] = c.element_order;
    classes.push_back(std::move(x));
  }
  j["classes"] = std::move(classes);
  Json rows = Json::array();
  for (const auto& chi : T.irreducibles()) {
    Json row = Json::array();
    for (const auto& v : chi.values()) row.push_back(v.to_string());
    rows.push_back(std::move(row));
  }
  j["degrees"] = T.degrees();
  j["rows"] = std::move(rows);
  return j;
}

namespace {

std::string flag_text(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "skipped"; }
std::string flag_text(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string to_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << r.name << "  order " << r.order << "  degree " << r.degree << '\n';
  out << "  cd {";
  for (std::size_t i = 0; i < r.cd.size(); ++i) out << (i ? "," : "") << r.cd[i];
  out << "}  dl " << (r.derived_length ? std::to_string(*r.derived_length) : "-") << "  taketa inequality "
      << (r.taketa_inequality ? flag_text(*r.taketa_inequality) : "n/a") << '\n';
  out << "  abelian " << flag_text(r.structure.abelian) << "  nilpotent " << flag_text(r.structure.nilpotent)
      << "  supersolvable " << flag_text(r.structure.supersolvable) << "  solvable "
      << flag_text(r.structure.solvable) << "  perfect " << flag_text(r.structure.perfect) << '\n';
  out << "  M " << flag_text(r.m_group) << "  Taketa " << flag_text(r.taketa_group) << "  PR "
      << flag_text(r.pr_group) << "  weak IPR " << flag_text(r.weak_ipr_group) << "  IPR "
      << flag_text(r.ipr_group) << '\n';
  for (const auto& s : r.statements)
    out << "  " << s.id << ": " << to_string(s.outcome) << (s.detail.empty() ? "" : " (" + s.detail + ")") << '\n';
  return out.str();
}

} // namespace charpos
