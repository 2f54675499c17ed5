#include "tga/io.hpp"

#include <fstream>
#include <sstream>

#include "tga/errors.hpp"
#include "tga/standard_form.hpp"

namespace tga {

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw input_error(what + ": " + e.what());
  }
}

Json parse_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  check_input(in.good(), "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

namespace {

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  check_input(it != j.end(), std::string("missing field \"") + key + "\"");
  return *it;
}

std::string as_string(const Json& j, const char* what) {
  check_input(j.is_string(), std::string(what) + " must be a string");
  return j.get<std::string>();
}

long as_integer(const Json& j, const char* what) {
  check_input(j.is_number_integer(), std::string(what) + " must be an integer");
  return j.get<long>();
}

int element_of(const Json& j, const Group& g, const char* what) {
  if (j.is_number_integer()) {
    long v = j.get<long>();
    check_input(v >= 0 && v < g.size(), std::string(what) + ": element index out of range");
    return (int)v;
  }
  return g.eval_word(as_string(j, what));
}

RootOfUnity root_of(const Json& j, const char* what) {
  if (j.is_number_integer()) {
    long v = j.get<long>();
    if (v == 1) return RootOfUnity();
    if (v == -1) return RootOfUnity(1, 2);
    throw input_error(std::string(what) + ": integer value must be 1 or -1");
  }
  auto r = RootOfUnity::parse(as_string(j, what));
  check_input(r.has_value(), std::string(what) + ": bad root-of-unity literal");
  return *r;
}

}  // namespace

GroupPtr group_from_spec(const Json& spec) {
  check_input(spec.is_object(), "group spec must be an object");
  int keys = (int)spec.count("cyclic") + (int)spec.count("direct") +
             (int)spec.count("semidirect") + (int)spec.count("table");
  check_input(keys == 1,
              "group spec needs exactly one of \"cyclic\", \"direct\", \"semidirect\", \"table\"");
  std::shared_ptr<Group> g;
  if (spec.contains("cyclic")) {
    long n = as_integer(field(spec, "cyclic"), "\"cyclic\"");
    check_input(n >= 1, "\"cyclic\" must be positive");
    std::string gen = spec.contains("generator")
                          ? as_string(field(spec, "generator"), "\"generator\"")
                          : std::string("a");
    g = Group::cyclic((int)n, gen);
  } else if (spec.contains("direct")) {
    const Json& parts = field(spec, "direct");
    check_input(parts.is_array() && !parts.empty(), "\"direct\" must be a non-empty array");
    GroupPtr acc = group_from_spec(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i) acc = Group::direct(acc, group_from_spec(parts[i]));
    g = std::const_pointer_cast<Group>(acc);
  } else if (spec.contains("semidirect")) {
    const Json& sd = field(spec, "semidirect");
    GroupPtr normal = group_from_spec(field(sd, "normal"));
    GroupPtr acting = group_from_spec(field(sd, "acting"));
    const Json& act = field(sd, "action");
    check_input(act.is_object(), "\"action\" must be an object");
    std::map<std::string, std::map<std::string, std::string>> action;
    for (const auto& [h, images] : act.items()) {
      check_input(images.is_object(), "\"action\" entries must be objects");
      for (const auto& [a, word] : images.items())
        action[h][a] = as_string(word, "action image");
    }
    g = Group::semidirect(normal, acting, action);
  } else {
    const Json& tab = field(spec, "table");
    check_input(tab.is_array(), "\"table\" must be an array of rows");
    std::vector<std::vector<int>> table;
    for (const Json& row : tab) {
      check_input(row.is_array(), "\"table\" rows must be arrays");
      std::vector<int> r;
      for (const Json& v : row) r.push_back((int)as_integer(v, "table entry"));
      table.push_back(std::move(r));
    }
    std::vector<std::string> names;
    if (spec.contains("names"))
      for (const Json& nm : field(spec, "names")) names.push_back(as_string(nm, "name"));
    g = Group::from_table(std::move(table), std::move(names));
  }
  if (spec.contains("aliases")) {
    const Json& al = field(spec, "aliases");
    check_input(al.is_object(), "\"aliases\" must be an object");
    for (const auto& [nm, word] : al.items()) g->add_alias(nm, g->eval_word(as_string(word, "alias")));
  }
  return g;
}

Cocycle cocycle_from_spec(const Json& spec, const GroupPtr& g) {
  check_input(spec.is_object(), "cocycle spec must be an object");
  int keys = (int)spec.count("trivial") + (int)spec.count("standard") +
             (int)spec.count("values") + (int)spec.count("one_cocycle") +
             (int)spec.count("perturb");
  check_input(keys == 1,
              "cocycle spec needs exactly one of \"trivial\", \"standard\", \"values\", "
              "\"one_cocycle\", \"perturb\"");
  if (spec.contains("trivial")) {
    check_input(field(spec, "trivial").is_boolean() && spec["trivial"].get<bool>(),
                "\"trivial\" must be true");
    return Cocycle::trivial(g);
  }
  if (spec.contains("standard")) {
    check_input(field(spec, "standard").is_boolean() && spec["standard"].get<bool>(),
                "\"standard\" must be true");
    return standard_cocycle(g);
  }
  if (spec.contains("values")) {
    const Json& vals = field(spec, "values");
    check_input(vals.is_array(), "\"values\" must be an array");
    std::vector<std::tuple<int, int, RootOfUnity>> entries;
    for (const Json& entry : vals) {
      check_input(entry.is_array() && entry.size() == 3,
                  "\"values\" entries must be [g, h, value] triples");
      entries.emplace_back(element_of(entry[0], *g, "cocycle entry"),
                           element_of(entry[1], *g, "cocycle entry"),
                           root_of(entry[2], "cocycle value"));
    }
    return Cocycle::from_entries(g, entries);
  }
  if (spec.contains("one_cocycle")) {
    const Json& pi = field(spec, "one_cocycle");
    check_input(pi.is_object(), "\"one_cocycle\" must be an object of words");
    std::map<std::string, std::string> table;
    for (const auto& [h, a] : pi.items()) table[h] = as_string(a, "one_cocycle image");
    return from_one_cocycle(g, table);
  }
  const Json& pt = field(spec, "perturb");
  Cocycle base = cocycle_from_spec(field(pt, "of"), g);
  long seed = as_integer(field(pt, "seed"), "\"seed\"");
  check_input(seed >= 0, "\"seed\" must be non-negative");
  return perturb_cocycle(base, (unsigned long long)seed);
}

Bundle load_bundle(const Json& doc) {
  check_input(doc.is_object(), "bundle must be an object");
  Bundle b;
  if (doc.contains("group")) {
    b.name = doc.contains("name") ? as_string(field(doc, "name"), "\"name\"") : "";
    b.group = group_from_spec(field(doc, "group"));
    if (doc.contains("cocycle")) b.cocycle = cocycle_from_spec(field(doc, "cocycle"), b.group);
  } else {
    b.group = group_from_spec(doc);
  }
  return b;
}

Bundle load_bundle_file(const std::string& path) { return load_bundle(parse_json_file(path)); }

Cocycle cocycle_from_document(const Json& doc, const GroupPtr& g) {
  check_input(doc.is_object(), "cocycle document must be an object");
  return cocycle_from_spec(doc.contains("cocycle") ? field(doc, "cocycle") : doc, g);
}

std::string monomial_literal(const GradedMonomial& z, const Group& g) { return z.str(g); }

GradedMonomial monomial_from_literal(const std::string& text, const GroupPtr& g) {
  GradedPolynomial p = parse_polynomial(g, text);
  check_input(p.terms().size() == 1 && p.terms().begin()->second == Cyclo(1),
              "monomial literal must be a single word with coefficient 1");
  return p.terms().begin()->first;
}

Json identity_to_json(const ElementaryIdentity& e, const Group& g) {
  Json j;
  j["z1"] = monomial_literal(e.z1, g);
  j["z2"] = monomial_literal(e.z2, g);
  j["pi"] = e.pi;
  j["coeff"] = e.coeff.str();
  return j;
}

ElementaryIdentity identity_from_json(const Json& j, const Cocycle& c) {
  GradedMonomial z1 = monomial_from_literal(as_string(field(j, "z1"), "\"z1\""), c.group());
  const Json& pj = field(j, "pi");
  check_input(pj.is_array(), "\"pi\" must be an array");
  std::vector<int> pi;
  for (const Json& v : pj) pi.push_back((int)as_integer(v, "\"pi\" entry"));
  ElementaryIdentity e = elementary_identity(c, z1, pi);
  if (j.contains("z2"))
    check_math(monomial_literal(e.z2, *c.group()) == as_string(j["z2"], "\"z2\""),
               "identity document disagrees with its rearrangement");
  if (j.contains("coeff"))
    check_math(e.coeff.str() == as_string(j["coeff"], "\"coeff\""),
               "identity document disagrees with its coefficient");
  return e;
}

Json certificate_to_json(const ReductionCertificate& cert, const Group& g) {
  Json j;
  j["input"] = identity_to_json(cert.input, g);
  Json steps = Json::array();
  for (const ReductionStep& s : cert.steps) {
    Json sj;
    if (s.kind == ReductionStep::kContract) {
      sj["kind"] = "contract";
      sj["left_pos"] = s.left_pos;
      sj["right_pos"] = s.right_pos;
      sj["merged"] = Json::array({s.merged.first, g.name(s.merged.second)});
    } else {
      sj["kind"] = "swap";
      sj["side"] = s.side;
      sj["pos"] = s.pos;
      sj["aux"] = identity_to_json(s.aux, g);
      sj["factor"] = s.factor.str();
    }
    steps.push_back(std::move(sj));
  }
  j["steps"] = std::move(steps);
  j["final"] = identity_to_json(cert.final_identity, g);
  return j;
}

ReductionCertificate certificate_from_json(const Json& j, const Cocycle& c) {
  const GroupPtr& g = c.group();
  ReductionCertificate cert;
  cert.input = identity_from_json(field(j, "input"), c);
  const Json& steps = field(j, "steps");
  check_input(steps.is_array(), "\"steps\" must be an array");
  for (const Json& sj : steps) {
    ReductionStep s;
    std::string kind = as_string(field(sj, "kind"), "\"kind\"");
    if (kind == "contract") {
      s.kind = ReductionStep::kContract;
      s.left_pos = (int)as_integer(field(sj, "left_pos"), "\"left_pos\"");
      s.right_pos = (int)as_integer(field(sj, "right_pos"), "\"right_pos\"");
      const Json& m = field(sj, "merged");
      check_input(m.is_array() && m.size() == 2, "\"merged\" must be [index, element]");
      s.merged = {(int)as_integer(m[0], "merged index"), element_of(m[1], *g, "merged element")};
    } else if (kind == "swap") {
      s.kind = ReductionStep::kSwap;
      s.side = (int)as_integer(field(sj, "side"), "\"side\"");
      s.pos = (int)as_integer(field(sj, "pos"), "\"pos\"");
      s.aux = identity_from_json(field(sj, "aux"), c);
      s.factor = root_of(field(sj, "factor"), "\"factor\"");
    } else {
      throw input_error("unknown step kind: " + kind);
    }
    cert.steps.push_back(std::move(s));
  }
  cert.final_identity = identity_from_json(field(j, "final"), c);
  return cert;
}

Json polynomial_to_json(const GradedPolynomial& p) {
  Json terms = Json::array();
  if (p.group())
    for (const auto& [m, coef] : p.terms()) {
      Json t;
      t["coeff"] = coef.str();
      t["monomial"] = monomial_literal(m, *p.group());
      terms.push_back(std::move(t));
    }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace tga
