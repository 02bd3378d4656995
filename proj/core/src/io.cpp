#include "poskit/io.hpp"

#include <fstream>

#include "poskit/error.hpp"

namespace poskit::io {

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail("ParseError", std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) fail("ParseError", std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) fail("ParseError", std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(as_string(e, what));
  return out;
}

}  // namespace

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("ParseError", "cannot open \"" + path + "\"");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail("ParseError", "invalid JSON in \"" + path + "\": " + e.what());
  }
  return j;
}

FinPoset parse_poset(const json& j) {
  std::vector<std::string> elements = string_list(member(j, "elements"), "elements");
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("leq")) {
    const json& leq = j.at("leq");
    if (!leq.is_array()) fail("ParseError", "leq must be an array of pairs");
    for (const auto& p : leq) {
      if (!p.is_array() || p.size() != 2) fail("ParseError", "leq entries must be pairs");
      pairs.emplace_back(as_string(p.at(0), "leq pair"), as_string(p.at(1), "leq pair"));
    }
  }
  return FinPoset::closure_of(std::move(elements), pairs);
}

json to_json(const FinPoset& p) {
  json j;
  j["elements"] = p.elements();
  json leq = json::array();
  for (const auto& [a, b] : p.cover_pairs()) leq.push_back(json::array({a, b}));
  j["leq"] = std::move(leq);
  return j;
}

MonoMap parse_mono_map(const json& j) {
  FinPoset dom = parse_poset(member(j, "domain"));
  FinPoset cod = parse_poset(member(j, "codomain"));
  const json& table = member(j, "map");
  if (!table.is_object()) fail("ParseError", "map must be an object");
  std::map<std::string, std::string> entries;
  for (const auto& [k, v] : table.items()) entries[k] = as_string(v, "map value");
  return MonoMap::of_names(std::move(dom), std::move(cod), entries);
}

json to_json(const MonoMap& f) {
  json j;
  j["domain"] = to_json(f.dom());
  j["codomain"] = to_json(f.cod());
  json table = json::object();
  for (int i = 0; i < f.dom().size(); ++i) table[f.dom().name(i)] = f.cod().name(f(i));
  j["map"] = std::move(table);
  return j;
}

Coalgebra parse_coalgebra(const json& j) {
  FinPoset space = parse_poset(member(j, "poset"));
  const json& alpha = member(j, "alpha");
  if (!alpha.is_object()) fail("ParseError", "alpha must be an object");
  std::map<std::string, std::vector<std::string>> gens;
  for (const auto& [k, v] : alpha.items()) gens[k] = string_list(v, "alpha entry");
  for (int i = 0; i < space.size(); ++i)
    if (!gens.count(space.name(i)))
      fail("ParseError", "alpha misses element \"" + space.name(i) + "\"");
  return Coalgebra::from_generators(std::move(space), gens);
}

json to_json(const Coalgebra& c) {
  json j;
  j["poset"] = to_json(c.space());
  json alpha = json::object();
  const FinPoset& x = c.space();
  for (int i = 0; i < x.size(); ++i) {
    json gens = json::array();
    for (int v : c.at(i).members()) {
      // keep only minimal members: up-closure restores the rest
      bool minimal = true;
      for (int u : c.at(i).members())
        if (u != v && x.leq(u, v)) {
          minimal = false;
          break;
        }
      if (minimal) gens.push_back(x.name(v));
    }
    alpha[x.name(i)] = std::move(gens);
  }
  j["alpha"] = std::move(alpha);
  return j;
}

ValuedMap parse_valued_map(const json& j) {
  FinPoset space = parse_poset(member(j, "poset"));
  const json& table = member(j, "values");
  if (!table.is_object()) fail("ParseError", "values must be an object");
  std::vector<Rat01> vals(space.size());
  std::vector<bool> seen(space.size(), false);
  for (const auto& [k, v] : table.items()) {
    int i = space.index_of(k);
    vals[i] = Rat01::parse(as_string(v, "value"));
    seen[i] = true;
  }
  for (int i = 0; i < space.size(); ++i)
    if (!seen[i]) fail("ParseError", "values miss element \"" + space.name(i) + "\"");
  return ValuedMap(std::move(space), std::move(vals));
}

json to_json(const ValuedMap& m) {
  json j;
  j["poset"] = to_json(m.space());
  json table = json::object();
  for (int i = 0; i < m.space().size(); ++i) table[m.space().name(i)] = m.at(i).str();
  j["values"] = std::move(table);
  return j;
}

Seq01 parse_seq(const json& j) {
  std::vector<Rat01> prefix;
  for (const std::string& s : string_list(member(j, "prefix"), "prefix"))
    prefix.push_back(Rat01::parse(s));
  Rat01 tail = Rat01::parse(as_string(member(j, "tail"), "tail"));
  return Seq01::eventually(std::move(prefix), std::move(tail));
}

json to_json(const Seq01& s) {
  if (s.tail_kind() != Seq01::Tail::Constant)
    fail("ParseError", "only constant-tail sequences have a file form");
  json j;
  json prefix = json::array();
  for (const Rat01& v : s.prefix()) prefix.push_back(v.str());
  j["prefix"] = std::move(prefix);
  j["tail"] = s.tail_value().str();
  return j;
}

FinMetric parse_metric(const json& j) {
  std::vector<std::string> elements = string_list(member(j, "elements"), "elements");
  const json& table = member(j, "dist");
  if (!table.is_object()) fail("ParseError", "dist must be an object");
  const int n = static_cast<int>(elements.size());
  auto index = [&](const std::string& e) {
    for (int i = 0; i < n; ++i)
      if (elements[i] == e) return i;
    fail("UnknownElement", "dist mentions unlisted element \"" + e + "\"");
  };
  std::vector<std::vector<Rat01>> d(n, std::vector<Rat01>(n));
  std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
  for (const auto& [k, v] : table.items()) {
    auto bar = k.find('|');
    if (bar == std::string::npos) fail("ParseError", "dist keys look like \"a|b\"");
    int i = index(k.substr(0, bar));
    int jdx = index(k.substr(bar + 1));
    d[i][jdx] = Rat01::parse(as_string(v, "distance"));
    given[i][jdx] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (given[i][k]) continue;
      if (i == k) continue;  // diagonal defaults to 0
      fail("ParseError",
           "dist misses the pair \"" + elements[i] + "|" + elements[k] + "\"");
    }
  return FinMetric(std::move(elements), std::move(d));
}

json to_json(const FinMetric& m) {
  json j;
  j["elements"] = m.elements();
  json table = json::object();
  for (int i = 0; i < m.size(); ++i)
    for (int k = 0; k < m.size(); ++k)
      if (i != k) table[m.name(i) + "|" + m.name(k)] = m.dist(i, k).str();
  j["dist"] = std::move(table);
  return j;
}

FinDiagram parse_diagram(const json& j) {
  const json& objs = member(j, "objects");
  if (!objs.is_object()) fail("ParseError", "objects must be an object");
  std::vector<std::pair<std::string, FinPoset>> objects;
  for (const auto& [k, v] : objs.items()) objects.emplace_back(k, parse_poset(v));
  std::vector<DiagramArrow> arrows;
  if (j.contains("arrows")) {
    const json& arr = j.at("arrows");
    if (!arr.is_object()) fail("ParseError", "arrows must be an object");
    for (const auto& [label, spec] : arr.items()) {
      std::string src = as_string(member(spec, "source"), "source");
      std::string tgt = as_string(member(spec, "target"), "target");
      const FinPoset* dom = nullptr;
      const FinPoset* cod = nullptr;
      for (const auto& [name, p] : objects) {
        if (name == src) dom = &p;
        if (name == tgt) cod = &p;
      }
      if (!dom) fail("UnknownElement", "arrow \"" + label + "\" has unknown source");
      if (!cod) fail("UnknownElement", "arrow \"" + label + "\" has unknown target");
      const json& table = member(spec, "map");
      std::map<std::string, std::string> entries;
      for (const auto& [k, v] : table.items()) entries[k] = as_string(v, "map value");
      arrows.push_back(DiagramArrow{label, src, tgt, MonoMap::of_names(*dom, *cod, entries)});
    }
  }
  return FinDiagram(std::move(objects), std::move(arrows));
}

json to_json(const FinDiagram& d) {
  json objs = json::object();
  for (int i = 0; i < d.object_count(); ++i) objs[d.object_name(i)] = to_json(d.object(i));
  json arrows = json::object();
  for (const auto& a : d.given_arrows()) {
    json spec;
    spec["source"] = a.source;
    spec["target"] = a.target;
    json table = json::object();
    for (int i = 0; i < a.map.dom().size(); ++i)
      table[a.map.dom().name(i)] = a.map.cod().name(a.map(i));
    spec["map"] = std::move(table);
    arrows[a.label] = std::move(spec);
  }
  json j;
  j["objects"] = std::move(objs);
  j["arrows"] = std::move(arrows);
  return j;
}

LimitCheckInput parse_limit_check(const json& j) {
  FinDiagram d = parse_diagram(member(j, "diagram"));
  const json& cone = member(j, "cone");
  FinPoset apex = parse_poset(member(cone, "apex"));
  const json& legs = member(cone, "legs");
  if (!legs.is_object()) fail("ParseError", "legs must be an object");
  std::map<std::string, MonoMap> keyed;
  for (const auto& [obj, table] : legs.items()) {
    std::map<std::string, std::string> entries;
    for (const auto& [k, v] : table.items()) entries[k] = as_string(v, "leg value");
    keyed.emplace(obj, MonoMap::of_names(apex, d.object(d.object_index(obj)), entries));
  }
  LimitMode mode = LimitMode::PosComp;
  if (j.contains("mode")) {
    std::string m = as_string(j.at("mode"), "mode");
    if (m == "poscomp")
      mode = LimitMode::PosComp;
    else if (m == "compact-hausdorff")
      mode = LimitMode::CompactHausdorff;
    else
      fail("ParseError", "mode must be \"poscomp\" or \"compact-hausdorff\"");
  }
  DiagramCone c = make_cone(d, std::move(apex), keyed);
  return LimitCheckInput{std::move(d), std::move(c), mode};
}

ColimitCheckInput parse_colimit_check(const json& j) {
  FinDiagram d = parse_diagram(member(j, "diagram"));
  const json& cocone = member(j, "cocone");
  std::vector<std::string> target = string_list(member(cocone, "target"), "target");
  const json& legs = member(cocone, "legs");
  if (!legs.is_object()) fail("ParseError", "legs must be an object");
  std::map<std::string, std::map<std::string, std::string>> keyed;
  for (const auto& [obj, table] : legs.items()) {
    std::map<std::string, std::string> entries;
    for (const auto& [k, v] : table.items()) entries[k] = as_string(v, "leg value");
    keyed[obj] = std::move(entries);
  }
  DiagramCocone c = make_cocone(d, std::move(target), keyed);
  return ColimitCheckInput{std::move(d), std::move(c)};
}

std::string detect_format(const json& j) {
  if (!j.is_object()) fail("ParseError", "expected a JSON object");
  if (j.contains("dist")) return "metric";
  if (j.contains("alpha")) return "coalgebra";
  if (j.contains("values")) return "valued-map";
  if (j.contains("map") && j.contains("domain")) return "map";
  if (j.contains("prefix") && j.contains("tail")) return "sequence";
  if (j.contains("elements")) return "poset";
  fail("ParseError", "unrecognized file shape");
}

bool roundtrip_value_equal(const json& j) {
  std::string kind = detect_format(j);
  if (kind == "poset") {
    FinPoset a = parse_poset(j);
    return parse_poset(to_json(a)) == a;
  }
  if (kind == "map") {
    MonoMap a = parse_mono_map(j);
    return parse_mono_map(to_json(a)) == a;
  }
  if (kind == "coalgebra") {
    Coalgebra a = parse_coalgebra(j);
    return parse_coalgebra(to_json(a)) == a;
  }
  if (kind == "valued-map") {
    ValuedMap a = parse_valued_map(j);
    return parse_valued_map(to_json(a)) == a;
  }
  if (kind == "sequence") {
    Seq01 a = parse_seq(j);
    return parse_seq(to_json(a)) == a;
  }
  FinMetric a = parse_metric(j);
  return parse_metric(to_json(a)) == a;
}

}  // namespace poskit::io
