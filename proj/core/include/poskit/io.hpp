#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <utility>

#include "poskit/diagram.hpp"
#include "poskit/metric.hpp"
#include "poskit/poset.hpp"
#include "poskit/seqdelta.hpp"
#include "poskit/valued_map.hpp"
#include "poskit/vietoris.hpp"

namespace poskit::io {

using nlohmann::json;

// Any structural problem surfaces as Error with kind "ParseError"; domain
// validation failures keep their own kinds (CycleError, NotMonotone, ...).

json load_file(const std::string& path);

FinPoset parse_poset(const json& j);
json to_json(const FinPoset& p);  // covering pairs; closure restored on load

MonoMap parse_mono_map(const json& j);
json to_json(const MonoMap& f);

Coalgebra parse_coalgebra(const json& j);  // alpha given by generators, up-closed on load
json to_json(const Coalgebra& c);          // minimal generators per element

ValuedMap parse_valued_map(const json& j);
json to_json(const ValuedMap& m);

Seq01 parse_seq(const json& j);  // constant tails only in the file format
json to_json(const Seq01& s);

FinMetric parse_metric(const json& j);  // "a|b" keys; missing off-diagonal pair is an error
json to_json(const FinMetric& m);

FinDiagram parse_diagram(const json& j);
json to_json(const FinDiagram& d);

struct LimitCheckInput {
  FinDiagram diagram;
  DiagramCone cone;
  LimitMode mode;
};
LimitCheckInput parse_limit_check(const json& j);

struct ColimitCheckInput {
  FinDiagram diagram;
  DiagramCocone cocone;
};
ColimitCheckInput parse_colimit_check(const json& j);

// "poset", "map", "coalgebra", "valued-map", "sequence" or "metric",
// detected from the key shape. Throws ParseError when nothing matches.
std::string detect_format(const json& j);

// parse -> serialize -> parse equals the first parse, for the detected format.
bool roundtrip_value_equal(const json& j);

}  // namespace poskit::io
