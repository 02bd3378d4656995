#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "poskit/dualalg.hpp"
#include "poskit/error.hpp"
#include "poskit/generators.hpp"
#include "poskit/io.hpp"
#include "poskit/laws.hpp"
#include "poskit/report.hpp"
#include "verbs.hpp"

using namespace poskit;
using nlohmann::json;

namespace {

struct Options {
  std::string report_path;
  uint64_t seed = 0;
  unsigned grid = 8;
  unsigned depth = 2;
  std::string eps = "0";
  int max_size = 3;
  int samples = 200;
};

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(csv);
  while (std::getline(in, cur, ','))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

Bits subset_of(const FinPoset& x, const std::string& csv) {
  Bits b(x.size());
  for (const std::string& name : split_names(csv)) b.set(x.index_of(name));
  return b;
}

void push_laws(Report& report, const std::string& suite, const std::vector<LawResult>& laws) {
  for (const LawResult& l : laws) {
    ReportItem item;
    item.name = suite + "/" + l.name;
    item.status = l.pass ? "pass" : "fail";
    item.law = l.law;
    item.witness = l.witness;
    item.cases = l.cases;
    report.items.push_back(std::move(item));
  }
}

json mono_map_json(const MonoMap& f) { return io::to_json(f); }

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  std::function<void(Report&)> action;

  CLI::App app{"exact workbench for finite ordered spaces, hyperspaces and dual algebras"};
  app.require_subcommand(1);
  app.add_option("--report", opt.report_path, "write the JSON report to this path");
  app.add_option("--seed", opt.seed, "seed for all randomized checks");
  app.add_option("--grid", opt.grid, "value grid denominator q");
  app.add_option("--depth", opt.depth, "closure search depth");
  app.add_option("--eps", opt.eps, "tolerance as an exact rational");
  app.add_option("--max-size", opt.max_size, "bound for exhaustive poset enumeration");
  app.add_option("--samples", opt.samples, "randomized-instance count");

  // ---- poset ----------------------------------------------------------
  auto* poset_cmd = app.add_subcommand("poset", "finite partially ordered spaces");
  poset_cmd->require_subcommand(1);
  {
    auto* c = poset_cmd->add_subcommand("validate", "closure + antisymmetry check");
    auto file = std::make_shared<std::string>();
    c->add_option("file", *file, "poset JSON")->required();
    c->callback([&action, file] {
      action = [file](Report& r) {
        FinPoset p = io::parse_poset(io::load_file(*file));
        r.items.push_back({"validate", "pass", "", "", io::to_json(p), 1});
      };
    });
  }
  {
    auto* c = poset_cmd->add_subcommand("product", "binary product with projections");
    auto fx = std::make_shared<std::string>();
    auto fy = std::make_shared<std::string>();
    c->add_option("left", *fx, "poset JSON")->required();
    c->add_option("right", *fy, "poset JSON")->required();
    c->callback([&action, fx, fy] {
      action = [fx, fy](Report& r) {
        Product p = product(io::parse_poset(io::load_file(*fx)),
                            io::parse_poset(io::load_file(*fy)));
        json result;
        result["space"] = io::to_json(p.space);
        result["proj_left"] = mono_map_json(p.proj_left);
        result["proj_right"] = mono_map_json(p.proj_right);
        r.items.push_back({"product", "pass", "", "", std::move(result), 1});
      };
    });
  }
  {
    auto* c = poset_cmd->add_subcommand("equalizer", "equalizer of a parallel pair");
    auto ff = std::make_shared<std::string>();
    auto fg = std::make_shared<std::string>();
    c->add_option("f", *ff, "map JSON")->required();
    c->add_option("g", *fg, "map JSON")->required();
    c->callback([&action, ff, fg] {
      action = [ff, fg](Report& r) {
        Equalizer eq = equalizer(io::parse_mono_map(io::load_file(*ff)),
                                 io::parse_mono_map(io::load_file(*fg)));
        json result;
        result["object"] = io::to_json(eq.object);
        result["include"] = mono_map_json(eq.include);
        r.items.push_back({"equalizer", "pass", "", "", std::move(result), 1});
      };
    });
  }
  {
    auto* c = poset_cmd->add_subcommand("factorize", "surjection-embedding factorization");
    auto ff = std::make_shared<std::string>();
    c->add_option("f", *ff, "map JSON")->required();
    c->callback([&action, ff] {
      action = [ff](Report& r) {
        Factorization fac = image_factorize(io::parse_mono_map(io::load_file(*ff)));
        json result;
        result["onto"] = mono_map_json(fac.onto);
        result["embed"] = mono_map_json(fac.embed);
        r.items.push_back({"factorize", "pass", "", "", std::move(result), 1});
      };
    });
  }
  {
    auto* c = poset_cmd->add_subcommand("limit-check", "image criterion for codirected limits");
    auto file = std::make_shared<std::string>();
    c->add_option("file", *file, "bundle with diagram, cone and mode")->required();
    c->callback([&action, file] {
      action = [file](Report& r) {
        io::LimitCheckInput in = io::parse_limit_check(io::load_file(*file));
        bool initial = is_initial_cone(Cone{in.cone.apex, in.cone.legs});
        bool ok = limit_check(in.diagram, in.cone, in.mode);
        json result;
        result["is_limit"] = ok;
        result["cone_initial"] = initial;
        result["mode"] = in.mode == LimitMode::PosComp ? "poscomp" : "compact-hausdorff";
        r.items.push_back({"limit-check", ok ? "pass" : "fail",
                           "mono cone with leg images equal to incoming-image meets",
                           ok ? "" : "criterion rejected the cone", std::move(result), 1});
      };
    });
  }
  {
    auto* c = poset_cmd->add_subcommand("colimit-check", "kernel criterion for filtered colimits");
    auto file = std::make_shared<std::string>();
    c->add_option("file", *file, "bundle with diagram and cocone")->required();
    c->callback([&action, file] {
      action = [file](Report& r) {
        io::ColimitCheckInput in = io::parse_colimit_check(io::load_file(*file));
        bool ok = colimit_check_set(in.diagram, in.cocone);
        json result;
        result["is_colimit"] = ok;
        r.items.push_back({"colimit-check", ok ? "pass" : "fail",
                           "jointly surjective with stage-wise kernel condition",
                           ok ? "" : "criterion rejected the cocone", std::move(result), 1});
      };
    });
  }

  // ---- vietoris -------------------------------------------------------
  auto* viet_cmd = app.add_subcommand("vietoris", "hyperspace functor and monad");
  viet_cmd->require_subcommand(1);
  {
    auto* c = viet_cmd->add_subcommand("object", "the hyperspace of upper sets");
    auto file = std::make_shared<std::string>();
    c->add_option("file", *file, "poset JSON")->required();
    c->callback([&action, file] {
      action = [file](Report& r) {
        VietorisSpace v = vietoris_object(io::parse_poset(io::load_file(*file)));
        json result;
        result["space"] = io::to_json(v.space);
        r.items.push_back({"object", "pass", "", "", std::move(result), 1});
      };
    });
  }
  {
    auto* c = viet_cmd->add_subcommand("map", "the hyperspace image of a map");
    auto file = std::make_shared<std::string>();
    c->add_option("f", *file, "map JSON")->required();
    c->callback([&action, file] {
      action = [file](Report& r) {
        MonoMap vf = vietoris_map(io::parse_mono_map(io::load_file(*file)));
        r.items.push_back({"map", "pass", "", "", mono_map_json(vf), 1});
      };
    });
  }
  {
    auto* c = viet_cmd->add_subcommand("monad-laws", "functor, naturality and monad laws");
    c->callback([&action, &opt] {
      action = [&opt](Report& r) {
        SuiteOptions sopts;
        sopts.seed = opt.seed;
        sopts.max_size = opt.max_size;
        sopts.samples = opt.samples;
        push_laws(r, "vietoris", vietoris_laws(sopts));
      };
    });
  }

  // ---- coalg ----------------------------------------------------------
  auto* coalg_cmd = app.add_subcommand("coalg", "hyperspace coalgebras");
  coalg_cmd->require_subcommand(1);
  {
    auto* c = coalg_cmd->add_subcommand("check-hom", "naturality square for a map");
    auto fm = std::make_shared<std::string>();
    auto fc1 = std::make_shared<std::string>();
    auto fc2 = std::make_shared<std::string>();
    c->add_option("map", *fm, "map JSON")->required();
    c->add_option("from", *fc1, "coalgebra JSON")->required();
    c->add_option("to", *fc2, "coalgebra JSON")->required();
    c->callback([&action, fm, fc1, fc2] {
      action = [fm, fc1, fc2](Report& r) {
        bool ok = is_coalgebra_hom(io::parse_mono_map(io::load_file(*fm)),
                                   io::parse_coalgebra(io::load_file(*fc1)),
                                   io::parse_coalgebra(io::load_file(*fc2)));
        r.items.push_back({"check-hom", ok ? "pass" : "fail",
                           "hyperspace image of the structure map commutes with the map",
                           ok ? "" : "the square does not commute", json(ok), 1});
      };
    });
  }
  {
    auto* c = coalg_cmd->add_subcommand("classify", "reflexivity / transitivity readings");
    auto file = std::make_shared<std::string>();
    c->add_option("file", *file, "coalgebra JSON")->required();
    c->callback([&action, file] {
      action = [file](Report& r) {
        CoalgebraClassification cls = classify(io::parse_coalgebra(io::load_file(*file)));
        json result;
        result["relational_reflexive"] = cls.relational_reflexive;
        result["relational_transitive"] = cls.relational_transitive;
        result["kleisli_reflexive_literal"] = cls.kleisli_reflexive_literal;
        result["kleisli_transitive_literal"] = cls.kleisli_transitive_literal;
        r.items.push_back({"classify", "pass", "", "", std::move(result), 1});
      };
    });
  }
  {
    auto* c = coalg_cmd->add_subcommand("compose", "Kleisli composition (outer inner)");
    auto fa = std::make_shared<std::string>();
    auto fb = std::make_shared<std::string>();
    c->add_option("outer", *fa, "coalgebra JSON")->required();
    c->add_option("inner", *fb, "coalgebra JSON")->required();
    c->callback([&action, fa, fb] {
      action = [fa, fb](Report& r) {
        Coalgebra composed = kleisli_compose(io::parse_coalgebra(io::load_file(*fa)),
                                             io::parse_coalgebra(io::load_file(*fb)));
        r.items.push_back({"compose", "pass", "", "", io::to_json(composed), 1});
      };
    });
  }

  // ---- dual -----------------------------------------------------------
  auto* dual_cmd = app.add_subcommand("dual", "dual function algebras");
  dual_cmd->require_subcommand(1);
  {
    auto* c = dual_cmd->add_subcommand("check-axioms", "the equational theory on a grid algebra");
    auto file = std::make_shared<std::string>();
    auto circ = std::make_shared<std::string>("tensor");
    auto verbatim = std::make_shared<bool>(false);
    auto sup = std::make_shared<std::string>("0,1/4,1/2,3/4,1");
    c->add_option("--poset", *file, "poset JSON")->required();
    c->add_option("--circ", *circ, "monoid interpretation: tensor | oplus");
    c->add_flag("--verbatim-top", *verbatim, "check top <= x instead of x <= top");
    c->add_option("--sup-samples", *sup, "comma list of rationals for the sup implication");
    c->callback([&action, &opt, file, circ, verbatim, sup] {
      action = [&opt, file, circ, verbatim, sup](Report& r) {
        CircSemantics sem;
        if (*circ == "tensor")
          sem = CircSemantics::Tensor;
        else if (*circ == "oplus")
          sem = CircSemantics::TruncatedPlus;
        else
          fail("ParseError", "--circ must be tensor or oplus");
        FinPoset x = io::parse_poset(io::load_file(*file));
        AlgebraInstance inst = AlgebraInstance::grid_algebra(std::move(x), opt.grid, sem);
        std::vector<Rat01> samples;
        for (const std::string& s : split_names(*sup)) samples.push_back(Rat01::parse(s));
        AxiomCheckOptions axopts;
        axopts.verbatim_top = *verbatim;
        axopts.seed = opt.seed;
        for (const AxiomResult& res : check_axioms(inst, samples, axopts)) {
          ReportItem item;
          item.name = res.name;
          item.status = res.pass ? "pass" : "fail";
          item.law = res.law;
          item.witness = res.witness;
          item.cases = res.cases;
          item.result = json{{"exhaustive", res.exhaustive}};
          r.items.push_back(std::move(item));
        }
      };
    });
  }
  {
    auto* c = dual_cmd->add_subcommand("density", "closure distance to targets");
    auto file = std::make_shared<std::string>();
    auto targets = std::make_shared<std::vector<std::string>>();
    auto gens = std::make_shared<std::vector<std::string>>();
    c->add_option("--poset", *file, "poset JSON")->required();
    c->add_option("--target", *targets, "valued-map JSON (repeatable)")->required();
    c->add_option("--generators", *gens,
                  "valued-map JSON (repeatable; defaults to all upper-set indicators)");
    c->callback([&action, &opt, file, targets, gens] {
      action = [&opt, file, targets, gens](Report& r) {
        FinPoset x = io::parse_poset(io::load_file(*file));
        std::vector<ValuedMap> target_maps;
        for (const std::string& t : *targets)
          target_maps.push_back(io::parse_valued_map(io::load_file(t)));
        std::vector<ValuedMap> generators;
        if (gens->empty())
          generators = upset_indicators(x);
        else
          for (const std::string& g : *gens)
            generators.push_back(io::parse_valued_map(io::load_file(g)));
        Rat01 eps = Rat01::parse(opt.eps);
        DensityReport rep = density_check(x, generators, target_maps, eps, opt.depth, opt.grid);
        ReportItem pre;
        pre.name = "generators";
        pre.status =
            rep.generators_point_separating && rep.generators_initial ? "pass" : "fail";
        pre.law = "generator cone point-separating and initial";
        if (!rep.generators_point_separating) pre.witness = "cone is not point-separating";
        if (!rep.generators_initial) pre.witness += " cone is not initial";
        r.items.push_back(std::move(pre));
        for (size_t i = 0; i < rep.targets.size(); ++i) {
          const auto& t = rep.targets[i];
          ReportItem item;
          item.name = "target-" + std::to_string(i);
          item.status = t.hit ? "pass" : "fail";
          item.law = "a closure member within eps of the target";
          item.witness = t.hit ? "" : "best distance " + t.best_distance.str();
          item.result = json{{"best_distance", t.best_distance.str()},
                             {"witness_term", t.witness_term}};
          r.items.push_back(std::move(item));
        }
      };
    });
  }
  {
    auto* c = dual_cmd->add_subcommand("extend", "least monotone extension of partial values");
    auto fposet = std::make_shared<std::string>();
    auto fpartial = std::make_shared<std::string>();
    c->add_option("--poset", *fposet, "poset JSON")->required();
    c->add_option("--partial", *fpartial, "values JSON: {\"values\": {\"a\": \"1/2\"}}")
        ->required();
    c->callback([&action, fposet, fpartial] {
      action = [fposet, fpartial](Report& r) {
        FinPoset x = io::parse_poset(io::load_file(*fposet));
        json j = io::load_file(*fpartial);
        if (!j.contains("values") || !j.at("values").is_object())
          fail("ParseError", "partial file needs a values object");
        std::vector<int> subset;
        std::vector<Rat01> values;
        for (const auto& [k, v] : j.at("values").items()) {
          subset.push_back(x.index_of(k));
          values.push_back(Rat01::parse(v.get<std::string>()));
        }
        ValuedMap f = monotone_extend(x, subset, values);
        r.items.push_back({"extend", "pass", "", "", io::to_json(f), 1});
      };
    });
  }
  {
    auto* c = dual_cmd->add_subcommand("separate", "family agreeing on A, constant on B");
    auto fposet = std::make_shared<std::string>();
    auto aset = std::make_shared<std::string>();
    auto bset = std::make_shared<std::string>();
    auto us = std::make_shared<std::string>("0,1/2,1");
    c->add_option("--poset", *fposet, "poset JSON")->required();
    c->add_option("--a", *aset, "comma list of elements")->required();
    c->add_option("--b", *bset, "comma list of elements")->required();
    c->add_option("--u", *us, "comma list of constants for B");
    c->callback([&action, fposet, aset, bset, us] {
      action = [fposet, aset, bset, us](Report& r) {
        FinPoset x = io::parse_poset(io::load_file(*fposet));
        std::vector<Rat01> u_values;
        for (const std::string& s : split_names(*us)) u_values.push_back(Rat01::parse(s));
        std::vector<ValuedMap> fam =
            separating_family(x, subset_of(x, *aset), subset_of(x, *bset), u_values);
        json result = json::array();
        for (const ValuedMap& f : fam) result.push_back(io::to_json(f));
        r.items.push_back({"separate", "pass", "", "", std::move(result),
                           static_cast<long>(fam.size())});
      };
    });
  }
  {
    auto* c = dual_cmd->add_subcommand("eq-present", "map pairs whose agreement set is A");
    auto fposet = std::make_shared<std::string>();
    auto aset = std::make_shared<std::string>();
    c->add_option("--poset", *fposet, "poset JSON")->required();
    c->add_option("--a", *aset, "comma list of elements")->required();
    c->callback([&action, fposet, aset] {
      action = [fposet, aset](Report& r) {
        FinPoset x = io::parse_poset(io::load_file(*fposet));
        Bits a = subset_of(x, *aset);
        auto pairs = equalizer_presentation(x, a);
        bool ok = joint_agreement(x, pairs) == a;
        json result = json::array();
        for (const auto& [h, k] : pairs)
          result.push_back(json{{"h", io::to_json(h)}, {"k", io::to_json(k)}});
        r.items.push_back({"eq-present", ok ? "pass" : "fail",
                           "joint agreement set equals A",
                           ok ? "" : "agreement set differs from A", std::move(result),
                           static_cast<long>(pairs.size())});
      };
    });
  }

  // ---- delta ----------------------------------------------------------
  auto* delta_cmd = app.add_subcommand("delta", "the countable-arity limit operation");
  delta_cmd->require_subcommand(1);
  {
    auto* c = delta_cmd->add_subcommand("eval", "evaluate on an eventually-constant sequence");
    auto file = std::make_shared<std::string>();
    c->add_option("--seq", *file, "sequence JSON")->required();
    c->callback([&action, file] {
      action = [file](Report& r) {
        Seq01 s = io::parse_seq(io::load_file(*file));
        Seq01 tamed = rate_limit(running_join(s));
        Rat01 v = limit_value(tamed, Rat01::zero());
        json result;
        result["delta"] = v.str();
        result["in_limit_class"] = in_limit_class(s);
        r.items.push_back({"delta", "pass", "limit of the rate-limited running join",
                           "", std::move(result), 1});
      };
    });
  }

  // ---- metric ---------------------------------------------------------
  auto* metric_cmd = app.add_subcommand("metric", "finite non-symmetric metrics");
  metric_cmd->require_subcommand(1);
  {
    auto* c = metric_cmd->add_subcommand("order", "the induced order and separation");
    auto file = std::make_shared<std::string>();
    c->add_option("file", *file, "metric JSON")->required();
    c->callback([&action, file] {
      action = [file](Report& r) {
        FinMetric m = io::parse_metric(io::load_file(*file));
        InducedOrder ord = order_of(m);
        json result;
        result["separated"] = is_separated(m);
        result["antisymmetric"] = ord.antisymmetric;
        json pairs = json::array();
        for (int i = 0; i < m.size(); ++i)
          for (int j = 0; j < m.size(); ++j)
            if (i != j && ord.leq[i].test(j))
              pairs.push_back(json::array({m.name(i), m.name(j)}));
        result["leq"] = std::move(pairs);
        if (ord.poset) result["poset"] = io::to_json(*ord.poset);
        r.items.push_back({"order", "pass", "", "", std::move(result), 1});
      };
    });
  }
  {
    auto* c = metric_cmd->add_subcommand("net", "a subset whose distance cone is initial");
    auto file = std::make_shared<std::string>();
    c->add_option("file", *file, "metric JSON")->required();
    c->callback([&action, file] {
      action = [file](Report& r) {
        FinMetric m = io::parse_metric(io::load_file(*file));
        FinMetric sym = symmetrize(m);
        std::vector<int> net = epsilon_net(m);
        bool ok = yoneda_initial(m, net);
        json names = json::array();
        for (int i : net) names.push_back(m.name(i));
        json result;
        result["net"] = std::move(names);
        result["initial"] = ok;
        result["symmetrized_diameter_one"] = [&] {
          for (int i = 0; i < sym.size(); ++i)
            for (int j = 0; j < sym.size(); ++j)
              if (!(sym.dist(i, j) <= Rat01::one())) return false;
          return true;
        }();
        r.items.push_back({"net", ok ? "pass" : "fail",
                           "the distance cone from the net is initial",
                           ok ? "" : "emitted net fails the inequality", std::move(result), 1});
      };
    });
  }
  {
    auto* c = metric_cmd->add_subcommand("check-initial", "initiality inequality for a subset");
    auto file = std::make_shared<std::string>();
    auto sub = std::make_shared<std::string>();
    c->add_option("file", *file, "metric JSON")->required();
    c->add_option("--subset", *sub, "comma list of elements")->required();
    c->callback([&action, file, sub] {
      action = [file, sub](Report& r) {
        FinMetric m = io::parse_metric(io::load_file(*file));
        std::vector<int> s;
        for (const std::string& name : split_names(*sub)) s.push_back(m.index_of(name));
        bool ok = yoneda_initial(m, s);
        r.items.push_back({"check-initial", ok ? "pass" : "fail",
                           "join over the net of truncated distance differences bounds the distance",
                           ok ? "" : "inequality fails", json(ok), 1});
      };
    });
  }
  {
    auto* c = metric_cmd->add_subcommand("product", "weighted product of metrics");
    auto files = std::make_shared<std::vector<std::string>>();
    c->add_option("files", *files, "metric JSON files")->required()->expected(-1);
    c->callback([&action, files] {
      action = [files](Report& r) {
        std::vector<FinMetric> ms;
        for (const std::string& f : *files) ms.push_back(io::parse_metric(io::load_file(f)));
        FinMetric prod = product_metric(ms);
        r.items.push_back({"product", "pass", "", "", io::to_json(prod), 1});
      };
    });
  }

  // ---- suite ----------------------------------------------------------
  auto* suite_cmd = app.add_subcommand("suite", "property-test suites and file checks");
  suite_cmd->require_subcommand(1);
  {
    auto* c = suite_cmd->add_subcommand("run", "run every law suite");
    c->callback([&action, &opt] {
      action = [&opt](Report& r) {
        SuiteOptions sopts;
        sopts.seed = opt.seed;
        sopts.max_size = opt.max_size;
        sopts.grid_q = opt.grid;
        sopts.depth = opt.depth;
        sopts.samples = opt.samples;
        for (const auto& [suite, laws] : run_all_laws(sopts)) push_laws(r, suite, laws);
      };
    });
  }
  {
    auto* c = suite_cmd->add_subcommand("roundtrip", "parse-serialize-parse identity");
    auto files = std::make_shared<std::vector<std::string>>();
    c->add_option("files", *files, "data files")->required()->expected(-1);
    c->callback([&action, files] {
      action = [files](Report& r) {
        for (const std::string& f : *files) {
          json j = io::load_file(f);
          bool ok = io::roundtrip_value_equal(j);
          r.items.push_back({f, ok ? "pass" : "fail", "parse . serialize . parse = parse",
                             ok ? "" : "values differ after a round trip",
                             json(io::detect_format(j)), 1});
        }
      };
    });
  }

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::string command;
  for (int i = 0; i < argc; ++i) {
    if (i) command += " ";
    command += argv[i];
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      return app.exit(e);  // --help and friends
    }
    Report r;
    r.command = command;
    r.seed = opt.seed;
    r.items.push_back({"parse", "error", "", std::string("UnknownVerb: ") + e.what(), {}, 0});
    finalize_status(r);
    std::cout << to_json(r).dump(2) << "\n";
    return 2;
  }

  Report report;
  report.command = command;
  report.seed = opt.seed;
  auto started = std::chrono::steady_clock::now();
  try {
    if (action) action(report);
  } catch (const Error& e) {
    report.items.push_back({e.kind(), "error", "", e.what(), {}, 0});
  } catch (const std::exception& e) {
    report.items.push_back({"InternalError", "error", "", e.what(), {}, 0});
  }
  report.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();
  finalize_status(report);

  std::string text = to_json(report).dump(2) + "\n";
  if (!opt.report_path.empty()) {
    std::ofstream out(opt.report_path);
    out << text;
  } else {
    std::cout << text;
  }
  return exit_code(report);
}
