#include "poskit/dualalg.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>
#include <map>
#include <set>

#include "poskit/error.hpp"
#include "poskit/rng.hpp"
#include "poskit/seqdelta.hpp"

namespace poskit {

std::vector<ValuedMap> upset_indicators(const FinPoset& x) {
  std::vector<ValuedMap> out;
  for (const Bits& u : all_upper_sets(x)) out.push_back(ValuedMap::indicator(x, u));
  return out;
}

std::vector<ValuedMap> principal_upset_indicators(const FinPoset& x) {
  std::vector<ValuedMap> out;
  for (int i = 0; i < x.size(); ++i) out.push_back(ValuedMap::indicator(x, x.up_of(i)));
  return out;
}

std::vector<ValuedMap> enumerate_grid_maps(const FinPoset& x, unsigned q) {
  std::vector<Rat01> grid = unit_grid(q);
  std::vector<int> order = x.linear_extension();
  const int n = x.size();
  std::vector<ValuedMap> out;
  std::vector<unsigned> level(n, 0);  // grid index per element
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      std::vector<Rat01> vals(n);
      for (int i = 0; i < n; ++i) vals[i] = grid[level[i]];
      out.emplace_back(x, std::move(vals));
      return;
    }
    int e = order[pos];
    unsigned lo = 0;
    for (int p = 0; p < pos; ++p)
      if (x.leq(order[p], e)) lo = std::max(lo, level[order[p]]);
    for (unsigned v = lo; v <= q; ++v) {
      level[e] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

ValuedMap density_witness(const ValuedMap& psi) {
  const FinPoset& x = psi.space();
  ValuedMap acc = ValuedMap::bottom(x);
  for (int i = 0; i < x.size(); ++i)
    acc = vm_join(acc, vm_tensor(ValuedMap::indicator(x, x.up_of(i)), psi.at(i)));
  return acc;
}

ValuedMap AlgebraInstance::circ(const ValuedMap& a, const ValuedMap& b) const {
  return circ_ == CircSemantics::Tensor ? vm_circ(a, b) : vm_oplus(a, b);
}

AlgebraInstance AlgebraInstance::grid_algebra(FinPoset space, unsigned q, CircSemantics circ) {
  std::vector<ValuedMap> carrier = enumerate_grid_maps(space, q);
  return AlgebraInstance(std::move(space), std::move(carrier), unit_grid(q), circ);
}

AlgebraInstance AlgebraInstance::explicit_carrier(FinPoset space, std::vector<ValuedMap> maps,
                                                  std::vector<Rat01> scalars,
                                                  CircSemantics circ) {
  AlgebraInstance inst(std::move(space), std::move(maps), std::move(scalars), circ);
  std::set<std::vector<Rat01>> members;
  for (const ValuedMap& m : inst.carrier_) {
    if (m.space() != inst.space_) fail("SpaceMismatch", "carrier map over a different space");
    members.insert(m.values());
  }
  auto require = [&](const ValuedMap& m, const std::string& what) {
    if (!members.count(m.values()))
      fail("CarrierNotClosed", "carrier misses " + what + " = " + vm_str(m));
  };
  require(inst.bot(), "bottom");
  require(inst.top(), "top");
  for (const ValuedMap& a : inst.carrier_) {
    for (const ValuedMap& b : inst.carrier_) {
      require(inst.join(a, b), "a join");
      require(inst.circ(a, b), "a monoid product");
    }
    for (const Rat01& u : inst.scalars_) {
      require(inst.act_tensor(a, u), "an action value");
      require(inst.act_pitchfork(a, u), "a power value");
    }
  }
  return inst;
}

namespace {

struct ScanOutcome {
  bool pass = true;
  std::string witness;
  long cases = 0;
  bool exhaustive = true;
};

// Runs `body` over tuples of carrier indices: all of them when the tuple
// count stays under the cap, otherwise bottom/top corner tuples plus a
// seeded sample. `body` returns an empty string or a witness.
ScanOutcome scan_tuples(const AlgebraInstance& inst, int arity, const AxiomCheckOptions& opts,
                        const std::function<std::string(const std::vector<const ValuedMap*>&)>& body) {
  const auto& carrier = inst.carrier();
  const long n = static_cast<long>(carrier.size());
  ScanOutcome out;
  if (n == 0) return out;

  auto run = [&](const std::vector<int>& idx) {
    std::vector<const ValuedMap*> args;
    args.reserve(idx.size());
    for (int i : idx) args.push_back(&carrier[i]);
    ++out.cases;
    std::string w = body(args);
    if (!w.empty() && out.pass) {
      out.pass = false;
      out.witness = w;
    }
  };

  long total = 1;
  bool overflow = false;
  for (int a = 0; a < arity; ++a) {
    total *= n;
    if (total > opts.exhaustive_cap) {
      overflow = true;
      break;
    }
  }
  if (!overflow) {
    std::vector<int> idx(arity, 0);
    for (;;) {
      run(idx);
      if (!out.pass) return out;
      int pos = arity - 1;
      while (pos >= 0 && idx[pos] + 1 == n) idx[pos--] = 0;
      if (pos < 0) break;
      ++idx[pos];
    }
    return out;
  }

  out.exhaustive = false;
  std::vector<int> special;
  for (int cand : {0, static_cast<int>(n - 1)}) special.push_back(cand);
  for (size_t i = 0; i < carrier.size(); ++i)
    if (carrier[i] == inst.bot() || carrier[i] == inst.top()) special.push_back(static_cast<int>(i));
  std::sort(special.begin(), special.end());
  special.erase(std::unique(special.begin(), special.end()), special.end());

  std::vector<int> idx(arity, 0);
  std::function<void(int)> corners = [&](int pos) {
    if (!out.pass) return;
    if (pos == arity) {
      run(idx);
      return;
    }
    for (int s : special) {
      idx[pos] = s;
      corners(pos + 1);
    }
  };
  corners(0);
  if (!out.pass) return out;

  Rng rng(opts.seed);
  for (int t = 0; t < opts.sample_budget && out.pass; ++t) {
    for (int a = 0; a < arity; ++a) idx[a] = static_cast<int>(rng.below(n));
    run(idx);
  }
  return out;
}

}  // namespace

std::vector<AxiomResult> check_axioms(const AlgebraInstance& inst,
                                      const std::vector<Rat01>& sup_samples,
                                      const AxiomCheckOptions& opts) {
  std::vector<AxiomResult> results;
  using Args = std::vector<const ValuedMap*>;

  auto add = [&](const std::string& name, const std::string& law, int arity,
                 const std::function<std::string(const Args&)>& body) {
    ScanOutcome o = scan_tuples(inst, arity, opts, body);
    results.push_back(AxiomResult{name, law, o.pass, o.witness, o.cases, o.exhaustive});
  };
  auto eq_witness = [&](const ValuedMap& lhs, const ValuedMap& rhs, const std::string& ctx) {
    if (lhs == rhs) return std::string();
    return ctx + ": lhs " + vm_str(lhs) + " != rhs " + vm_str(rhs);
  };

  add("join-idempotent", "x v x = x", 1, [&](const Args& a) {
    return eq_witness(inst.join(*a[0], *a[0]), *a[0], "x=" + vm_str(*a[0]));
  });
  add("join-associative", "x v (y v z) = (x v y) v z", 3, [&](const Args& a) {
    return eq_witness(inst.join(*a[0], inst.join(*a[1], *a[2])),
                      inst.join(inst.join(*a[0], *a[1]), *a[2]),
                      "x=" + vm_str(*a[0]) + " y=" + vm_str(*a[1]) + " z=" + vm_str(*a[2]));
  });
  add("join-bottom", "x v bot = x", 1, [&](const Args& a) {
    return eq_witness(inst.join(*a[0], inst.bot()), *a[0], "x=" + vm_str(*a[0]));
  });
  add("join-commutative", "x v y = y v x", 2, [&](const Args& a) {
    return eq_witness(inst.join(*a[0], *a[1]), inst.join(*a[1], *a[0]),
                      "x=" + vm_str(*a[0]) + " y=" + vm_str(*a[1]));
  });

  add("action-unit", "x (x) 1 = x", 1, [&](const Args& a) {
    return eq_witness(inst.act_tensor(*a[0], Rat01::one()), *a[0], "x=" + vm_str(*a[0]));
  });
  add("action-composition", "(x (x) u) (x) v = x (x) (u (x) v)", 1, [&](const Args& a) {
    for (const Rat01& u : inst.scalars())
      for (const Rat01& v : inst.scalars()) {
        ValuedMap lhs = inst.act_tensor(inst.act_tensor(*a[0], u), v);
        ValuedMap rhs = inst.act_tensor(*a[0], luk_tensor(u, v));
        if (lhs != rhs)
          return "x=" + vm_str(*a[0]) + " u=" + u.str() + " v=" + v.str();
      }
    return std::string();
  });
  add("action-bottom", "bot (x) u = bot", 1, [&](const Args&) {
    for (const Rat01& u : inst.scalars())
      if (inst.act_tensor(inst.bot(), u) != inst.bot()) return "u=" + u.str();
    return std::string();
  });
  add("action-join", "(x v y) (x) u = (x (x) u) v (y (x) u)", 2, [&](const Args& a) {
    for (const Rat01& u : inst.scalars()) {
      ValuedMap lhs = inst.act_tensor(inst.join(*a[0], *a[1]), u);
      ValuedMap rhs = inst.join(inst.act_tensor(*a[0], u), inst.act_tensor(*a[1], u));
      if (lhs != rhs) return "x=" + vm_str(*a[0]) + " y=" + vm_str(*a[1]) + " u=" + u.str();
    }
    return std::string();
  });
  add("action-monotone", "u <= v implies x (x) u <= x (x) v", 1, [&](const Args& a) {
    for (const Rat01& u : inst.scalars())
      for (const Rat01& v : inst.scalars()) {
        if (!(u <= v)) continue;
        if (!inst.leq(inst.act_tensor(*a[0], u), inst.act_tensor(*a[0], v)))
          return "x=" + vm_str(*a[0]) + " u=" + u.str() + " v=" + v.str();
      }
    return std::string();
  });
  add("action-sup", "(x (x) u <= y for all u in S) implies x (x) max S <= y", 2,
      [&](const Args& a) {
        const size_t m = sup_samples.size();
        for (uint64_t mask = 1; mask < (uint64_t{1} << m); ++mask) {
          bool all_below = true;
          Rat01 sup = Rat01::zero();
          for (size_t i = 0; i < m; ++i) {
            if (!(mask >> i & 1)) continue;
            sup = max(sup, sup_samples[i]);
            if (!inst.leq(inst.act_tensor(*a[0], sup_samples[i]), *a[1])) {
              all_below = false;
              break;
            }
          }
          if (all_below && !inst.leq(inst.act_tensor(*a[0], sup), *a[1]))
            return "x=" + vm_str(*a[0]) + " y=" + vm_str(*a[1]) + " |S|>=" +
                   std::to_string(std::popcount(mask));
        }
        return std::string();
      });
  add("adjunction", "x (x) u <= y iff x <= y -| u", 2, [&](const Args& a) {
    for (const Rat01& u : inst.scalars()) {
      bool lhs = inst.leq(inst.act_tensor(*a[0], u), *a[1]);
      bool rhs = inst.leq(*a[0], inst.act_pitchfork(*a[1], u));
      if (lhs != rhs) return "x=" + vm_str(*a[0]) + " y=" + vm_str(*a[1]) + " u=" + u.str();
    }
    return std::string();
  });

  add("monoid-commutative", "x o y = y o x", 2, [&](const Args& a) {
    return eq_witness(inst.circ(*a[0], *a[1]), inst.circ(*a[1], *a[0]),
                      "x=" + vm_str(*a[0]) + " y=" + vm_str(*a[1]));
  });
  add("monoid-associative", "x o (y o z) = (x o y) o z", 3, [&](const Args& a) {
    return eq_witness(inst.circ(*a[0], inst.circ(*a[1], *a[2])),
                      inst.circ(inst.circ(*a[0], *a[1]), *a[2]),
                      "x=" + vm_str(*a[0]) + " y=" + vm_str(*a[1]) + " z=" + vm_str(*a[2]));
  });
  add("monoid-unit", "x o top = x", 1, [&](const Args& a) {
    return eq_witness(inst.circ(*a[0], inst.top()), *a[0], "x=" + vm_str(*a[0]));
  });
  if (opts.verbatim_top) {
    add("top-least-verbatim", "top <= x", 1, [&](const Args& a) {
      if (!inst.leq(inst.top(), *a[0])) return "x=" + vm_str(*a[0]);
      return std::string();
    });
  } else {
    add("top-greatest", "x <= top", 1, [&](const Args& a) {
      if (!inst.leq(*a[0], inst.top())) return "x=" + vm_str(*a[0]);
      return std::string();
    });
  }
  add("monoid-join", "x o (y v z) = (x o y) v (x o z)", 3, [&](const Args& a) {
    return eq_witness(inst.circ(*a[0], inst.join(*a[1], *a[2])),
                      inst.join(inst.circ(*a[0], *a[1]), inst.circ(*a[0], *a[2])),
                      "x=" + vm_str(*a[0]) + " y=" + vm_str(*a[1]) + " z=" + vm_str(*a[2]));
  });
  add("monoid-bottom", "x o bot = bot", 1, [&](const Args& a) {
    return eq_witness(inst.circ(*a[0], inst.bot()), inst.bot(), "x=" + vm_str(*a[0]));
  });
  add("monoid-action", "x o (y (x) u) = (x o y) (x) u", 2, [&](const Args& a) {
    for (const Rat01& u : inst.scalars()) {
      ValuedMap lhs = inst.circ(*a[0], inst.act_tensor(*a[1], u));
      ValuedMap rhs = inst.act_tensor(inst.circ(*a[0], *a[1]), u);
      if (lhs != rhs) return "x=" + vm_str(*a[0]) + " y=" + vm_str(*a[1]) + " u=" + u.str();
    }
    return std::string();
  });

  return results;
}

std::vector<std::pair<ValuedMap, std::string>> generate_closure(
    const std::vector<ValuedMap>& generators, unsigned depth, unsigned grid_q) {
  std::vector<std::pair<ValuedMap, std::string>> items;
  std::set<std::vector<Rat01>> seen;
  for (size_t i = 0; i < generators.size(); ++i)
    if (seen.insert(generators[i].values()).second)
      items.emplace_back(generators[i], "g" + std::to_string(i));
  std::vector<Rat01> grid = unit_grid(grid_q);

  size_t frontier_begin = 0;
  for (unsigned round = 0; round < depth; ++round) {
    size_t size_before = items.size();
    auto offer = [&](ValuedMap m, std::string term) {
      if (seen.insert(m.values()).second) items.emplace_back(std::move(m), std::move(term));
    };
    for (size_t i = 0; i < size_before; ++i) {
      // Pairs with at least one member from the previous round.
      size_t j0 = i < frontier_begin ? frontier_begin : 0;
      for (size_t j = j0; j < size_before; ++j) {
        offer(vm_join(items[i].first, items[j].first),
              "(" + items[i].second + " v " + items[j].second + ")");
        offer(vm_circ(items[i].first, items[j].first),
              "(" + items[i].second + " o " + items[j].second + ")");
      }
      if (i >= frontier_begin || round == 0) {
        for (const Rat01& u : grid) {
          offer(vm_tensor(items[i].first, u), "(" + items[i].second + " (x) " + u.str() + ")");
          offer(vm_pitchfork(items[i].first, u), "(" + items[i].second + " -| " + u.str() + ")");
          offer(vm_minus(items[i].first, u), "(" + items[i].second + " - " + u.str() + ")");
        }
      }
    }
    if (items.size() == size_before) break;  // closure reached early
    frontier_begin = size_before;
  }
  return items;
}

DensityReport density_check(const FinPoset& x, const std::vector<ValuedMap>& generators,
                            const std::vector<ValuedMap>& targets, const Rat01& epsilon,
                            unsigned depth, unsigned grid_q) {
  DensityReport report;
  // Point-separating and initial as a cone into [0,1].
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < x.size(); ++j) {
      if (i != j) {
        bool separated = false;
        for (const ValuedMap& g : generators)
          if (g.at(i) != g.at(j)) {
            separated = true;
            break;
          }
        if (!separated) report.generators_point_separating = false;
      }
      bool dominated = true;
      for (const ValuedMap& g : generators)
        if (!(g.at(i) <= g.at(j))) {
          dominated = false;
          break;
        }
      if (dominated && !x.leq(i, j)) report.generators_initial = false;
    }

  // With every principal indicator among the generators the closed-form
  // witness certifies an exact hit.
  bool have_principals = true;
  {
    std::set<std::vector<Rat01>> gen_values;
    for (const ValuedMap& g : generators) gen_values.insert(g.values());
    for (const ValuedMap& p : principal_upset_indicators(x))
      if (!gen_values.count(p.values())) {
        have_principals = false;
        break;
      }
  }

  if (have_principals) {
    for (const ValuedMap& psi : targets) {
      ValuedMap w = density_witness(psi);
      Rat01 d = vm_sup_distance(w, psi);
      report.targets.push_back(
          DensityTargetResult{d, "join over x of (ind(up x) (x) value at x)", d <= epsilon});
    }
    return report;
  }

  auto closure = generate_closure(generators, depth, grid_q);
  for (const ValuedMap& psi : targets) {
    DensityTargetResult r{Rat01::one(), "", false};
    bool first = true;
    for (const auto& [m, term] : closure) {
      Rat01 d = vm_sup_distance(m, psi);
      if (first || d < r.best_distance) {
        r.best_distance = d;
        r.witness_term = term;
        first = false;
      }
    }
    if (first) r.witness_term = "(empty closure)";
    r.hit = !first && r.best_distance <= epsilon;
    report.targets.push_back(std::move(r));
  }
  return report;
}

ValuedMap monotone_extend(const FinPoset& x, const std::vector<int>& subset,
                          const std::vector<Rat01>& values) {
  assert(subset.size() == values.size());
  for (size_t a = 0; a < subset.size(); ++a)
    for (size_t b = 0; b < subset.size(); ++b)
      if (x.leq(subset[a], subset[b]) && !(values[a] <= values[b]))
        fail("NotMonotone", "partial data violates the induced order at (" +
                                x.name(subset[a]) + ", " + x.name(subset[b]) + ")");
  std::vector<Rat01> vals(x.size(), Rat01::zero());
  for (int y = 0; y < x.size(); ++y)
    for (size_t a = 0; a < subset.size(); ++a)
      if (x.leq(subset[a], y)) vals[y] = max(vals[y], values[a]);
  return ValuedMap(x, std::move(vals));
}

std::vector<ValuedMap> separating_family(const FinPoset& x, const Bits& a, const Bits& b,
                                         const std::vector<Rat01>& us) {
  if (a.intersects(b)) fail("PreconditionViolated", "the two subsets overlap");
  Bits hull = x.up_closure(b);
  hull &= x.down_closure(b);
  if (hull != b) fail("PreconditionViolated", "second subset is not order-convex");

  Bits a_upper = a & x.up_closure(b);    // forced to 1
  Bits a_lower = a & x.down_closure(b);  // forced to 0
  // The convexity preconditions exclude any a0 >= some b above an a1; check
  // anyway so a violation surfaces here rather than inside the extension.
  for (int i : a_upper.members())
    for (int j : a_lower.members())
      if (x.leq(i, j))
        fail("PreconditionViolated", "separation orientation impossible at (" + x.name(i) +
                                         ", " + x.name(j) + ")");

  // Least monotone spread of the 0/1 data over all of A.
  std::vector<int> a_idx = a.members();
  std::vector<Rat01> a_vals;
  a_vals.reserve(a_idx.size());
  for (int i : a_idx) {
    bool one = false;
    for (int s : a_upper.members())
      if (x.leq(s, i)) {
        one = true;
        break;
      }
    a_vals.push_back(one ? Rat01::one() : Rat01::zero());
  }

  std::vector<ValuedMap> out;
  for (const Rat01& u : us) {
    std::vector<int> idx = a_idx;
    std::vector<Rat01> vals = a_vals;
    for (int i : b.members()) {
      idx.push_back(i);
      vals.push_back(u);
    }
    out.push_back(monotone_extend(x, idx, vals));
  }
  return out;
}

std::vector<std::pair<ValuedMap, ValuedMap>> equalizer_presentation(const FinPoset& x,
                                                                    const Bits& a) {
  std::vector<std::pair<ValuedMap, ValuedMap>> out;
  for (int i = 0; i < x.size(); ++i) {
    if (a.test(i)) continue;
    Bits b(x.size());
    b.set(i);  // {i} is order-convex by antisymmetry
    std::vector<ValuedMap> fam = separating_family(x, a, b, {Rat01::zero(), Rat01::one()});
    out.emplace_back(std::move(fam[0]), std::move(fam[1]));
  }
  return out;
}

Bits joint_agreement(const FinPoset& x,
                     const std::vector<std::pair<ValuedMap, ValuedMap>>& pairs) {
  Bits agree = Bits::full(x.size());
  for (const auto& [h, k] : pairs)
    for (int i = 0; i < x.size(); ++i)
      if (h.at(i) != k.at(i)) agree.reset(i);
  return agree;
}

ValuedMap delta_pointwise(const std::vector<ValuedMap>& prefix, const ValuedMap& tail) {
  for (const ValuedMap& m : prefix)
    if (m.space() != tail.space()) fail("SpaceMismatch", "sequence of maps over different spaces");
  std::vector<Rat01> vals;
  vals.reserve(tail.space().size());
  for (int i = 0; i < tail.space().size(); ++i) {
    std::vector<Rat01> seq;
    seq.reserve(prefix.size());
    for (const ValuedMap& m : prefix) seq.push_back(m.at(i));
    vals.push_back(delta(Seq01::eventually(std::move(seq), tail.at(i))));
  }
  return ValuedMap(tail.space(), std::move(vals));
}

}  // namespace poskit
