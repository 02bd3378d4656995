#include "poskit/generators.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "poskit/error.hpp"
#include "poskit/quantale.hpp"

namespace poskit {

std::vector<std::string> default_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) {
    if (i < 26)
      out.push_back(std::string(1, static_cast<char>('a' + i)));
    else
      out.push_back("e" + std::to_string(i));
  }
  return out;
}

std::vector<FinPoset> all_posets_on(const std::vector<std::string>& names) {
  const int n = static_cast<int>(names.size());
  if (n == 0) return {FinPoset::closure_of({}, {})};
  std::vector<std::pair<int, int>> off;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) off.emplace_back(i, j);
  std::set<std::vector<uint8_t>> seen;
  std::vector<FinPoset> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << off.size()); ++mask) {
    std::vector<Bits> up(n, Bits(n));
    for (int i = 0; i < n; ++i) up[i].set(i);
    for (size_t k = 0; k < off.size(); ++k)
      if (mask >> k & 1) up[off[k].first].set(off[k].second);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (up[i].test(k)) up[i] |= up[k];
    bool antisym = true;
    for (int i = 0; i < n && antisym; ++i)
      for (int j = i + 1; j < n; ++j)
        if (up[i].test(j) && up[j].test(i)) {
          antisym = false;
          break;
        }
    if (!antisym) continue;
    std::vector<uint8_t> key;
    key.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) key.push_back(up[i].test(j) ? 1 : 0);
    if (seen.insert(std::move(key)).second)
      out.push_back(FinPoset::from_relation(names, up));
  }
  return out;
}

std::vector<FinPoset> all_posets_up_to(int max_n) {
  std::vector<FinPoset> out;
  for (int n = 0; n <= max_n; ++n) {
    auto ps = all_posets_on(default_names(n));
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<FinPoset> dedupe_by_iso(const std::vector<FinPoset>& ps) {
  std::vector<FinPoset> reps;
  for (const FinPoset& p : ps) {
    bool fresh = true;
    for (const FinPoset& r : reps)
      if (is_isomorphic(p, r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(p);
  }
  return reps;
}

std::vector<std::vector<int>> all_monotone_tables(const FinPoset& dom, const FinPoset& cod) {
  std::vector<std::vector<int>> out;
  if (dom.size() == 0) {
    out.push_back({});
    return out;
  }
  if (cod.size() == 0) return out;
  std::vector<int> tab(dom.size(), 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == dom.size()) {
      out.push_back(tab);
      return;
    }
    for (int v = 0; v < cod.size(); ++v) {
      bool ok = true;
      for (int p = 0; p < pos && ok; ++p) {
        if (dom.leq(p, pos) && !cod.leq(tab[p], v)) ok = false;
        if (dom.leq(pos, p) && !cod.leq(v, tab[p])) ok = false;
      }
      if (!ok) continue;
      tab[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

FinPoset random_poset(Rng& rng, int n) {
  std::vector<std::string> names = default_names(n);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.coin() && rng.coin())  // sparse relations give varied shapes
        pairs.emplace_back(names[perm[i]], names[perm[j]]);
  return FinPoset::closure_of(std::move(names), pairs);
}

std::optional<MonoMap> random_mono_map(Rng& rng, const FinPoset& dom, const FinPoset& cod) {
  if (dom.size() == 0) return MonoMap(dom, cod, {});
  if (cod.size() == 0) return std::nullopt;
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<int> tab(dom.size());
    for (int& v : tab) v = static_cast<int>(rng.below(cod.size()));
    bool ok = true;
    for (int i = 0; i < dom.size() && ok; ++i)
      for (int j = 0; j < dom.size() && ok; ++j)
        if (dom.leq(i, j) && !cod.leq(tab[i], tab[j])) ok = false;
    if (ok) return MonoMap(dom, cod, std::move(tab));
  }
  return MonoMap::constant(dom, cod, static_cast<int>(rng.below(cod.size())));
}

Coalgebra random_coalgebra(Rng& rng, const FinPoset& x) {
  const int n = x.size();
  std::vector<Bits> raw(n, Bits(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rng.coin()) raw[i].set(j);
  // Repair into a coalgebra: up-close the values, then force monotonicity by
  // unioning over successors.
  std::vector<Bits> alpha(n, Bits(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (x.leq(i, j)) alpha[i] |= x.up_closure(raw[j]);
  }
  return Coalgebra(x, std::move(alpha));
}

ValuedMap random_valued_map(Rng& rng, const FinPoset& x, unsigned grid_q) {
  std::vector<Rat01> grid = unit_grid(grid_q);
  const int n = x.size();
  std::vector<Rat01> raw(n);
  for (Rat01& v : raw) v = grid[rng.below(grid.size())];
  std::vector<Rat01> vals(n, Rat01::zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x.leq(j, i)) vals[i] = max(vals[i], raw[j]);
  return ValuedMap(x, std::move(vals));
}

Seq01 random_seq(Rng& rng, unsigned grid_q, int max_prefix) {
  std::vector<Rat01> grid = unit_grid(grid_q);
  int len = static_cast<int>(rng.below(max_prefix + 1));
  std::vector<Rat01> prefix;
  for (int i = 0; i < len; ++i) prefix.push_back(grid[rng.below(grid.size())]);
  Rat01 tail = grid[rng.below(grid.size())];
  return Seq01::eventually(std::move(prefix), std::move(tail));
}

Seq01 random_limit_class_seq(Rng& rng, int max_prefix) {
  int len = static_cast<int>(rng.below(max_prefix + 1));
  mpq_class v(static_cast<long>(rng.below(17)), 16);
  std::vector<Rat01> values{Rat01::exact(v)};
  mpq_class bound(1);  // 2^-n at n = 0
  for (int n = 0; n < len; ++n) {
    mpq_class room = 1 - v;
    mpq_class allowed = std::min(bound, room);
    // gap = allowed * j/4, exact
    mpq_class gap = allowed * static_cast<long>(rng.below(5)) / 4;
    v += gap;
    values.push_back(Rat01::exact(v));
    bound /= 2;
  }
  Rat01 tail = values.back();
  values.pop_back();
  return Seq01::eventually(std::move(values), std::move(tail));
}

FinMetric random_metric(Rng& rng, int max_n, unsigned grid_q) {
  const int n = rng.irange(1, max_n);
  std::vector<Rat01> grid = unit_grid(grid_q);
  std::vector<std::vector<Rat01>> d(n, std::vector<Rat01>(n, Rat01::zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) d[i][j] = grid[rng.below(grid.size())];
  // Min-plus closure repairs the triangle law (distances stay in [0,1]).
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        mpq_class via = d[i][k].raw() + d[k][j].raw();
        if (via < d[i][j].raw()) d[i][j] = Rat01::exact(via);
      }
  return FinMetric(default_names(n), std::move(d));
}

namespace {

FinDiagram random_chain_diagram(Rng& rng, int max_objects, int max_elems, bool codirected) {
  const int m = rng.irange(1, std::max(1, max_objects));
  std::vector<std::pair<std::string, FinPoset>> objects;
  for (int i = 0; i < m; ++i) {
    FinPoset p = random_poset(rng, rng.irange(1, std::max(1, max_elems)));
    // distinct element names per object keep thread names readable
    std::vector<std::string> renamed;
    for (const auto& e : p.elements()) renamed.push_back("o" + std::to_string(i) + e);
    std::vector<Bits> up;
    for (int k = 0; k < p.size(); ++k) up.push_back(p.up_of(k));
    objects.emplace_back("i" + std::to_string(i), FinPoset::from_relation(renamed, up));
  }
  std::vector<DiagramArrow> arrows;
  for (int i = 0; i + 1 < m; ++i) {
    // codirected towers point down the chain, filtered ones up
    const FinPoset& dom = codirected ? objects[i + 1].second : objects[i].second;
    const FinPoset& cod = codirected ? objects[i].second : objects[i + 1].second;
    auto f = random_mono_map(rng, dom, cod);
    arrows.push_back(DiagramArrow{"k" + std::to_string(i),
                                  codirected ? objects[i + 1].first : objects[i].first,
                                  codirected ? objects[i].first : objects[i + 1].first, *f});
  }
  return FinDiagram(std::move(objects), std::move(arrows));
}

FinDiagram random_fan_diagram(Rng& rng, int max_objects, int max_elems, bool codirected) {
  const int tops = rng.irange(1, std::max(1, max_objects - 1));
  std::vector<std::pair<std::string, FinPoset>> objects;
  auto fresh = [&](int tag) {
    FinPoset p = random_poset(rng, rng.irange(1, std::max(1, max_elems)));
    std::vector<std::string> renamed;
    for (const auto& e : p.elements()) renamed.push_back("o" + std::to_string(tag) + e);
    std::vector<Bits> up;
    for (int k = 0; k < p.size(); ++k) up.push_back(p.up_of(k));
    return FinPoset::from_relation(renamed, up);
  };
  objects.emplace_back("hub", fresh(0));
  for (int t = 1; t <= tops; ++t) objects.emplace_back("i" + std::to_string(t), fresh(t));
  std::vector<DiagramArrow> arrows;
  for (int t = 1; t <= tops; ++t) {
    const FinPoset& hub = objects[0].second;
    const FinPoset& other = objects[t].second;
    if (codirected) {  // hub is the common lower bound
      auto f = random_mono_map(rng, hub, other);
      arrows.push_back(DiagramArrow{"k" + std::to_string(t), "hub", objects[t].first, *f});
    } else {  // hub is the common upper bound
      auto f = random_mono_map(rng, other, hub);
      arrows.push_back(DiagramArrow{"k" + std::to_string(t), objects[t].first, "hub", *f});
    }
  }
  return FinDiagram(std::move(objects), std::move(arrows));
}

}  // namespace

FinDiagram random_codirected_diagram(Rng& rng, int max_objects, int max_elems) {
  return rng.coin() ? random_chain_diagram(rng, max_objects, max_elems, true)
                    : random_fan_diagram(rng, max_objects, max_elems, true);
}

FinDiagram random_filtered_diagram(Rng& rng, int max_objects, int max_elems) {
  return rng.coin() ? random_chain_diagram(rng, max_objects, max_elems, false)
                    : random_fan_diagram(rng, max_objects, max_elems, false);
}

}  // namespace poskit
