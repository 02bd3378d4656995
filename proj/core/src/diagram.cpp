#include "poskit/diagram.hpp"

#include <algorithm>
#include <set>

#include "poskit/error.hpp"

namespace poskit {

FinDiagram::FinDiagram(std::vector<std::pair<std::string, FinPoset>> objects,
                       std::vector<DiagramArrow> arrows)
    : objects_(std::move(objects)), given_(std::move(arrows)) {
  {
    std::set<std::string> names;
    for (const auto& [name, poset] : objects_)
      if (!names.insert(name).second) fail("ParseError", "duplicate diagram object \"" + name + "\"");
  }
  std::set<std::tuple<int, int, std::vector<int>>> seen;
  for (const auto& a : given_) {
    int s = object_index(a.source), t = object_index(a.target);
    if (a.map.dom() != object(s))
      fail("ParseError", "arrow \"" + a.label + "\" domain differs from object \"" + a.source + "\"");
    if (a.map.cod() != object(t))
      fail("ParseError", "arrow \"" + a.label + "\" codomain differs from object \"" + a.target + "\"");
    if (seen.insert({s, t, a.map.table()}).second) gen_.push_back(Edge{s, t, a.map.table()});
  }
  // Close under composition; terminates because there are finitely many
  // functions between the finitely many finite carriers.
  for (size_t i = 0; i < gen_.size(); ++i)
    for (size_t j = 0; j < gen_.size(); ++j) {
      const Edge& first = gen_[i];
      const Edge& second = gen_[j];
      if (first.tgt != second.src) continue;
      std::vector<int> tab(first.table.size());
      for (size_t k = 0; k < tab.size(); ++k) tab[k] = second.table[first.table[k]];
      if (seen.insert({first.src, second.tgt, tab}).second)
        gen_.push_back(Edge{first.src, second.tgt, std::move(tab)});
    }
}

int FinDiagram::object_index(const std::string& name) const {
  for (int i = 0; i < object_count(); ++i)
    if (objects_[i].first == name) return i;
  fail("UnknownElement", "no diagram object \"" + name + "\"");
}

namespace {

bool has_edge(const std::vector<FinDiagram::Edge>& edges, int s, int t) {
  if (s == t) return true;  // implicit identity
  return std::any_of(edges.begin(), edges.end(),
                     [&](const auto& e) { return e.src == s && e.tgt == t; });
}

}  // namespace

bool FinDiagram::codirected(std::string* why) const {
  const int n = object_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool bounded = false;
      for (int k = 0; k < n && !bounded; ++k)
        bounded = has_edge(gen_, k, i) && has_edge(gen_, k, j);
      if (!bounded) {
        if (why) *why = "objects \"" + object_name(i) + "\", \"" + object_name(j) +
                        "\" have no common lower bound";
        return false;
      }
    }
  for (size_t a = 0; a < gen_.size(); ++a)
    for (size_t b = a + 1; b < gen_.size(); ++b) {
      if (gen_[a].src != gen_[b].src || gen_[a].tgt != gen_[b].tgt) continue;
      bool equalized = false;
      for (const Edge& h : gen_) {
        if (h.tgt != gen_[a].src) continue;
        bool eq = true;
        for (int x : h.table)
          if (gen_[a].table[x] != gen_[b].table[x]) {
            eq = false;
            break;
          }
        if (eq) {
          equalized = true;
          break;
        }
      }
      if (!equalized) {
        if (why) *why = "parallel edges between \"" + object_name(gen_[a].src) + "\" and \"" +
                        object_name(gen_[a].tgt) + "\" are not equalized";
        return false;
      }
    }
  return true;
}

bool FinDiagram::filtered(std::string* why) const {
  const int n = object_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool bounded = false;
      for (int k = 0; k < n && !bounded; ++k)
        bounded = has_edge(gen_, i, k) && has_edge(gen_, j, k);
      if (!bounded) {
        if (why) *why = "objects \"" + object_name(i) + "\", \"" + object_name(j) +
                        "\" have no common upper bound";
        return false;
      }
    }
  for (size_t a = 0; a < gen_.size(); ++a)
    for (size_t b = a + 1; b < gen_.size(); ++b) {
      if (gen_[a].src != gen_[b].src || gen_[a].tgt != gen_[b].tgt) continue;
      bool coequalized = false;
      for (const Edge& h : gen_) {
        if (h.src != gen_[a].tgt) continue;
        bool eq = true;
        for (size_t x = 0; x < gen_[a].table.size(); ++x)
          if (h.table[gen_[a].table[x]] != h.table[gen_[b].table[x]]) {
            eq = false;
            break;
          }
        if (eq) {
          coequalized = true;
          break;
        }
      }
      if (!coequalized) {
        if (why) *why = "parallel edges between \"" + object_name(gen_[a].src) + "\" and \"" +
                        object_name(gen_[a].tgt) + "\" are not coequalized";
        return false;
      }
    }
  return true;
}

DiagramCone make_cone(const FinDiagram& d, FinPoset apex,
                      const std::map<std::string, MonoMap>& legs) {
  std::vector<MonoMap> ordered;
  for (int i = 0; i < d.object_count(); ++i) {
    auto it = legs.find(d.object_name(i));
    if (it == legs.end())
      fail("IncompatibleCone", "cone misses a leg for object \"" + d.object_name(i) + "\"");
    if (it->second.dom() != apex)
      fail("IncompatibleCone", "leg for \"" + d.object_name(i) + "\" is not based at the apex");
    if (it->second.cod() != d.object(i))
      fail("IncompatibleCone", "leg for \"" + d.object_name(i) + "\" has the wrong codomain");
    ordered.push_back(it->second);
  }
  return DiagramCone{std::move(apex), std::move(ordered)};
}

namespace {

void require_cone_commutes(const FinDiagram& d, const DiagramCone& c) {
  if (static_cast<int>(c.legs.size()) != d.object_count())
    fail("IncompatibleCone", "cone leg count differs from the diagram");
  for (int i = 0; i < d.object_count(); ++i) {
    if (c.legs[i].dom() != c.apex) fail("IncompatibleCone", "cone leg not based at the apex");
    if (c.legs[i].cod() != d.object(i)) fail("IncompatibleCone", "cone leg codomain mismatch");
  }
  for (const auto& e : d.generated())
    for (int x = 0; x < c.apex.size(); ++x)
      if (e.table[c.legs[e.src](x)] != c.legs[e.tgt](x))
        fail("IncompatibleCone", "legs do not commute with the edge " +
                                     d.object_name(e.src) + " -> " + d.object_name(e.tgt));
}

}  // namespace

bool limit_check(const FinDiagram& d, const DiagramCone& c, LimitMode mode) {
  std::string why;
  if (!d.codirected(&why)) fail("NotCodirected", why);
  require_cone_commutes(d, c);

  // Jointly injective.
  for (int x = 0; x < c.apex.size(); ++x)
    for (int y = x + 1; y < c.apex.size(); ++y) {
      bool separated = false;
      for (const auto& leg : c.legs)
        if (leg(x) != leg(y)) {
          separated = true;
          break;
        }
      if (!separated) return false;
    }

  // im p_i = intersection of the images of all generated edges into i.
  for (int i = 0; i < d.object_count(); ++i) {
    Bits expected = Bits::full(d.object(i).size());
    for (const auto& e : d.generated()) {
      if (e.tgt != i) continue;
      Bits im(d.object(i).size());
      for (int v : e.table) im.set(v);
      expected &= im;
    }
    if (c.legs[i].image() != expected) return false;
  }

  if (mode == LimitMode::PosComp)
    return is_initial_cone(Cone{c.apex, c.legs});
  return true;
}

DiagramCone direct_limit_cone(const FinDiagram& d) {
  const int m = d.object_count();
  // Enumerate threads: tuples compatible with every generated edge.
  std::vector<std::vector<int>> threads;
  std::vector<int> tuple(m, 0);
  auto compatible = [&](const std::vector<int>& t) {
    for (const auto& e : d.generated())
      if (e.table[t[e.src]] != t[e.tgt]) return false;
    return true;
  };
  bool any_empty = false;
  for (int i = 0; i < m; ++i)
    if (d.object(i).size() == 0) any_empty = true;
  if (!any_empty && m > 0) {
    for (;;) {
      if (compatible(tuple)) threads.push_back(tuple);
      int pos = m - 1;
      while (pos >= 0 && tuple[pos] + 1 == d.object(pos).size()) tuple[pos--] = 0;
      if (pos < 0) break;
      ++tuple[pos];
    }
  } else if (m == 0) {
    threads.push_back({});  // limit of the empty diagram is the one-point space
  }

  std::vector<std::string> names;
  for (const auto& t : threads) {
    std::string n = "<";
    for (int i = 0; i < m; ++i) {
      if (i) n += "|";
      n += d.object(i).name(t[i]);
    }
    n += ">";
    names.push_back(n);
  }
  const int tn = static_cast<int>(threads.size());
  std::vector<Bits> up(tn, Bits(tn));
  for (int a = 0; a < tn; ++a)
    for (int b = 0; b < tn; ++b) {
      bool le = true;
      for (int i = 0; i < m && le; ++i) le = d.object(i).leq(threads[a][i], threads[b][i]);
      if (le) up[a].set(b);
    }
  FinPoset apex = FinPoset::from_relation(std::move(names), std::move(up));
  std::vector<MonoMap> legs;
  for (int i = 0; i < m; ++i) {
    std::vector<int> tab(tn);
    for (int a = 0; a < tn; ++a) tab[a] = threads[a][i];
    legs.emplace_back(apex, d.object(i), std::move(tab));
  }
  return DiagramCone{std::move(apex), std::move(legs)};
}

bool is_limit_by_construction(const FinDiagram& d, const DiagramCone& c, LimitMode mode) {
  std::string why;
  if (!d.codirected(&why)) fail("NotCodirected", why);
  require_cone_commutes(d, c);
  DiagramCone lim = direct_limit_cone(d);
  // The canonical comparison sends x to the thread of its leg values; it is
  // a thread because the cone commutes.
  std::vector<int> to_thread(c.apex.size(), -1);
  for (int x = 0; x < c.apex.size(); ++x) {
    for (int t = 0; t < lim.apex.size(); ++t) {
      bool match = true;
      for (int i = 0; i < d.object_count() && match; ++i)
        match = lim.legs[i](t) == c.legs[i](x);
      if (match) {
        to_thread[x] = t;
        break;
      }
    }
    if (to_thread[x] < 0) return false;
  }
  // Bijective?
  std::vector<bool> hit(lim.apex.size(), false);
  for (int v : to_thread) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
  if (mode == LimitMode::PosComp) {
    for (int x = 0; x < c.apex.size(); ++x)
      for (int y = 0; y < c.apex.size(); ++y)
        if (c.apex.leq(x, y) != lim.apex.leq(to_thread[x], to_thread[y])) return false;
  }
  return true;
}

DiagramCocone make_cocone(const FinDiagram& d, std::vector<std::string> target,
                          const std::map<std::string, std::map<std::string, std::string>>& legs) {
  {
    std::set<std::string> seen;
    for (const auto& t : target)
      if (!seen.insert(t).second) fail("ParseError", "duplicate cocone target element \"" + t + "\"");
  }
  auto target_index = [&](const std::string& e) {
    auto it = std::find(target.begin(), target.end(), e);
    if (it == target.end()) fail("UnknownElement", "no cocone target element \"" + e + "\"");
    return static_cast<int>(it - target.begin());
  };
  std::vector<std::vector<int>> ordered;
  for (int i = 0; i < d.object_count(); ++i) {
    auto it = legs.find(d.object_name(i));
    if (it == legs.end())
      fail("IncompatibleCocone", "cocone misses a leg for object \"" + d.object_name(i) + "\"");
    std::vector<int> tab(d.object(i).size(), -1);
    for (const auto& [k, v] : it->second) tab[d.object(i).index_of(k)] = target_index(v);
    for (int x = 0; x < d.object(i).size(); ++x)
      if (tab[x] < 0)
        fail("IncompatibleCocone",
             "cocone leg for \"" + d.object_name(i) + "\" misses \"" + d.object(i).name(x) + "\"");
    ordered.push_back(std::move(tab));
  }
  return DiagramCocone{std::move(target), std::move(ordered)};
}

namespace {

// Structural problems are errors; a structurally fine cocone whose legs do
// not commute is simply not a colimit.
void require_cocone_structure(const FinDiagram& d, const DiagramCocone& c) {
  if (static_cast<int>(c.legs.size()) != d.object_count())
    fail("IncompatibleCocone", "cocone leg count differs from the diagram");
  for (int i = 0; i < d.object_count(); ++i)
    if (static_cast<int>(c.legs[i].size()) != d.object(i).size())
      fail("IncompatibleCocone", "cocone leg size mismatch at \"" + d.object_name(i) + "\"");
}

bool cocone_commutes(const FinDiagram& d, const DiagramCocone& c) {
  for (const auto& e : d.generated())
    for (size_t x = 0; x < e.table.size(); ++x)
      if (c.legs[e.tgt][e.table[x]] != c.legs[e.src][x]) return false;
  return true;
}

}  // namespace

bool colimit_check_set(const FinDiagram& d, const DiagramCocone& c) {
  std::string why;
  if (!d.filtered(&why)) fail("NotFiltered", why);
  require_cocone_structure(d, c);
  if (!cocone_commutes(d, c)) return false;

  // Jointly surjective.
  std::vector<bool> hit(c.target.size(), false);
  for (const auto& leg : c.legs)
    for (int v : leg) hit[v] = true;
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;

  // Kernel condition at every stage.
  for (int i = 0; i < d.object_count(); ++i) {
    const int n = d.object(i).size();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        bool merged_later = x == y;
        for (const auto& e : d.generated()) {
          if (merged_later) break;
          if (e.src == i && e.table[x] == e.table[y]) merged_later = true;
        }
        if ((c.legs[i][x] == c.legs[i][y]) != merged_later) return false;
      }
  }
  return true;
}

DiagramCocone direct_colimit_set(const FinDiagram& d) {
  // Union-find over the disjoint union of the carriers.
  std::vector<int> offset(d.object_count() + 1, 0);
  for (int i = 0; i < d.object_count(); ++i) offset[i + 1] = offset[i] + d.object(i).size();
  const int total = offset[d.object_count()];
  std::vector<int> parent(total);
  for (int v = 0; v < total; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (const auto& e : d.generated())
    for (size_t x = 0; x < e.table.size(); ++x)
      unite(offset[e.src] + static_cast<int>(x), offset[e.tgt] + e.table[x]);

  std::vector<int> cls(total, -1);
  std::vector<std::string> names;
  for (int v = 0; v < total; ++v) {
    int r = find(v);
    if (cls[r] < 0) {
      cls[r] = static_cast<int>(names.size());
      names.push_back("c" + std::to_string(names.size()));
    }
    cls[v] = cls[r];
  }
  std::vector<std::vector<int>> legs;
  for (int i = 0; i < d.object_count(); ++i) {
    std::vector<int> tab(d.object(i).size());
    for (int x = 0; x < d.object(i).size(); ++x) tab[x] = cls[offset[i] + x];
    legs.push_back(std::move(tab));
  }
  return DiagramCocone{std::move(names), std::move(legs)};
}

bool is_colimit_by_construction(const FinDiagram& d, const DiagramCocone& c) {
  std::string why;
  if (!d.filtered(&why)) fail("NotFiltered", why);
  require_cocone_structure(d, c);
  if (!cocone_commutes(d, c)) return false;
  DiagramCocone colim = direct_colimit_set(d);
  // Mediating map from the quotient classes to the cocone target; well
  // defined because the cocone is compatible with every edge, but it may
  // still merge classes or miss targets.
  std::vector<int> med(colim.target.size(), -1);
  for (int i = 0; i < d.object_count(); ++i)
    for (int x = 0; x < d.object(i).size(); ++x) {
      int cl = colim.legs[i][x];
      int tv = c.legs[i][x];
      if (med[cl] < 0)
        med[cl] = tv;
      else if (med[cl] != tv)
        return false;  // not even a function: cocone identifies less than the colimit
    }
  std::vector<bool> hit(c.target.size(), false);
  for (int v : med) {
    if (v < 0) return false;
    if (hit[v]) return false;
    hit[v] = true;
  }
  return std::find(hit.begin(), hit.end(), false) == hit.end();
}

}  // namespace poskit
