#include "poskit/poset.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "poskit/error.hpp"

namespace poskit {

FinPoset FinPoset::closure_of(std::vector<std::string> elements,
                              const std::vector<std::pair<std::string, std::string>>& pairs) {
  FinPoset p;
  p.elems_ = std::move(elements);
  {
    std::set<std::string> seen;
    for (const auto& e : p.elems_)
      if (!seen.insert(e).second) fail("ParseError", "duplicate element \"" + e + "\"");
  }
  const int n = p.size();
  p.up_.assign(n, Bits(n));
  for (int i = 0; i < n; ++i) p.up_[i].set(i);
  for (const auto& [a, b] : pairs) {
    int i = p.find(a), j = p.find(b);
    if (i < 0) fail("UnknownElement", "pair mentions unlisted element \"" + a + "\"");
    if (j < 0) fail("UnknownElement", "pair mentions unlisted element \"" + b + "\"");
    p.up_[i].set(j);
  }
  // Warshall closure on the up-set rows.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.up_[i].test(k)) p.up_[i] |= p.up_[k];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.up_[i].test(j) && p.up_[j].test(i))
        fail("CycleError", "antisymmetry fails between \"" + p.elems_[i] + "\" and \"" +
                               p.elems_[j] + "\"");
  return p;
}

FinPoset FinPoset::chain(std::vector<std::string> elements) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (size_t i = 0; i + 1 < elements.size(); ++i) pairs.emplace_back(elements[i], elements[i + 1]);
  return closure_of(std::move(elements), pairs);
}

FinPoset FinPoset::antichain(std::vector<std::string> elements) {
  return closure_of(std::move(elements), {});
}

FinPoset FinPoset::from_relation(std::vector<std::string> elements, std::vector<Bits> up) {
  FinPoset p;
  p.elems_ = std::move(elements);
  p.up_ = std::move(up);
  assert(p.up_.size() == p.elems_.size());
  return p;
}

int FinPoset::find(const std::string& e) const {
  for (int i = 0; i < size(); ++i)
    if (elems_[i] == e) return i;
  return -1;
}

int FinPoset::index_of(const std::string& e) const {
  int i = find(e);
  if (i < 0) fail("UnknownElement", "no element \"" + e + "\"");
  return i;
}

Bits FinPoset::down_of(int i) const {
  Bits d(size());
  for (int j = 0; j < size(); ++j)
    if (leq(j, i)) d.set(j);
  return d;
}

Bits FinPoset::up_closure(const Bits& s) const {
  Bits out(size());
  for (int i = 0; i < size(); ++i)
    if (s.test(i)) out |= up_[i];
  return out;
}

Bits FinPoset::down_closure(const Bits& s) const {
  Bits out(size());
  for (int i = 0; i < size(); ++i)
    if (s.test(i)) out |= down_of(i);
  return out;
}

bool FinPoset::is_up_closed(const Bits& s) const {
  for (int i = 0; i < size(); ++i)
    if (s.test(i) && !up_[i].subset_of(s)) return false;
  return true;
}

std::vector<std::pair<std::string, std::string>> FinPoset::cover_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  const int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool covers = true;
      for (int k = 0; k < n; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) {
          covers = false;
          break;
        }
      if (covers) out.emplace_back(elems_[i], elems_[j]);
    }
  return out;
}

std::vector<int> FinPoset::linear_extension() const {
  const int n = size();
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  for (int step = 0; step < n; ++step) {
    for (int i = 0; i < n; ++i) {
      if (placed[i]) continue;
      bool minimal = true;
      for (int j = 0; j < n; ++j)
        if (!placed[j] && j != i && leq(j, i)) {
          minimal = false;
          break;
        }
      if (minimal) {
        order.push_back(i);
        placed[i] = true;
        break;
      }
    }
  }
  return order;
}

namespace {

// Degree-sequence invariant for pruning the isomorphism search.
std::pair<int, int> degrees(const FinPoset& p, int i) {
  int up = p.up_of(i).count();
  int down = p.down_of(i).count();
  return {up, down};
}

bool extend_iso(const FinPoset& a, const FinPoset& b, std::vector<int>& img, int next) {
  const int n = a.size();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (std::find(img.begin(), img.end(), cand) != img.end()) continue;
    if (degrees(a, next) != degrees(b, cand)) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      if (a.leq(prev, next) != b.leq(img[prev], cand)) ok = false;
      if (a.leq(next, prev) != b.leq(cand, img[prev])) ok = false;
    }
    if (!ok) continue;
    img.push_back(cand);
    if (extend_iso(a, b, img, next + 1)) return true;
    img.pop_back();
  }
  return false;
}

}  // namespace

bool is_isomorphic(const FinPoset& a, const FinPoset& b) {
  if (a.size() != b.size()) return false;
  auto profile = [](const FinPoset& p) {
    std::vector<std::pair<int, int>> d;
    for (int i = 0; i < p.size(); ++i) d.push_back(degrees(p, i));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (profile(a) != profile(b)) return false;
  std::vector<int> img;
  return extend_iso(a, b, img, 0);
}

std::vector<Bits> all_upper_sets(const FinPoset& x) {
  const int n = x.size();
  std::vector<Bits> out;
  std::vector<int> chain;
  // Every upper set is the up-closure of its antichain of minimal elements,
  // so antichain backtracking hits each exactly once.
  auto rec = [&](auto&& self, int start) -> void {
    Bits b(n);
    for (int i : chain) b |= x.up_of(i);
    out.push_back(std::move(b));
    for (int i = start; i < n; ++i) {
      bool comparable = false;
      for (int a : chain)
        if (x.leq(a, i) || x.leq(i, a)) {
          comparable = true;
          break;
        }
      if (comparable) continue;
      chain.push_back(i);
      self(self, i + 1);
      chain.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca > cb;
    return a < b;
  });
  return out;
}

MonoMap::MonoMap(FinPoset dom, FinPoset cod, std::vector<int> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), tab_(std::move(table)) {
  if (static_cast<int>(tab_.size()) != dom_.size())
    fail("NotMonotone", "map table size does not match the domain");
  for (int v : tab_)
    if (v < 0 || v >= cod_.size()) fail("NotMonotone", "map table value out of codomain range");
  for (int i = 0; i < dom_.size(); ++i)
    for (int j = 0; j < dom_.size(); ++j)
      if (dom_.leq(i, j) && !cod_.leq(tab_[i], tab_[j]))
        fail("NotMonotone", "map is not monotone at (" + dom_.name(i) + ", " + dom_.name(j) + ")");
}

MonoMap MonoMap::of_names(FinPoset dom, FinPoset cod,
                          const std::map<std::string, std::string>& table) {
  std::vector<int> tab(dom.size(), -1);
  for (const auto& [k, v] : table) {
    int i = dom.index_of(k);
    tab[i] = cod.index_of(v);
  }
  for (int i = 0; i < dom.size(); ++i)
    if (tab[i] < 0) fail("ParseError", "map missing entry for \"" + dom.name(i) + "\"");
  return MonoMap(std::move(dom), std::move(cod), std::move(tab));
}

MonoMap MonoMap::identity(FinPoset x) {
  std::vector<int> tab(x.size());
  std::iota(tab.begin(), tab.end(), 0);
  FinPoset copy = x;
  return MonoMap(std::move(copy), std::move(x), std::move(tab));
}

MonoMap MonoMap::constant(FinPoset dom, FinPoset cod, int target) {
  std::vector<int> tab(dom.size(), target);
  return MonoMap(std::move(dom), std::move(cod), std::move(tab));
}

bool MonoMap::injective() const {
  for (size_t i = 0; i < tab_.size(); ++i)
    for (size_t j = i + 1; j < tab_.size(); ++j)
      if (tab_[i] == tab_[j]) return false;
  return true;
}

bool MonoMap::surjective() const { return image().count() == cod_.size(); }

bool MonoMap::is_embedding() const {
  if (!injective()) return false;
  for (int i = 0; i < dom_.size(); ++i)
    for (int j = 0; j < dom_.size(); ++j)
      if (dom_.leq(i, j) != cod_.leq(tab_[i], tab_[j])) return false;
  return true;
}

Bits MonoMap::image() const {
  Bits im(cod_.size());
  for (int v : tab_) im.set(v);
  return im;
}

MonoMap compose(const MonoMap& g, const MonoMap& f) {
  if (f.cod() != g.dom()) fail("SpaceMismatch", "composition endpoints do not match");
  std::vector<int> tab(f.dom().size());
  for (int i = 0; i < f.dom().size(); ++i) tab[i] = g(f(i));
  return MonoMap(f.dom(), g.cod(), std::move(tab));
}

Product product(const FinPoset& x, const FinPoset& y) {
  const int nx = x.size(), ny = y.size();
  std::vector<std::string> elems;
  elems.reserve(static_cast<size_t>(nx) * ny);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) elems.push_back("(" + x.name(i) + "," + y.name(j) + ")");
  const int n = nx * ny;
  std::vector<Bits> up(n, Bits(n));
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      for (int k = 0; k < nx; ++k)
        for (int l = 0; l < ny; ++l)
          if (x.leq(i, k) && y.leq(j, l)) up[i * ny + j].set(k * ny + l);
  FinPoset p = FinPoset::from_relation(std::move(elems), std::move(up));
  std::vector<int> lt(n), rt(n);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      lt[i * ny + j] = i;
      rt[i * ny + j] = j;
    }
  MonoMap pl(p, x, std::move(lt));
  MonoMap pr(p, y, std::move(rt));
  return Product{std::move(p), std::move(pl), std::move(pr)};
}

namespace {

// Sub-poset on the given elements with the induced order, plus its inclusion.
Equalizer subposet(const FinPoset& x, const std::vector<int>& keep) {
  std::vector<std::string> elems;
  for (int i : keep) elems.push_back(x.name(i));
  const int m = static_cast<int>(keep.size());
  std::vector<Bits> up(m, Bits(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (x.leq(keep[a], keep[b])) up[a].set(b);
  FinPoset sub = FinPoset::from_relation(std::move(elems), std::move(up));
  MonoMap inc(sub, x, keep);
  return Equalizer{std::move(sub), std::move(inc)};
}

}  // namespace

Equalizer equalizer(const MonoMap& f, const MonoMap& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    fail("NotParallel", "equalizer needs a parallel pair");
  std::vector<int> keep;
  for (int i = 0; i < f.dom().size(); ++i)
    if (f(i) == g(i)) keep.push_back(i);
  return subposet(f.dom(), keep);
}

Factorization image_factorize(const MonoMap& f) {
  std::vector<int> keep = f.image().members();
  Equalizer img = subposet(f.cod(), keep);
  std::vector<int> onto_tab(f.dom().size());
  for (int i = 0; i < f.dom().size(); ++i) {
    auto it = std::find(keep.begin(), keep.end(), f(i));
    onto_tab[i] = static_cast<int>(it - keep.begin());
  }
  MonoMap onto(f.dom(), img.object, std::move(onto_tab));
  return Factorization{std::move(onto), std::move(img.include)};
}

bool is_initial_cone(const Cone& c) {
  for (const auto& leg : c.legs)
    if (leg.dom() != c.apex) fail("SpaceMismatch", "cone leg domain differs from the apex");
  const int n = c.apex.size();
  for (int x0 = 0; x0 < n; ++x0)
    for (int x1 = 0; x1 < n; ++x1) {
      bool all_legs = true;
      for (const auto& leg : c.legs)
        if (!leg.cod().leq(leg(x0), leg(x1))) {
          all_legs = false;
          break;
        }
      if (c.apex.leq(x0, x1) != all_legs) return false;
    }
  return true;
}

bool is_point_separating(const Cone& c) {
  for (const auto& leg : c.legs)
    if (leg.dom() != c.apex) fail("SpaceMismatch", "cone leg domain differs from the apex");
  const int n = c.apex.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      bool separated = false;
      for (const auto& leg : c.legs)
        if (leg(x) != leg(y)) {
          separated = true;
          break;
        }
      if (!separated) return false;
    }
  return true;
}

}  // namespace poskit
