#include "poskit/laws.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "poskit/dualalg.hpp"
#include "poskit/error.hpp"
#include "poskit/generators.hpp"
#include "poskit/quantale.hpp"
#include "poskit/seqdelta.hpp"

namespace poskit {

namespace {

struct LawBuilder {
  std::vector<LawResult> results;
  LawResult* current = nullptr;

  void begin(std::string name, std::string law) {
    results.push_back(LawResult{std::move(name), std::move(law), true, "", 0});
    current = &results.back();
  }
  // Records one checked case; a nonempty witness fails the law.
  bool check(bool ok, const std::string& witness) {
    ++current->cases;
    if (!ok && current->pass) {
      current->pass = false;
      current->witness = witness;
    }
    return ok;
  }
};

}  // namespace

std::vector<LawResult> quantale_laws(const SuiteOptions& opts) {
  LawBuilder b;
  // q = 16 is the contract size for the grid laws regardless of the suite
  // default used elsewhere.
  const unsigned q = std::max(16u, opts.grid_q);
  std::vector<Rat01> grid = unit_grid(q);

  b.begin("tensor-adjunction", "x (x) u <= y iff x <= y -| u");
  for (const Rat01& x : grid)
    for (const Rat01& u : grid)
      for (const Rat01& y : grid)
        b.check((luk_tensor(x, u) <= y) == (x <= pitchfork(y, u)),
                "x=" + x.str() + " u=" + u.str() + " y=" + y.str());

  b.begin("tensor-associative", "(u (x) v) (x) w = u (x) (v (x) w)");
  for (const Rat01& u : grid)
    for (const Rat01& v : grid)
      for (const Rat01& w : grid)
        b.check(luk_tensor(luk_tensor(u, v), w) == luk_tensor(u, luk_tensor(v, w)),
                "u=" + u.str() + " v=" + v.str() + " w=" + w.str());

  b.begin("tensor-commutative-unit", "u (x) v = v (x) u and u (x) 1 = u");
  for (const Rat01& u : grid)
    for (const Rat01& v : grid)
      b.check(luk_tensor(u, v) == luk_tensor(v, u) && luk_tensor(u, Rat01::one()) == u,
              "u=" + u.str() + " v=" + v.str());

  b.begin("tensor-monotone", "u <= u' implies u (x) v <= u' (x) v");
  for (const Rat01& u : grid)
    for (const Rat01& u2 : grid) {
      if (!(u <= u2)) continue;
      for (const Rat01& v : grid)
        b.check(luk_tensor(u, v) <= luk_tensor(u2, v),
                "u=" + u.str() + " u'=" + u2.str() + " v=" + v.str());
    }

  b.begin("oplus-monoid", "(+) is associative, commutative, unit 0");
  for (const Rat01& u : grid)
    for (const Rat01& v : grid) {
      bool ok = oplus(u, v) == oplus(v, u) && oplus(u, Rat01::zero()) == u;
      for (const Rat01& w : grid)
        ok = ok && oplus(oplus(u, v), w) == oplus(u, oplus(v, w));
      b.check(ok, "u=" + u.str() + " v=" + v.str());
    }

  b.begin("minus-adjunction", "x (+) u >= v iff x >= v (-) u");
  for (const Rat01& x : grid)
    for (const Rat01& u : grid)
      for (const Rat01& v : grid)
        b.check((oplus(x, u) >= v) == (x >= trunc_minus(v, u)),
                "x=" + x.str() + " u=" + u.str() + " v=" + v.str());

  b.begin("minus-pitchfork-composite", "v (-) u = 0 -| (u -| v)");
  for (const Rat01& u : grid)
    for (const Rat01& v : grid)
      b.check(trunc_minus(v, u) == pitchfork(Rat01::zero(), pitchfork(u, v)),
              "u=" + u.str() + " v=" + v.str());

  b.begin("tensor-oplus-involution", "1 - (u (x) v) = (1-u) (+) (1-v)");
  for (const Rat01& u : grid)
    for (const Rat01& v : grid)
      b.check(complement(luk_tensor(u, v)) == oplus(complement(u), complement(v)),
              "u=" + u.str() + " v=" + v.str());

  return b.results;
}

namespace {

std::string poset_str(const FinPoset& p) {
  std::string out = "{";
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += p.name(i);
  }
  out += "|";
  bool first = true;
  for (const auto& [a, c] : p.cover_pairs()) {
    if (!first) out += " ";
    out += a + "<" + c;
    first = false;
  }
  return out + "}";
}

// Mutates a cone to produce agreed/disagreed instances for the two-sided
// criterion tests: the checker and the construction must agree either way.
DiagramCone mutate_cone(Rng& rng, const FinDiagram& d, const DiagramCone& lim) {
  int pick = static_cast<int>(rng.below(3));
  if (pick == 0 || lim.apex.size() == 0) return lim;  // genuine limit
  if (pick == 1) {
    // Drop one apex element: joint injectivity survives, the image condition
    // usually breaks.
    int drop = static_cast<int>(rng.below(lim.apex.size()));
    std::vector<int> keep;
    for (int i = 0; i < lim.apex.size(); ++i)
      if (i != drop) keep.push_back(i);
    std::vector<std::string> names;
    for (int i : keep) names.push_back(lim.apex.name(i));
    std::vector<Bits> up(keep.size(), Bits(static_cast<int>(keep.size())));
    for (size_t a = 0; a < keep.size(); ++a)
      for (size_t c = 0; c < keep.size(); ++c)
        if (lim.apex.leq(keep[a], keep[c])) up[a].set(static_cast<int>(c));
    FinPoset apex = FinPoset::from_relation(std::move(names), std::move(up));
    std::vector<MonoMap> legs;
    for (const MonoMap& leg : lim.legs) {
      std::vector<int> tab;
      for (int i : keep) tab.push_back(leg(i));
      legs.emplace_back(apex, leg.cod(), std::move(tab));
    }
    return DiagramCone{std::move(apex), std::move(legs)};
  }
  // Duplicate one apex element: breaks joint injectivity.
  int dup = static_cast<int>(rng.below(lim.apex.size()));
  std::vector<std::string> names = lim.apex.elements();
  names.push_back(lim.apex.name(dup) + "'");
  const int n = lim.apex.size() + 1;
  std::vector<Bits> up(n, Bits(n));
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      int aa = a == n - 1 ? dup : a;
      int cc = c == n - 1 ? dup : c;
      if (lim.apex.leq(aa, cc)) up[a].set(c);
    }
  // keep antisymmetry: the twin sits order-equivalent; break one direction
  up[n - 1].reset(dup);
  FinPoset apex = FinPoset::from_relation(std::move(names), std::move(up));
  std::vector<MonoMap> legs;
  for (const MonoMap& leg : lim.legs) {
    std::vector<int> tab = leg.table();
    tab.push_back(leg(dup));
    legs.emplace_back(apex, leg.cod(), std::move(tab));
  }
  return DiagramCone{std::move(apex), std::move(legs)};
}

}  // namespace

std::vector<LawResult> poscomp_laws(const SuiteOptions& opts) {
  LawBuilder b;
  Rng rng(opts.seed ^ 0x9050c09ull);

  b.begin("equalizer-universal", "the agreement subspace is the equalizer");
  for (int t = 0; t < opts.samples; ++t) {
    FinPoset x = random_poset(rng, rng.irange(0, 4));
    FinPoset y = random_poset(rng, rng.irange(1, 4));
    auto f = random_mono_map(rng, x, y);
    auto g = random_mono_map(rng, x, y);
    if (!f || !g) continue;
    Equalizer eq = equalizer(*f, *g);
    bool ok = eq.include.is_embedding() && compose(*f, eq.include) == compose(*g, eq.include);
    // any commuting map factors uniquely through the inclusion
    FinPoset w = random_poset(rng, rng.irange(0, 3));
    auto into_eq = random_mono_map(rng, w, eq.object);
    if (into_eq) {
      MonoMap h = compose(eq.include, *into_eq);
      std::vector<int> factor(w.size());
      for (int i = 0; i < w.size(); ++i) factor[i] = (*into_eq)(i);
      MonoMap re(w, eq.object, factor);
      ok = ok && compose(eq.include, re) == h && re == *into_eq;
    }
    b.check(ok, "X=" + poset_str(x) + " Y=" + poset_str(y));
  }

  b.begin("factorization", "f = embed . onto, onto surjective, embed an embedding; unique up to iso");
  for (int t = 0; t < opts.samples; ++t) {
    FinPoset x = random_poset(rng, rng.irange(0, 4));
    FinPoset y = random_poset(rng, rng.irange(1, 4));
    auto f = random_mono_map(rng, x, y);
    if (!f) continue;
    Factorization fac = image_factorize(*f);
    bool ok = compose(fac.embed, fac.onto) == *f && fac.onto.surjective() &&
              fac.embed.is_embedding();
    // a relabeled image gives a second factorization; the comparison map is
    // the unique iso between them
    if (ok && fac.embed.dom().size() > 0) {
      const FinPoset& img = fac.embed.dom();
      std::vector<std::string> names;
      for (const auto& e : img.elements()) names.push_back(e + "~");
      std::vector<Bits> up;
      for (int i = 0; i < img.size(); ++i) up.push_back(img.up_of(i));
      FinPoset img2 = FinPoset::from_relation(std::move(names), std::move(up));
      std::vector<int> ident(img.size());
      for (int i = 0; i < img.size(); ++i) ident[i] = i;
      MonoMap phi(img, img2, ident);
      ok = phi.is_embedding() && phi.surjective() && is_isomorphic(img, img2);
    }
    b.check(ok, "X=" + poset_str(x) + " Y=" + poset_str(y));
  }

  b.begin("product-initial", "projection cones are initial; 1 is a unit");
  for (int t = 0; t < opts.samples; ++t) {
    FinPoset x = random_poset(rng, rng.irange(0, 3));
    FinPoset y = random_poset(rng, rng.irange(0, 3));
    Product p = product(x, y);
    bool ok = is_initial_cone(Cone{p.space, {p.proj_left, p.proj_right}});
    FinPoset unit = FinPoset::chain({"*"});
    ok = ok && is_isomorphic(product(unit, x).space, x);
    b.check(ok, "X=" + poset_str(x) + " Y=" + poset_str(y));
  }

  b.begin("forgetful-preserves-limits", "dropping the order commutes with product and equalizer");
  for (int t = 0; t < opts.samples; ++t) {
    FinPoset x = random_poset(rng, rng.irange(0, 3));
    FinPoset y = random_poset(rng, rng.irange(1, 3));
    FinPoset dx = FinPoset::antichain(x.elements());
    FinPoset dy = FinPoset::antichain(y.elements());
    bool ok = product(x, y).space.elements() == product(dx, dy).space.elements();
    auto f = random_mono_map(rng, x, y);
    auto g = random_mono_map(rng, x, y);
    if (f && g) {
      MonoMap df(dx, dy, f->table());
      MonoMap dg(dx, dy, g->table());
      ok = ok && equalizer(*f, *g).object.elements() == equalizer(df, dg).object.elements();
    }
    b.check(ok, "X=" + poset_str(x) + " Y=" + poset_str(y));
  }

  b.begin("limit-criterion", "image criterion agrees with the thread construction");
  {
    bool saw_true = false, saw_false = false;
    for (int t = 0; t < opts.samples; ++t) {
      FinDiagram d = random_codirected_diagram(rng, 3, 3);
      DiagramCone lim = direct_limit_cone(d);
      DiagramCone cone = mutate_cone(rng, d, lim);
      for (LimitMode mode : {LimitMode::CompactHausdorff, LimitMode::PosComp}) {
        bool by_check = limit_check(d, cone, mode);
        bool by_build = is_limit_by_construction(d, cone, mode);
        (by_check ? saw_true : saw_false) = true;
        b.check(by_check == by_build, "criterion " + std::to_string(by_check) +
                                          " vs construction " + std::to_string(by_build));
      }
    }
    b.check(saw_true && saw_false, "cone mutations covered only one verdict");
  }

  b.begin("colimit-criterion", "kernel criterion agrees with the quotient construction");
  {
    bool saw_true = false, saw_false = false;
    for (int t = 0; t < opts.samples; ++t) {
      FinDiagram d = random_filtered_diagram(rng, 3, 3);
      DiagramCocone colim = direct_colimit_set(d);
      DiagramCocone cocone = colim;
      int pick = static_cast<int>(rng.below(3));
      if (pick == 1 && cocone.target.size() >= 2) {
        // merge the two last classes
        int last = static_cast<int>(cocone.target.size()) - 1;
        cocone.target.pop_back();
        for (auto& leg : cocone.legs)
          for (int& v : leg)
            if (v == last) v = last - 1;
      } else if (pick == 2) {
        cocone.target.push_back("stray");  // never hit: joint surjectivity fails
      }
      bool by_check = colimit_check_set(d, cocone);
      bool by_build = is_colimit_by_construction(d, cocone);
      (by_check ? saw_true : saw_false) = true;
      b.check(by_check == by_build, "criterion " + std::to_string(by_check) +
                                        " vs construction " + std::to_string(by_build));
    }
    b.check(saw_true && saw_false, "cocone mutations covered only one verdict");
  }

  return b.results;
}

namespace {

struct VCache {
  std::vector<FinPoset> posets;
  std::vector<VietorisSpace> v;  // aligned with posets
  // monotone maps per (dom, cod) pair and the V-images, keyed by indices
  std::map<std::pair<int, int>, std::vector<MonoMap>> maps;
  std::map<std::pair<int, int>, std::vector<MonoMap>> vmaps;

  explicit VCache(int max_size) {
    posets = all_posets_up_to(max_size);
    for (const FinPoset& p : posets) v.push_back(vietoris_object(p));
    for (int i = 0; i < static_cast<int>(posets.size()); ++i)
      for (int j = 0; j < static_cast<int>(posets.size()); ++j) {
        std::vector<MonoMap> fs, vfs;
        for (auto& tab : all_monotone_tables(posets[i], posets[j])) {
          MonoMap f(posets[i], posets[j], tab);
          vfs.push_back(vietoris_map(f, v[i], v[j]));
          fs.push_back(std::move(f));
        }
        maps[{i, j}] = std::move(fs);
        vmaps[{i, j}] = std::move(vfs);
      }
  }
};

}  // namespace

std::vector<LawResult> vietoris_laws(const SuiteOptions& opts) {
  LawBuilder b;
  Rng rng(opts.seed ^ 0x71e707ull);
  VCache cache(opts.max_size);
  const int np = static_cast<int>(cache.posets.size());

  b.begin("functor-identity", "V id = id");
  for (int i = 0; i < np; ++i)
    b.check(vietoris_map(MonoMap::identity(cache.posets[i]), cache.v[i], cache.v[i]) ==
                MonoMap::identity(cache.v[i].space),
            "X=" + poset_str(cache.posets[i]));

  b.begin("functor-composition", "V(g . f) = Vg . Vf");
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j) {
      const auto& fs = cache.maps.at({i, j});
      const auto& vfs = cache.vmaps.at({i, j});
      for (int k = 0; k < np; ++k) {
        const auto& gs = cache.maps.at({j, k});
        const auto& vgs = cache.vmaps.at({j, k});
        for (size_t fi = 0; fi < fs.size(); ++fi)
          for (size_t gi = 0; gi < gs.size(); ++gi) {
            MonoMap lhs = vietoris_map(compose(gs[gi], fs[fi]), cache.v[i], cache.v[k]);
            MonoMap rhs = compose(vgs[gi], vfs[fi]);
            if (!b.check(lhs == rhs, "composition mismatch over " + poset_str(cache.posets[i])))
              goto functor_done;
          }
      }
    }
functor_done:;

  b.begin("unit-natural", "Vf . e = e . f");
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j) {
      const auto& fs = cache.maps.at({i, j});
      const auto& vfs = cache.vmaps.at({i, j});
      for (size_t fi = 0; fi < fs.size(); ++fi)
        b.check(compose(vfs[fi], vietoris_unit(cache.v[i])) ==
                    compose(vietoris_unit(cache.v[j]), fs[fi]),
                "naturality of the unit fails over " + poset_str(cache.posets[i]));
    }

  b.begin("mult-natural", "Vf . m = m . VVf");
  for (int i = 0; i < np; ++i) {
    VietorisSpace vvi = vietoris_object(cache.v[i].space);
    for (int j = 0; j < np; ++j) {
      VietorisSpace vvj = vietoris_object(cache.v[j].space);
      const auto& vfs = cache.vmaps.at({i, j});
      for (const MonoMap& vf : vfs) {
        MonoMap vvf = vietoris_map(vf, vvi, vvj);
        b.check(compose(vf, vietoris_mult(cache.v[i], vvi)) ==
                    compose(vietoris_mult(cache.v[j], vvj), vvf),
                "naturality of the multiplication fails over " + poset_str(cache.posets[i]));
      }
    }
  }

  b.begin("monad-laws", "m . Ve = id = m . eV and m . Vm = m . mV");
  for (int i = 0; i < np; ++i) {
    const VietorisSpace& vx = cache.v[i];
    VietorisSpace vvx = vietoris_object(vx.space);
    MonoMap m = vietoris_mult(vx, vvx);
    MonoMap ve = vietoris_map(vietoris_unit(vx), vx, vvx);
    MonoMap ev = vietoris_unit(vvx.base);  // e at VX
    bool ok = compose(m, ve) == MonoMap::identity(vx.space) &&
              compose(m, MonoMap(vvx.base, vvx.space, ev.table())) == MonoMap::identity(vx.space);
    // associativity: stream the elements of VVVX as upper sets of VVX
    VietorisSpace vvvx = vietoris_object(vvx.space);
    MonoMap vm = vietoris_map(m, vvvx, vvx);
    MonoMap mv = vietoris_mult(vvx, vvvx);
    ok = ok && compose(m, vm) == compose(m, mv);
    b.check(ok, "monad law fails over " + poset_str(cache.posets[i]));
  }

  b.begin("kleisli-monoid", "Kleisli composition is associative with the point-embedding unit");
  for (int t = 0; t < opts.samples; ++t) {
    FinPoset x = random_poset(rng, rng.irange(0, 4));
    Coalgebra a1 = random_coalgebra(rng, x);
    Coalgebra a2 = random_coalgebra(rng, x);
    Coalgebra a3 = random_coalgebra(rng, x);
    Coalgebra unit = Coalgebra::unit_coalgebra(x);
    bool ok = kleisli_compose(kleisli_compose(a3, a2), a1) ==
              kleisli_compose(a3, kleisli_compose(a2, a1));
    ok = ok && kleisli_compose(unit, a1) == a1 && kleisli_compose(a1, unit) == a1;
    b.check(ok, "X=" + poset_str(x));
  }

  b.begin("hom-closure", "identities are homomorphisms and homomorphisms compose");
  for (int t = 0; t < opts.samples / 4; ++t) {
    FinPoset x = random_poset(rng, rng.irange(1, 3));
    FinPoset y = random_poset(rng, rng.irange(1, 3));
    FinPoset z = random_poset(rng, rng.irange(1, 3));
    Coalgebra cx = random_coalgebra(rng, x);
    Coalgebra cy = random_coalgebra(rng, y);
    Coalgebra cz = random_coalgebra(rng, z);
    bool ok = is_coalgebra_hom(MonoMap::identity(x), cx, cx);
    for (auto& ft : all_monotone_tables(x, y)) {
      MonoMap f(x, y, ft);
      if (!is_coalgebra_hom(f, cx, cy)) continue;
      for (auto& gt : all_monotone_tables(y, z)) {
        MonoMap g(y, z, gt);
        if (!is_coalgebra_hom(g, cy, cz)) continue;
        ok = ok && is_coalgebra_hom(compose(g, f), cx, cz);
      }
    }
    b.check(ok, "X=" + poset_str(x) + " Y=" + poset_str(y) + " Z=" + poset_str(z));
  }

  b.begin("classification", "transitivity matches explicit two-step reachability");
  for (int t = 0; t < opts.samples; ++t) {
    FinPoset x = random_poset(rng, rng.irange(0, 4));
    Coalgebra c = random_coalgebra(rng, x);
    CoalgebraClassification cls = classify(c);
    bool trans = true;
    for (int p = 0; p < x.size(); ++p)
      for (int q1 : c.at(p).members())
        for (int r : c.at(q1).members())
          if (!c.at(p).test(r)) trans = false;
    bool refl = true;
    for (int p = 0; p < x.size(); ++p)
      if (!c.at(p).test(p)) refl = false;
    b.check(cls.relational_transitive == trans && cls.relational_reflexive == refl,
            "X=" + poset_str(x));
  }

  b.begin("unit-coalgebra-classes", "the point embedding is reflexive and transitive");
  for (int i = 0; i < np; ++i) {
    if (cache.posets[i].size() == 0) continue;
    CoalgebraClassification cls = classify(Coalgebra::unit_coalgebra(cache.posets[i]));
    b.check(cls.relational_reflexive && cls.relational_transitive,
            "X=" + poset_str(cache.posets[i]));
  }

  return b.results;
}

std::vector<LawResult> dualalg_laws(const SuiteOptions& opts) {
  LawBuilder b;
  Rng rng(opts.seed ^ 0xd0a1ull);
  const unsigned q = opts.grid_q;

  b.begin("hom-action", "precomposition preserves every operation, including the limit operation");
  for (int t = 0; t < opts.samples; ++t) {
    FinPoset x = random_poset(rng, rng.irange(0, 4));
    FinPoset y = random_poset(rng, rng.irange(1, 4));
    auto f = random_mono_map(rng, x, y);
    if (!f) continue;
    ValuedMap p1 = random_valued_map(rng, y, q);
    ValuedMap p2 = random_valued_map(rng, y, q);
    Rat01 u = unit_grid(q)[rng.below(q + 1)];
    bool ok = precompose(vm_join(p1, p2), *f) == vm_join(precompose(p1, *f), precompose(p2, *f));
    ok = ok && precompose(vm_circ(p1, p2), *f) ==
                   vm_circ(precompose(p1, *f), precompose(p2, *f));
    ok = ok && precompose(vm_tensor(p1, u), *f) == vm_tensor(precompose(p1, *f), u);
    ok = ok && precompose(vm_pitchfork(p1, u), *f) == vm_pitchfork(precompose(p1, *f), u);
    ok = ok && precompose(ValuedMap::top(y), *f) == ValuedMap::top(x);
    ok = ok && precompose(ValuedMap::bottom(y), *f) == ValuedMap::bottom(x);
    ok = ok && precompose(delta_pointwise({p1, p2}, p2), *f) ==
                   delta_pointwise({precompose(p1, *f), precompose(p2, *f)}, precompose(p2, *f));
    b.check(ok, "X=" + poset_str(x) + " Y=" + poset_str(y));
  }

  b.begin("hom-contravariant", "C id = id and C(g . f) = Cf . Cg");
  for (int t = 0; t < opts.samples; ++t) {
    FinPoset x = random_poset(rng, rng.irange(1, 3));
    FinPoset y = random_poset(rng, rng.irange(1, 3));
    FinPoset z = random_poset(rng, rng.irange(1, 3));
    auto f = random_mono_map(rng, x, y);
    auto g = random_mono_map(rng, y, z);
    if (!f || !g) continue;
    ValuedMap psi = random_valued_map(rng, z, q);
    bool ok = precompose(psi, MonoMap::identity(z)) == psi;
    ok = ok && precompose(psi, compose(*g, *f)) == precompose(precompose(psi, *g), *f);
    b.check(ok, "X=" + poset_str(x));
  }

  b.begin("axioms-interval", "the grid interval is a model of the theory");
  {
    AlgebraInstance interval = AlgebraInstance::grid_algebra(FinPoset::chain({"*"}), 8);
    for (const AxiomResult& r : check_axioms(interval, unit_grid(4)))
      b.check(r.pass, r.name + ": " + r.witness);
  }

  b.begin("axioms-grid-cx", "grid dual algebras over small posets are models");
  for (int t = 0; t < std::max(1, opts.samples / 20); ++t) {
    FinPoset x = random_poset(rng, rng.irange(0, opts.max_size + 1));
    AlgebraInstance inst = AlgebraInstance::grid_algebra(x, std::min(q, 4u));
    AxiomCheckOptions axopts;
    axopts.seed = opts.seed + t;
    for (const AxiomResult& r : check_axioms(inst, unit_grid(2), axopts))
      b.check(r.pass, "X=" + poset_str(x) + " " + r.name + ": " + r.witness);
  }

  b.begin("axioms-broken-monoid", "the truncated-plus monoid is rejected with a witness");
  {
    AlgebraInstance broken = AlgebraInstance::grid_algebra(FinPoset::chain({"*"}), 4,
                                                           CircSemantics::TruncatedPlus);
    bool found = false;
    for (const AxiomResult& r : check_axioms(broken, unit_grid(4)))
      if (!r.pass && r.name == "monoid-action" && !r.witness.empty()) found = true;
    b.check(found, "expected monoid-action to fail on the truncated-plus instance");
  }

  b.begin("density-closed-form", "targets decompose as joins of scaled principal indicators");
  for (int t = 0; t < opts.samples; ++t) {
    FinPoset x = random_poset(rng, rng.irange(0, 4));
    ValuedMap psi = random_valued_map(rng, x, q);
    ValuedMap w = density_witness(psi);
    bool ok = w == psi;
    // brute-force route: evaluate the join directly
    for (int y = 0; y < x.size() && ok; ++y) {
      Rat01 expect = Rat01::zero();
      for (int e = 0; e < x.size(); ++e)
        if (x.leq(e, y)) expect = max(expect, psi.at(e));
      ok = expect == psi.at(y);
    }
    b.check(ok, "X=" + poset_str(x) + " psi=" + vm_str(psi));
  }

  b.begin("density-check", "indicator generators give exact hits; poor generators are flagged");
  for (int t = 0; t < std::max(1, opts.samples / 20); ++t) {
    FinPoset x = random_poset(rng, rng.irange(1, 3));
    std::vector<ValuedMap> targets;
    for (int k = 0; k < 3; ++k) targets.push_back(random_valued_map(rng, x, 4));
    DensityReport rep =
        density_check(x, upset_indicators(x), targets, Rat01::zero(), opts.depth, 4);
    bool ok = rep.generators_point_separating && rep.generators_initial;
    for (const auto& r : rep.targets) ok = ok && r.hit && r.best_distance.is_zero();
    if (x.size() >= 2) {
      DensityReport poor = density_check(x, {ValuedMap::top(x)}, targets, Rat01::zero(),
                                         opts.depth, 4);
      ok = ok && !poor.generators_point_separating;
    }
    b.check(ok, "X=" + poset_str(x));
  }

  b.begin("extension-least", "the extension is below every other monotone extension");
  for (int t = 0; t < opts.samples / 10; ++t) {
    FinPoset x = random_poset(rng, rng.irange(1, 3));
    ValuedMap g = random_valued_map(rng, x, 4);
    std::vector<int> sub;
    std::vector<Rat01> vals;
    for (int i = 0; i < x.size(); ++i)
      if (rng.coin()) {
        sub.push_back(i);
        vals.push_back(g.at(i));
      }
    ValuedMap least = monotone_extend(x, sub, vals);
    bool ok = true;
    for (size_t k = 0; k < sub.size(); ++k) ok = ok && least.at(sub[k]) == vals[k];
    for (const ValuedMap& other : enumerate_grid_maps(x, 4)) {
      bool extends = true;
      for (size_t k = 0; k < sub.size(); ++k)
        if (other.at(sub[k]) != vals[k]) extends = false;
      if (extends) ok = ok && vm_pointwise_leq(least, other);
    }
    b.check(ok, "X=" + poset_str(x));
  }

  b.begin("separation", "the family agrees on A and is constant on B");
  for (int t = 0; t < opts.samples; ++t) {
    FinPoset x = random_poset(rng, rng.irange(1, 4));
    Bits bset(x.size());
    for (int i = 0; i < x.size(); ++i)
      if (rng.below(3) == 0) bset.set(i);
    Bits hull = x.up_closure(bset);
    hull &= x.down_closure(bset);
    Bits aset(x.size());
    for (int i = 0; i < x.size(); ++i)
      if (!hull.test(i) && rng.coin()) aset.set(i);
    std::vector<Rat01> us{Rat01::zero(), Rat01::fraction(1, 2), Rat01::one()};
    std::vector<ValuedMap> fam = separating_family(x, aset, hull, us);
    bool ok = true;
    for (size_t k = 1; k < fam.size(); ++k)
      for (int i : aset.members()) ok = ok && fam[k].at(i) == fam[0].at(i);
    for (size_t k = 0; k < fam.size(); ++k)
      for (int i : hull.members()) ok = ok && fam[k].at(i) == us[k];
    b.check(ok, "X=" + poset_str(x));
  }

  b.begin("equalizer-presentation", "the joint agreement set recovers the subset");
  for (int t = 0; t < opts.samples; ++t) {
    FinPoset x = random_poset(rng, rng.irange(0, 4));
    Bits aset(x.size());
    for (int i = 0; i < x.size(); ++i)
      if (rng.coin()) aset.set(i);
    auto pairs = equalizer_presentation(x, aset);
    b.check(joint_agreement(x, pairs) == aset, "X=" + poset_str(x));
  }

  return b.results;
}

std::vector<LawResult> seqdelta_laws(const SuiteOptions& opts) {
  LawBuilder b;
  Rng rng(opts.seed ^ 0x5e9d31ull);

  b.begin("retraction", "the taming pipeline fixes limit-class members");
  for (int t = 0; t < opts.samples; ++t) {
    Seq01 s = random_limit_class_seq(rng, 6);
    Seq01 tamed = rate_limit(running_join(s));
    bool ok = tamed == s && delta(s) == limit_value(s, Rat01::zero());
    b.check(ok, "s=" + s.str());
  }

  b.begin("codomain", "the taming pipeline always lands in the limit class");
  for (int t = 0; t < opts.samples; ++t) {
    Seq01 s = random_seq(rng, 16, 6);
    b.check(in_limit_class(rate_limit(running_join(s))), "s=" + s.str());
  }

  b.begin("join-fixes-increasing", "the running join fixes increasing sequences");
  for (int t = 0; t < opts.samples; ++t) {
    Seq01 s = running_join(random_seq(rng, 16, 6));
    bool ok = is_increasing(s) && running_join(s) == s;
    ok = ok && is_increasing(rate_limit(s));
    b.check(ok, "s=" + s.str());
  }

  b.begin("monotone", "join, rate limiter and delta are pointwise monotone");
  for (int t = 0; t < opts.samples; ++t) {
    int len = static_cast<int>(rng.below(6));
    std::vector<Rat01> grid = unit_grid(16);
    std::vector<Rat01> lo, hi;
    for (int i = 0; i < len; ++i) {
      Rat01 p = grid[rng.below(grid.size())];
      Rat01 q2 = grid[rng.below(grid.size())];
      lo.push_back(min(p, q2));
      hi.push_back(max(p, q2));
    }
    Rat01 tp = grid[rng.below(grid.size())];
    Rat01 tq = grid[rng.below(grid.size())];
    Seq01 s = Seq01::eventually(lo, min(tp, tq));
    Seq01 s2 = Seq01::eventually(hi, max(tp, tq));
    bool ok = pointwise_leq(s, s2);
    ok = ok && pointwise_leq(running_join(s), running_join(s2));
    ok = ok && pointwise_leq(rate_limit(s), rate_limit(s2));
    ok = ok && delta(s) <= delta(s2);
    b.check(ok, "s=" + s.str() + " s'=" + s2.str());
  }

  b.begin("nonexpansive", "each stage contracts the sup-distance");
  for (int t = 0; t < opts.samples; ++t) {
    Seq01 s = random_seq(rng, 16, 5);
    Seq01 s2 = random_seq(rng, 16, 5);
    Rat01 d = sup_distance(s, s2);
    bool ok = sup_distance(running_join(s), running_join(s2)) <= d;
    ok = ok && sup_distance(rate_limit(s), rate_limit(s2)) <= d;
    ok = ok && abs_diff(delta(s), delta(s2)) <= d;
    b.check(ok, "s=" + s.str() + " s'=" + s2.str());
  }

  b.begin("delta-constant", "delta of a constant sequence is its value");
  for (const Rat01& u : unit_grid(std::max(16u, opts.grid_q)))
    b.check(delta(Seq01::constant(u)) == u, "u=" + u.str());

  b.begin("approximant", "the sample-built sequence is tame and reaches the target bound");
  for (int t = 0; t < opts.samples; ++t) {
    std::vector<Rat01> grid = unit_grid(8);
    Rat01 target = grid[rng.below(grid.size())];
    int count = rng.irange(4, 10);
    std::vector<Rat01> samples;
    for (int n = 0; n < count; ++n) {
      // any value within 1/(n+1) of the target
      mpq_class bound(1, static_cast<unsigned long>(n + 1));
      mpq_class low = target.raw() - bound;
      if (low < 0) low = 0;
      mpq_class high = target.raw() + bound;
      if (high > 1) high = 1;
      mpq_class pickv = low + (high - low) * static_cast<long>(rng.below(5)) / 4;
      samples.push_back(Rat01::exact(pickv));
    }
    unsigned k = static_cast<unsigned>(rng.below(3));
    mpq_class tol(1, 1u << k);
    try {
      Seq01 s = approximant_from_samples(samples, target, k);
      bool ok = in_limit_class(s) && s.tail_value() <= target &&
                target.raw() - s.tail_value().raw() <= tol;
      b.check(ok, "target=" + target.str());
    } catch (const Error& e) {
      // InsufficientSamples is a legitimate outcome for a poor draw; the
      // bound must then really be unreachable from the sample joins.
      bool genuine = e.kind() == "InsufficientSamples";
      b.check(genuine, std::string("unexpected error ") + e.kind());
    }
  }

  return b.results;
}

std::vector<LawResult> metric_laws(const SuiteOptions& opts) {
  LawBuilder b;
  Rng rng(opts.seed ^ 0x3e71ull);

  b.begin("order-of-canonical", "order_of inverts canonical_metric");
  for (const FinPoset& x : all_posets_up_to(std::min(opts.max_size, 4))) {
    InducedOrder ord = order_of(canonical_metric(x));
    b.check(ord.antisymmetric && ord.poset && *ord.poset == x, "X=" + poset_str(x));
  }

  b.begin("yoneda-identity", "the full distance cone computes distances exactly");
  for (int t = 0; t < opts.samples; ++t) {
    FinMetric m = random_metric(rng, 4, 4);
    std::vector<int> all;
    for (int i = 0; i < m.size(); ++i) all.push_back(i);
    bool ok = yoneda_initial(m, all);
    for (int x = 0; x < m.size() && ok; ++x)
      for (int y = 0; y < m.size() && ok; ++y) {
        Rat01 join = Rat01::zero();
        for (int z = 0; z < m.size(); ++z)
          join = max(join, trunc_minus(m.dist(z, y), m.dist(z, x)));
        ok = join == m.dist(x, y);
      }
    b.check(ok, "metric on " + std::to_string(m.size()) + " points");
  }

  b.begin("net-initial", "every emitted net passes the initiality inequality");
  for (int t = 0; t < opts.samples; ++t) {
    FinMetric m = random_metric(rng, 5, 4);
    b.check(yoneda_initial(m, epsilon_net(m)), "metric on " + std::to_string(m.size()) + " points");
  }

  b.begin("symmetrize", "idempotent, symmetric, dominating");
  for (int t = 0; t < opts.samples; ++t) {
    FinMetric m = random_metric(rng, 4, 4);
    FinMetric s = symmetrize(m);
    bool ok = symmetrize(s) == s;
    for (int i = 0; i < m.size(); ++i)
      for (int j = 0; j < m.size(); ++j)
        ok = ok && s.dist(i, j) == s.dist(j, i) && s.dist(i, j) >= m.dist(i, j);
    b.check(ok, "metric on " + std::to_string(m.size()) + " points");
  }

  b.begin("separated-iff-antisymmetric", "separation matches antisymmetry of the induced order");
  for (int t = 0; t < opts.samples; ++t) {
    FinMetric m = random_metric(rng, 4, 2);
    b.check(is_separated(m) == order_of(m).antisymmetric,
            "metric on " + std::to_string(m.size()) + " points");
  }

  b.begin("product-order", "the product metric induces the product order");
  for (int t = 0; t < opts.samples; ++t) {
    FinMetric m1 = random_metric(rng, 3, 4);
    FinMetric m2 = random_metric(rng, 3, 4);
    FinMetric prod = product_metric({m1, m2});
    InducedOrder po = order_of(prod);
    InducedOrder o1 = order_of(m1);
    InducedOrder o2 = order_of(m2);
    bool ok = true;
    for (int a1 = 0; a1 < m1.size(); ++a1)
      for (int a2 = 0; a2 < m2.size(); ++a2)
        for (int c1 = 0; c1 < m1.size(); ++c1)
          for (int c2 = 0; c2 < m2.size(); ++c2) {
            bool lhs = po.leq[a1 * m2.size() + a2].test(c1 * m2.size() + c2);
            bool rhs = o1.leq[a1].test(c1) && o2.leq[a2].test(c2);
            ok = ok && lhs == rhs;
          }
    b.check(ok, "factors of size " + std::to_string(m1.size()) + "," + std::to_string(m2.size()));
  }

  b.begin("single-factor-halves", "one factor scales distances by 1/2");
  for (int t = 0; t < opts.samples; ++t) {
    FinMetric m = random_metric(rng, 3, 4);
    FinMetric prod = product_metric({m});
    bool ok = true;
    for (int i = 0; i < m.size(); ++i)
      for (int j = 0; j < m.size(); ++j)
        ok = ok && prod.dist(i, j).raw() * 2 == m.dist(i, j).raw();
    b.check(ok, "metric on " + std::to_string(m.size()) + " points");
  }

  return b.results;
}

std::vector<std::pair<std::string, std::vector<LawResult>>> run_all_laws(const SuiteOptions& opts) {
  std::vector<std::pair<std::string, std::vector<LawResult>>> out;
  out.emplace_back("quantale", quantale_laws(opts));
  out.emplace_back("poscomp", poscomp_laws(opts));
  out.emplace_back("vietoris", vietoris_laws(opts));
  out.emplace_back("dualalg", dualalg_laws(opts));
  out.emplace_back("seqdelta", seqdelta_laws(opts));
  out.emplace_back("metric", metric_laws(opts));
  return out;
}

}  // namespace poskit
