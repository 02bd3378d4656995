#include "poskit/vietoris.hpp"

#include <algorithm>
#include <cassert>

#include "poskit/error.hpp"

namespace poskit {

namespace {

std::string upper_set_name(const FinPoset& base, const Bits& members) {
  std::string out = "{";
  bool first = true;
  for (int i : members.members()) {
    if (!first) out += ",";
    out += base.name(i);
    first = false;
  }
  return out + "}";
}

}  // namespace

int VietorisSpace::index_of(const Bits& upper) const {
  for (size_t i = 0; i < members.size(); ++i)
    if (members[i] == upper) return static_cast<int>(i);
  fail("UnknownElement", "subset is not an upper set of the base space");
}

VietorisSpace vietoris_object(const FinPoset& x) {
  std::vector<Bits> ups = all_upper_sets(x);
  const int m = static_cast<int>(ups.size());
  std::vector<std::string> names;
  names.reserve(m);
  for (const Bits& u : ups) names.push_back(upper_set_name(x, u));
  std::vector<Bits> up(m, Bits(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (ups[j].subset_of(ups[i])) up[i].set(j);  // A <= B iff A contains B
  FinPoset space = FinPoset::from_relation(std::move(names), std::move(up));
  return VietorisSpace{x, std::move(space), std::move(ups)};
}

MonoMap vietoris_map(const MonoMap& f) {
  return vietoris_map(f, vietoris_object(f.dom()), vietoris_object(f.cod()));
}

MonoMap vietoris_map(const MonoMap& f, const VietorisSpace& vdom, const VietorisSpace& vcod) {
  assert(vdom.base == f.dom() && vcod.base == f.cod());
  std::vector<int> tab(vdom.space.size());
  for (int i = 0; i < vdom.space.size(); ++i) {
    Bits img(f.cod().size());
    for (int a : vdom.members[i].members()) img.set(f(a));
    tab[i] = vcod.index_of(f.cod().up_closure(img));
  }
  return MonoMap(vdom.space, vcod.space, std::move(tab));
}

MonoMap vietoris_unit(const FinPoset& x) { return vietoris_unit(vietoris_object(x)); }

MonoMap vietoris_unit(const VietorisSpace& vx) {
  std::vector<int> tab(vx.base.size());
  for (int i = 0; i < vx.base.size(); ++i) tab[i] = vx.index_of(vx.base.up_of(i));
  return MonoMap(vx.base, vx.space, std::move(tab));
}

MonoMap vietoris_mult(const VietorisSpace& vx, const VietorisSpace& vvx) {
  assert(vvx.base == vx.space);
  std::vector<int> tab(vvx.space.size());
  for (int i = 0; i < vvx.space.size(); ++i) {
    Bits unon(vx.base.size());
    for (int k : vvx.members[i].members()) unon |= vx.members[k];
    tab[i] = vx.index_of(unon);  // a union of upper sets is upper
  }
  return MonoMap(vvx.space, vx.space, std::move(tab));
}

UpperSet::UpperSet(FinPoset space, Bits members)
    : space_(std::move(space)), members_(std::move(members)) {
  if (!space_.is_up_closed(members_))
    fail("NotMonotone", "subset is not up-closed");
}

Coalgebra::Coalgebra(FinPoset space, std::vector<Bits> alpha)
    : space_(std::move(space)), alpha_(std::move(alpha)) {
  if (static_cast<int>(alpha_.size()) != space_.size())
    fail("ParseError", "coalgebra table size does not match the space");
  for (int i = 0; i < space_.size(); ++i)
    if (!space_.is_up_closed(alpha_[i]))
      fail("NotMonotone", "alpha(" + space_.name(i) + ") is not up-closed");
  for (int i = 0; i < space_.size(); ++i)
    for (int j = 0; j < space_.size(); ++j)
      if (space_.leq(i, j) && !alpha_[j].subset_of(alpha_[i]))
        fail("NotMonotone", "alpha is not monotone into the hyperspace at (" + space_.name(i) +
                                ", " + space_.name(j) + ")");
}

Coalgebra Coalgebra::from_generators(FinPoset space,
                                     const std::map<std::string, std::vector<std::string>>& gens) {
  std::vector<Bits> alpha(space.size(), Bits(space.size()));
  for (const auto& [elem, targets] : gens) {
    int i = space.index_of(elem);
    Bits g(space.size());
    for (const auto& t : targets) g.set(space.index_of(t));
    alpha[i] = space.up_closure(g);
  }
  return Coalgebra(std::move(space), std::move(alpha));
}

Coalgebra Coalgebra::unit_coalgebra(FinPoset space) {
  std::vector<Bits> alpha;
  for (int i = 0; i < space.size(); ++i) alpha.push_back(space.up_of(i));
  return Coalgebra(std::move(space), std::move(alpha));
}

Coalgebra kleisli_compose(const Coalgebra& after, const Coalgebra& before) {
  if (after.space() != before.space())
    fail("SpaceMismatch", "Kleisli composition needs coalgebras on one space");
  const int n = after.space().size();
  std::vector<Bits> alpha(n, Bits(n));
  for (int x = 0; x < n; ++x)
    for (int y : before.at(x).members()) alpha[x] |= after.at(y);
  return Coalgebra(after.space(), std::move(alpha));
}

MonoMap as_map_into_hyperspace(const Coalgebra& c, const VietorisSpace& vx) {
  assert(vx.base == c.space());
  std::vector<int> tab(c.space().size());
  for (int i = 0; i < c.space().size(); ++i) tab[i] = vx.index_of(c.at(i));
  return MonoMap(c.space(), vx.space, std::move(tab));
}

bool is_coalgebra_hom(const MonoMap& f, const Coalgebra& from, const Coalgebra& to) {
  if (f.dom() != from.space() || f.cod() != to.space())
    fail("SpaceMismatch", "homomorphism candidate does not match the coalgebras");
  for (int x = 0; x < f.dom().size(); ++x) {
    Bits img(f.cod().size());
    for (int a : from.at(x).members()) img.set(f(a));
    if (f.cod().up_closure(img) != to.at(f(x))) return false;
  }
  return true;
}

CoalgebraClassification classify(const Coalgebra& c) {
  const int n = c.space().size();
  Coalgebra twice = kleisli_compose(c, c);
  CoalgebraClassification out{true, true, true, true};
  for (int x = 0; x < n; ++x) {
    if (!c.at(x).test(x)) out.relational_reflexive = false;
    if (!twice.at(x).subset_of(c.at(x))) out.relational_transitive = false;
    if (!c.at(x).subset_of(c.space().up_of(x))) out.kleisli_reflexive_literal = false;
    if (!c.at(x).subset_of(twice.at(x))) out.kleisli_transitive_literal = false;
  }
  return out;
}

}  // namespace poskit
