#include "poskit/valued_map.hpp"

#include "poskit/error.hpp"

namespace poskit {

ValuedMap::ValuedMap(FinPoset space, std::vector<Rat01> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != space_.size())
    fail("ParseError", "value table size does not match the space");
  for (int i = 0; i < space_.size(); ++i)
    for (int j = 0; j < space_.size(); ++j)
      if (space_.leq(i, j) && !(values_[i] <= values_[j]))
        fail("NotMonotone", "values are not monotone at (" + space_.name(i) + ", " +
                                space_.name(j) + ")");
}

ValuedMap ValuedMap::constant(FinPoset space, Rat01 u) {
  std::vector<Rat01> vals(space.size(), u);
  return ValuedMap(std::move(space), std::move(vals));
}

ValuedMap ValuedMap::indicator(FinPoset space, const Bits& upper) {
  if (!space.is_up_closed(upper)) fail("NotMonotone", "indicator set is not up-closed");
  std::vector<Rat01> vals;
  vals.reserve(space.size());
  for (int i = 0; i < space.size(); ++i)
    vals.push_back(upper.test(i) ? Rat01::one() : Rat01::zero());
  return ValuedMap(std::move(space), std::move(vals));
}

namespace {

template <typename Op>
ValuedMap zip(const ValuedMap& a, const ValuedMap& b, Op op) {
  if (a.space() != b.space()) fail("SpaceMismatch", "pointwise operation across different spaces");
  std::vector<Rat01> vals;
  vals.reserve(a.values().size());
  for (size_t i = 0; i < a.values().size(); ++i) vals.push_back(op(a.values()[i], b.values()[i]));
  return ValuedMap(a.space(), std::move(vals));
}

template <typename Op>
ValuedMap map_values(const ValuedMap& a, Op op) {
  std::vector<Rat01> vals;
  vals.reserve(a.values().size());
  for (const Rat01& v : a.values()) vals.push_back(op(v));
  return ValuedMap(a.space(), std::move(vals));
}

}  // namespace

ValuedMap vm_join(const ValuedMap& a, const ValuedMap& b) {
  return zip(a, b, [](const Rat01& x, const Rat01& y) { return max(x, y); });
}

ValuedMap vm_circ(const ValuedMap& a, const ValuedMap& b) {
  return zip(a, b, [](const Rat01& x, const Rat01& y) { return luk_tensor(x, y); });
}

ValuedMap vm_oplus(const ValuedMap& a, const ValuedMap& b) {
  return zip(a, b, [](const Rat01& x, const Rat01& y) { return oplus(x, y); });
}

ValuedMap vm_tensor(const ValuedMap& a, const Rat01& u) {
  return map_values(a, [&](const Rat01& x) { return luk_tensor(x, u); });
}

ValuedMap vm_pitchfork(const ValuedMap& a, const Rat01& u) {
  return map_values(a, [&](const Rat01& x) { return pitchfork(x, u); });
}

ValuedMap vm_minus(const ValuedMap& a, const Rat01& u) {
  return map_values(a, [&](const Rat01& x) { return trunc_minus(x, u); });
}

ValuedMap precompose(const ValuedMap& psi, const MonoMap& f) {
  if (psi.space() != f.cod()) fail("SpaceMismatch", "precomposition endpoints do not match");
  std::vector<Rat01> vals;
  vals.reserve(f.dom().size());
  for (int i = 0; i < f.dom().size(); ++i) vals.push_back(psi.at(f(i)));
  return ValuedMap(f.dom(), std::move(vals));
}

Rat01 vm_sup_distance(const ValuedMap& a, const ValuedMap& b) {
  if (a.space() != b.space()) fail("SpaceMismatch", "sup-distance across different spaces");
  Rat01 best = Rat01::zero();
  for (size_t i = 0; i < a.values().size(); ++i)
    best = max(best, abs_diff(a.values()[i], b.values()[i]));
  return best;
}

bool vm_pointwise_leq(const ValuedMap& a, const ValuedMap& b) {
  if (a.space() != b.space()) fail("SpaceMismatch", "comparison across different spaces");
  for (size_t i = 0; i < a.values().size(); ++i)
    if (!(a.values()[i] <= b.values()[i])) return false;
  return true;
}

std::string vm_str(const ValuedMap& m) {
  std::string out = "(";
  for (int i = 0; i < m.space().size(); ++i) {
    if (i) out += ", ";
    out += m.space().name(i) + ":" + m.at(i).str();
  }
  return out + ")";
}

}  // namespace poskit
