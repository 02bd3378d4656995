#pragma once

#include <vector>

#include "poskit/poset.hpp"
#include "poskit/quantale.hpp"
#include "poskit/rat01.hpp"

namespace poskit {

// Monotone map from a finite poset into [0,1]; an element of the dual
// function algebra of the space. Immutable; the constructor rejects
// non-monotone tables.
class ValuedMap {
public:
  ValuedMap(FinPoset space, std::vector<Rat01> values);

  static ValuedMap constant(FinPoset space, Rat01 u);
  static ValuedMap bottom(FinPoset space) { return constant(std::move(space), Rat01::zero()); }
  static ValuedMap top(FinPoset space) { return constant(std::move(space), Rat01::one()); }
  // 0/1 indicator of an upper set.
  static ValuedMap indicator(FinPoset space, const Bits& upper);

  const FinPoset& space() const { return space_; }
  const std::vector<Rat01>& values() const { return values_; }
  const Rat01& at(int i) const { return values_[i]; }
  const Rat01& at(const std::string& e) const { return values_[space_.index_of(e)]; }

  friend bool operator==(const ValuedMap& a, const ValuedMap& b) {
    return a.space_ == b.space_ && a.values_ == b.values_;
  }
  friend bool operator!=(const ValuedMap& a, const ValuedMap& b) { return !(a == b); }

private:
  FinPoset space_;
  std::vector<Rat01> values_;
};

// Pointwise operations of the dual-algebra theory. Map arguments must share
// one space (SpaceMismatch otherwise); every result is validated monotone.
ValuedMap vm_join(const ValuedMap& a, const ValuedMap& b);         // binary join
ValuedMap vm_circ(const ValuedMap& a, const ValuedMap& b);         // monoid, Lukasiewicz tensor
ValuedMap vm_oplus(const ValuedMap& a, const ValuedMap& b);        // truncated plus
ValuedMap vm_tensor(const ValuedMap& a, const Rat01& u);           // action -(x)u
ValuedMap vm_pitchfork(const ValuedMap& a, const Rat01& u);        // power -(pitchfork)u
ValuedMap vm_minus(const ValuedMap& a, const Rat01& u);            // -(-)u, scalar truncated minus

// Contravariant action on maps: precompose(psi, f) = psi . f, the value of
// the dual functor on f applied to psi. Preserves every pointwise operation.
ValuedMap precompose(const ValuedMap& psi, const MonoMap& f);

// sup-distance max |a - b| over the space.
Rat01 vm_sup_distance(const ValuedMap& a, const ValuedMap& b);
bool vm_pointwise_leq(const ValuedMap& a, const ValuedMap& b);

// "(a:0, b:1/2)" — used in witnesses and reports.
std::string vm_str(const ValuedMap& m);

}  // namespace poskit
