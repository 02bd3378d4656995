#pragma once

#include <map>
#include <string>
#include <vector>

#include "poskit/poset.hpp"

namespace poskit {

// The hyperspace VX of upper sets of X, ordered by containment (A <= B iff
// A contains B). Elements are enumerated as up-closures of antichains, named
// "{a,b}", and listed in a linear extension (larger sets first).
struct VietorisSpace {
  FinPoset base;
  FinPoset space;
  std::vector<Bits> members;  // members[i] = the upper set named space.name(i)

  int index_of(const Bits& upper) const;  // throws UnknownElement if not upper
};

VietorisSpace vietoris_object(const FinPoset& x);

// Vf sends A to the up-closure of f[A].
MonoMap vietoris_map(const MonoMap& f);
MonoMap vietoris_map(const MonoMap& f, const VietorisSpace& vdom, const VietorisSpace& vcod);

// e_X : X -> VX, x |-> up-set of x.
MonoMap vietoris_unit(const FinPoset& x);
MonoMap vietoris_unit(const VietorisSpace& vx);

// m_X : VVX -> VX, union of the member upper sets.
MonoMap vietoris_mult(const VietorisSpace& vx, const VietorisSpace& vvx);

// Upper subset of a fixed space.
class UpperSet {
public:
  UpperSet(FinPoset space, Bits members);  // validates up-closedness
  const FinPoset& space() const { return space_; }
  const Bits& members() const { return members_; }

private:
  FinPoset space_;
  Bits members_;
};

// Monotone map X -> VX given element-wise by upper sets: x <= y implies
// alpha(x) contains alpha(y).
class Coalgebra {
public:
  Coalgebra(FinPoset space, std::vector<Bits> alpha);  // validates both invariants
  // alpha(x) given by a generating set; up-closure applied before validation.
  static Coalgebra from_generators(FinPoset space,
                                   const std::map<std::string, std::vector<std::string>>& gens);
  static Coalgebra unit_coalgebra(FinPoset space);

  const FinPoset& space() const { return space_; }
  const Bits& at(int i) const { return alpha_[i]; }
  UpperSet upper_at(int i) const { return UpperSet(space_, alpha_[i]); }

  friend bool operator==(const Coalgebra& a, const Coalgebra& b) {
    return a.space_ == b.space_ && a.alpha_ == b.alpha_;
  }
  friend bool operator!=(const Coalgebra& a, const Coalgebra& b) { return !(a == b); }

private:
  FinPoset space_;
  std::vector<Bits> alpha_;
};

// (after . before)(x) = union of after(y) over y in before(x); relational
// composition of the successor relations. Throws SpaceMismatch.
Coalgebra kleisli_compose(const Coalgebra& after, const Coalgebra& before);

// The structure map as a monotone map into the materialized hyperspace.
MonoMap as_map_into_hyperspace(const Coalgebra& c, const VietorisSpace& vx);

// Vf . alpha = beta . f pointwise.
bool is_coalgebra_hom(const MonoMap& f, const Coalgebra& from, const Coalgebra& to);

struct CoalgebraClassification {
  // x in alpha(x) for all x.
  bool relational_reflexive;
  // two-step successors stay inside one-step successors.
  bool relational_transitive;
  // Literal readings of "identity below alpha" and "alpha.alpha below alpha"
  // in the hom-order of VX (A <= B iff A contains B); these flip the
  // inclusions relative to the relational readings.
  bool kleisli_reflexive_literal;
  bool kleisli_transitive_literal;
};

CoalgebraClassification classify(const Coalgebra& c);

}  // namespace poskit
