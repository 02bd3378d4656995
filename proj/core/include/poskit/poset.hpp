#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poskit/bits.hpp"

namespace poskit {

// Finite poset. At desk scale this is exactly a partially ordered compact
// space: finite + discrete topology makes every space compact Hausdorff and
// every monotone map continuous. The empty poset is allowed everywhere.
class FinPoset {
public:
  FinPoset() = default;

  // Reflexive-transitive closure of `pairs` over `elements`.
  // Throws CycleError when the closure is not antisymmetric, UnknownElement
  // when a pair mentions an unlisted element, ParseError on duplicates.
  static FinPoset closure_of(std::vector<std::string> elements,
                             const std::vector<std::pair<std::string, std::string>>& pairs);

  // Total order in listed order.
  static FinPoset chain(std::vector<std::string> elements);
  // Discrete order.
  static FinPoset antichain(std::vector<std::string> elements);

  // Trusted constructor: `up[i]` must already be the full up-set of i
  // (reflexive, transitive, antisymmetric). Used by internal constructions.
  static FinPoset from_relation(std::vector<std::string> elements, std::vector<Bits> up);

  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<std::string>& elements() const { return elems_; }
  const std::string& name(int i) const { return elems_[i]; }
  int find(const std::string& e) const;       // -1 when absent
  int index_of(const std::string& e) const;   // throws UnknownElement

  bool leq(int i, int j) const { return up_[i].test(j); }
  bool leq(const std::string& a, const std::string& b) const {
    return leq(index_of(a), index_of(b));
  }
  const Bits& up_of(int i) const { return up_[i]; }
  Bits down_of(int i) const;

  Bits up_closure(const Bits& s) const;
  Bits down_closure(const Bits& s) const;
  bool is_up_closed(const Bits& s) const;

  // Covering pairs (transitive reduction); canonical serialization form.
  std::vector<std::pair<std::string, std::string>> cover_pairs() const;

  // Minimal-first order, ties broken by element index.
  std::vector<int> linear_extension() const;

  friend bool operator==(const FinPoset& a, const FinPoset& b) {
    return a.elems_ == b.elems_ && a.up_ == b.up_;
  }
  friend bool operator!=(const FinPoset& a, const FinPoset& b) { return !(a == b); }

private:
  std::vector<std::string> elems_;
  std::vector<Bits> up_;  // up_[i] = { j : i <= j }
};

// Backtracking search over canonical relabelings.
bool is_isomorphic(const FinPoset& a, const FinPoset& b);

// All upper sets, enumerated as up-closures of antichains and listed in a
// linear extension of the containment order (larger sets first, ties by the
// deterministic Bits order).
std::vector<Bits> all_upper_sets(const FinPoset& x);

// Monotone (automatically continuous) map between finite posets.
class MonoMap {
public:
  // Validates totality and monotonicity; throws NotMonotone.
  MonoMap(FinPoset dom, FinPoset cod, std::vector<int> table);

  static MonoMap of_names(FinPoset dom, FinPoset cod,
                          const std::map<std::string, std::string>& table);
  static MonoMap identity(FinPoset x);
  static MonoMap constant(FinPoset dom, FinPoset cod, int target);

  int operator()(int i) const { return tab_[i]; }
  const FinPoset& dom() const { return dom_; }
  const FinPoset& cod() const { return cod_; }
  const std::vector<int>& table() const { return tab_; }

  bool injective() const;
  bool surjective() const;
  // Injective and order-reflecting: x <= y iff f(x) <= f(y).
  bool is_embedding() const;

  Bits image() const;

  friend bool operator==(const MonoMap& a, const MonoMap& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.tab_ == b.tab_;
  }
  friend bool operator!=(const MonoMap& a, const MonoMap& b) { return !(a == b); }

private:
  FinPoset dom_, cod_;
  std::vector<int> tab_;
};

// g after f; throws SpaceMismatch when cod(f) != dom(g).
MonoMap compose(const MonoMap& g, const MonoMap& f);

struct Product {
  FinPoset space;       // elements "(x,y)", componentwise order
  MonoMap proj_left;
  MonoMap proj_right;
};
Product product(const FinPoset& x, const FinPoset& y);

struct Equalizer {
  FinPoset object;   // { x : f(x) = g(x) } with the induced order
  MonoMap include;   // embedding into dom(f)
};
// Throws NotParallel unless f and g share domain and codomain.
Equalizer equalizer(const MonoMap& f, const MonoMap& g);

// f = embed . onto with `onto` surjective and `embed` the inclusion of the
// image with the order induced from the codomain.
struct Factorization {
  MonoMap onto;
  MonoMap embed;
};
Factorization image_factorize(const MonoMap& f);

struct Cone {
  FinPoset apex;
  std::vector<MonoMap> legs;
};

// True iff the legs jointly create the apex order:
// x0 <= x1 iff every leg maps the pair order-preservingly.
// Throws SpaceMismatch when a leg's domain differs from the apex.
bool is_initial_cone(const Cone& c);

// x != y implies some leg separates them.
bool is_point_separating(const Cone& c);

}  // namespace poskit
