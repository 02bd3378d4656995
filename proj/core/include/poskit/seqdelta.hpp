#pragma once

#include <string>
#include <vector>

#include "poskit/rat01.hpp"

namespace poskit {

// [0,1]-valued sequence with exact finite data. Two tail shapes are closed
// under the sequence operators below:
//   Constant     value(n) = tail                      for n >= prefix size
//   AscentLimit  value(n) = limit - 2^(1-n)           for n >= prefix size
// The ascent tail is the exact shape produced by the rate limiter when the
// capped ascent never reaches the cap; its gaps are exactly 2^-n, so the
// class of gap-bounded sequences stays representable. Only constant tails
// appear in the serialized format. Instances are canonical: prefix entries
// matching the tail formula are absorbed, so value equality is structural
// equality.
class Seq01 {
public:
  enum class Tail { Constant, AscentLimit };

  Seq01() : kind_(Tail::Constant) {}

  static Seq01 constant(Rat01 value);
  static Seq01 eventually(std::vector<Rat01> prefix, Rat01 tail);
  // Requires limit - 2^(1 - prefix size) in [0,1].
  static Seq01 ascent(std::vector<Rat01> prefix, Rat01 limit);

  Tail tail_kind() const { return kind_; }
  // The constant value, or the ascent limit.
  const Rat01& tail_value() const { return tail_; }
  const std::vector<Rat01>& prefix() const { return prefix_; }
  size_t tail_start() const { return prefix_.size(); }

  Rat01 at(size_t n) const;
  std::string str() const;

  friend bool operator==(const Seq01& a, const Seq01& b) {
    return a.kind_ == b.kind_ && a.tail_ == b.tail_ && a.prefix_ == b.prefix_;
  }
  friend bool operator!=(const Seq01& a, const Seq01& b) { return !(a == b); }

private:
  void canonicalize();

  std::vector<Rat01> prefix_;
  Tail kind_;
  Rat01 tail_;
};

bool pointwise_leq(const Seq01& a, const Seq01& b);
// Supremum of |a_n - b_n| (the supremum itself, attained or not).
Rat01 sup_distance(const Seq01& a, const Seq01& b);
bool is_increasing(const Seq01& s);

// Running join (u_0 v ... v u_n); fixes increasing sequences.
Seq01 running_join(const Seq01& s);

// Rate limiter v_0 = u_0, v_{n+1} = min(u_{n+1}, v_n + 2^-n), computed
// exactly; increasing input gives increasing output.
Seq01 rate_limit(const Seq01& s);

// The limit class: increasing with n-th gap at most 2^-n. Every member is
// Cauchy and its limit is the tail value resp. the ascent limit.
bool in_limit_class(const Seq01& s);

// Exact limit of a limit-class member. The precision parameter is part of
// the contract for future non-constant tail sources; the result here is
// always exact. Throws NotInClassC.
Rat01 limit_value(const Seq01& s, const Rat01& precision);

// delta = limit . rate_limit . running_join; total and exact.
Rat01 delta(const Seq01& s);

// Replays the approximation argument on finite data: truncated subtraction
// of 1/(n+1) for samples overshooting the target, running join, then greedy
// gap-bounded subsequence selection. The result is a limit-class sequence
// with tail t satisfying t <= target and target - t <= 2^-k.
// Throws ApproximationBoundViolated / InsufficientSamples.
Seq01 approximant_from_samples(const std::vector<Rat01>& samples, const Rat01& target,
                               unsigned k);

}  // namespace poskit
