#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poskit/valued_map.hpp"

namespace poskit {

// The family of 0/1 indicators of all upper sets; a point-separating and
// initial cone into [0,1].
std::vector<ValuedMap> upset_indicators(const FinPoset& x);

// Indicators of the principal upper sets only, aligned with element order.
std::vector<ValuedMap> principal_upset_indicators(const FinPoset& x);

// All monotone maps into the grid {0, 1/q, ..., 1}.
std::vector<ValuedMap> enumerate_grid_maps(const FinPoset& x, unsigned q);

// The closed-form density witness: join over x of indicator(up x) (x) psi(x).
// Evaluates to psi exactly on every finite poset.
ValuedMap density_witness(const ValuedMap& psi);

// Interpretation of the monoid symbol; the truncated-plus variant exists to
// exhibit a deliberately broken instance in tests and reports.
enum class CircSemantics { Tensor, TruncatedPlus };

// Finite algebra for the dual theory: a carrier of monotone [0,1]-maps over
// one space together with the scalar family used by the unary operations.
class AlgebraInstance {
public:
  // Full grid-restricted dual algebra; closed under all operations by
  // construction (grid values are preserved by every operation with grid
  // scalars), so no quadratic closure validation runs here.
  static AlgebraInstance grid_algebra(FinPoset space, unsigned q,
                                      CircSemantics circ = CircSemantics::Tensor);

  // Explicit carrier; validates closure under every interpretation and
  // throws CarrierNotClosed on failure. Intended for small carriers.
  static AlgebraInstance explicit_carrier(FinPoset space, std::vector<ValuedMap> maps,
                                          std::vector<Rat01> scalars,
                                          CircSemantics circ = CircSemantics::Tensor);

  const FinPoset& space() const { return space_; }
  const std::vector<ValuedMap>& carrier() const { return carrier_; }
  const std::vector<Rat01>& scalars() const { return scalars_; }
  CircSemantics circ_semantics() const { return circ_; }

  ValuedMap bot() const { return ValuedMap::bottom(space_); }
  ValuedMap top() const { return ValuedMap::top(space_); }
  ValuedMap join(const ValuedMap& a, const ValuedMap& b) const { return vm_join(a, b); }
  ValuedMap circ(const ValuedMap& a, const ValuedMap& b) const;
  ValuedMap act_tensor(const ValuedMap& a, const Rat01& u) const { return vm_tensor(a, u); }
  ValuedMap act_pitchfork(const ValuedMap& a, const Rat01& u) const { return vm_pitchfork(a, u); }
  // Derived order: x <= y abbreviates y = x v y.
  bool leq(const ValuedMap& a, const ValuedMap& b) const { return join(a, b) == b; }

private:
  AlgebraInstance(FinPoset space, std::vector<ValuedMap> carrier, std::vector<Rat01> scalars,
                  CircSemantics circ)
      : space_(std::move(space)),
        carrier_(std::move(carrier)),
        scalars_(std::move(scalars)),
        circ_(circ) {}

  FinPoset space_;
  std::vector<ValuedMap> carrier_;
  std::vector<Rat01> scalars_;
  CircSemantics circ_;
};

struct AxiomCheckOptions {
  // The top axiom as implemented reads x <= T (T is the greatest element);
  // the verbatim flag checks T <= x instead, which fails on [0,1].
  bool verbatim_top = false;
  uint64_t seed = 0;
  // Quantifier tuples are exhausted when their count stays under this cap,
  // otherwise this many deterministic samples are drawn (corner tuples with
  // bottom/top included either way).
  long exhaustive_cap = 250000;
  int sample_budget = 120;
};

struct AxiomResult {
  std::string name;
  std::string law;
  bool pass = false;
  std::string witness;  // empty when passing
  long cases = 0;
  bool exhaustive = true;
};

// Checks every equation and implication of the theory on the instance; the
// countable-sup implication is instantiated at all finite subsets of
// `sup_samples` with the join realized as the maximum.
std::vector<AxiomResult> check_axioms(const AlgebraInstance& a,
                                      const std::vector<Rat01>& sup_samples,
                                      const AxiomCheckOptions& opts = {});

// Closure of the generators under join, circ, scalar truncated minus and the
// unary action/power families with grid scalars, iterated `depth` rounds.
// Returns the maps together with the terms that produced them.
std::vector<std::pair<ValuedMap, std::string>> generate_closure(
    const std::vector<ValuedMap>& generators, unsigned depth, unsigned grid_q);

struct DensityTargetResult {
  Rat01 best_distance;
  std::string witness_term;
  bool hit;  // best_distance <= epsilon
};

struct DensityReport {
  bool generators_point_separating = true;
  bool generators_initial = true;
  std::vector<DensityTargetResult> targets;
};

// For each target, finds a closure member within epsilon in sup-distance.
// When the generators contain the principal upper-set indicators, the
// closed-form witness certifies distance zero without search.
DensityReport density_check(const FinPoset& x, const std::vector<ValuedMap>& generators,
                            const std::vector<ValuedMap>& targets, const Rat01& epsilon,
                            unsigned depth, unsigned grid_q);

// Least monotone extension of the partial assignment subset[i] -> values[i]:
// f(x) = max over assigned s <= x (0 when none). Throws NotMonotone when the
// partial data violates the induced order.
ValuedMap monotone_extend(const FinPoset& x, const std::vector<int>& subset,
                          const std::vector<Rat01>& values);

// Separating family for disjoint A and order-convex B: all results coincide
// on A and are constant u on B, one map per requested u. The 1-on-(A up of B)
// and 0-on-(A down of B) orientation is forced by monotonicity for the
// numeric order. Throws PreconditionViolated.
std::vector<ValuedMap> separating_family(const FinPoset& x, const Bits& a, const Bits& b,
                                         const std::vector<Rat01>& us);

// One pair of maps per element outside A, agreeing exactly on A.
std::vector<std::pair<ValuedMap, ValuedMap>> equalizer_presentation(const FinPoset& x,
                                                                    const Bits& a);

// Joint agreement set of a family of parallel pairs.
Bits joint_agreement(const FinPoset& x,
                     const std::vector<std::pair<ValuedMap, ValuedMap>>& pairs);

// The countable-arity operation of the extended theory, applied pointwise to
// an eventually-constant sequence of maps.
ValuedMap delta_pointwise(const std::vector<ValuedMap>& prefix, const ValuedMap& tail);

}  // namespace poskit
