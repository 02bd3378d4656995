#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poskit/poset.hpp"
#include "poskit/quantale.hpp"
#include "poskit/rat01.hpp"

namespace poskit {

// Finite [0,1]-valued metric in the enriched sense: zero on the diagonal and
// dist(x,z) <= dist(x,y) (+) dist(y,z). Symmetry is not required, and
// distinct points may sit at distance zero.
class FinMetric {
public:
  // Validates the invariants; throws ParseError on malformed tables and
  // InvalidMetric when the diagonal or triangle law fails.
  FinMetric(std::vector<std::string> elements, std::vector<std::vector<Rat01>> dist);

  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<std::string>& elements() const { return elems_; }
  const std::string& name(int i) const { return elems_[i]; }
  int index_of(const std::string& e) const;
  const Rat01& dist(int i, int j) const { return dist_[i][j]; }

  friend bool operator==(const FinMetric& a, const FinMetric& b) {
    return a.elems_ == b.elems_ && a.dist_ == b.dist_;
  }
  friend bool operator!=(const FinMetric& a, const FinMetric& b) { return !(a == b); }

private:
  std::vector<std::string> elems_;
  std::vector<std::vector<Rat01>> dist_;
};

// The induced order x <= y iff dist(x,y) = 0; a preorder, and a poset
// exactly when the metric is separated.
struct InducedOrder {
  std::vector<std::string> elements;
  std::vector<Bits> leq;  // leq[i] = { j : dist(i,j) = 0 }
  bool antisymmetric = false;
  std::optional<FinPoset> poset;  // present iff antisymmetric
};

InducedOrder order_of(const FinMetric& m);

// Pointwise maximum with the transpose; symmetric, idempotent, dominates m.
FinMetric symmetrize(const FinMetric& m);

// Mutual distance zero happens only on the diagonal.
bool is_separated(const FinMetric& m);

// dist(x,y) = 0 when x <= y and 1 otherwise; order_of gives the poset back.
FinMetric canonical_metric(const FinPoset& x);

// Cartesian product carrier with distance sum of 2^-(n+1) dist_n; the finite
// truncation of the classical product metric, exact on finite lists.
FinMetric product_metric(const std::vector<FinMetric>& ms);

// Greedy centers of symmetric open balls of radius 1/n, unioned over
// n = 1, 2, ... until the distance cone from the net is initial. Terminates
// because the full carrier always works.
std::vector<int> epsilon_net(const FinMetric& m);

// join over z in S of dist(z,y) (-) dist(z,x) >= dist(x,y) for all x, y.
// (The reverse inequality holds for every S by the triangle law.)
bool yoneda_initial(const FinMetric& m, const std::vector<int>& s);

}  // namespace poskit
