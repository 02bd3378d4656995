#include "poskit/metric.hpp"

#include <set>

#include "poskit/error.hpp"

namespace poskit {

FinMetric::FinMetric(std::vector<std::string> elements, std::vector<std::vector<Rat01>> dist)
    : elems_(std::move(elements)), dist_(std::move(dist)) {
  {
    std::set<std::string> seen;
    for (const auto& e : elems_)
      if (!seen.insert(e).second) fail("ParseError", "duplicate element \"" + e + "\"");
  }
  const size_t n = elems_.size();
  if (dist_.size() != n) fail("ParseError", "distance table size mismatch");
  for (const auto& row : dist_)
    if (row.size() != n) fail("ParseError", "distance table row size mismatch");
  for (size_t i = 0; i < n; ++i)
    if (!dist_[i][i].is_zero())
      fail("InvalidMetric", "nonzero distance on the diagonal at \"" + elems_[i] + "\"");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (!(oplus(dist_[i][j], dist_[j][k]) >= dist_[i][k]))
          fail("InvalidMetric", "triangle law fails at (" + elems_[i] + ", " + elems_[j] +
                                    ", " + elems_[k] + ")");
}

int FinMetric::index_of(const std::string& e) const {
  for (int i = 0; i < size(); ++i)
    if (elems_[i] == e) return i;
  fail("UnknownElement", "no element \"" + e + "\"");
}

InducedOrder order_of(const FinMetric& m) {
  InducedOrder out;
  out.elements = m.elements();
  const int n = m.size();
  out.leq.assign(n, Bits(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.dist(i, j).is_zero()) out.leq[i].set(j);
  out.antisymmetric = true;
  for (int i = 0; i < n && out.antisymmetric; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && out.leq[i].test(j) && out.leq[j].test(i)) {
        out.antisymmetric = false;
        break;
      }
  if (out.antisymmetric) out.poset = FinPoset::from_relation(out.elements, out.leq);
  return out;
}

FinMetric symmetrize(const FinMetric& m) {
  const int n = m.size();
  std::vector<std::vector<Rat01>> d(n, std::vector<Rat01>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d[i][j] = max(m.dist(i, j), m.dist(j, i));
  return FinMetric(m.elements(), std::move(d));
}

bool is_separated(const FinMetric& m) {
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (i != j && m.dist(i, j).is_zero() && m.dist(j, i).is_zero()) return false;
  return true;
}

FinMetric canonical_metric(const FinPoset& x) {
  const int n = x.size();
  std::vector<std::vector<Rat01>> d(n, std::vector<Rat01>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d[i][j] = x.leq(i, j) ? Rat01::zero() : Rat01::one();
  return FinMetric(x.elements(), std::move(d));
}

FinMetric product_metric(const std::vector<FinMetric>& ms) {
  if (ms.empty()) fail("ParseError", "product of an empty metric list");
  std::vector<int> sizes;
  long total = 1;
  for (const auto& m : ms) {
    sizes.push_back(m.size());
    total *= m.size();
  }
  std::vector<std::vector<int>> tuples;
  if (total > 0) {
    std::vector<int> t(ms.size(), 0);
    for (;;) {
      tuples.push_back(t);
      int pos = static_cast<int>(ms.size()) - 1;
      while (pos >= 0 && t[pos] + 1 == sizes[pos]) t[pos--] = 0;
      if (pos < 0) break;
      ++t[pos];
    }
  }
  std::vector<std::string> names;
  names.reserve(tuples.size());
  for (const auto& t : tuples) {
    std::string n = "(";
    for (size_t i = 0; i < t.size(); ++i) {
      if (i) n += ",";
      n += ms[i].name(t[i]);
    }
    names.push_back(n + ")");
  }
  // Weights 2^-(n+1) keep the truncated series exact and below 1.
  std::vector<mpq_class> weights;
  mpq_class w(1, 2);
  for (size_t i = 0; i < ms.size(); ++i) {
    weights.push_back(w);
    w /= 2;
  }
  const int tn = static_cast<int>(tuples.size());
  std::vector<std::vector<Rat01>> d(tn, std::vector<Rat01>(tn));
  for (int a = 0; a < tn; ++a)
    for (int b = 0; b < tn; ++b) {
      mpq_class sum = 0;
      for (size_t i = 0; i < ms.size(); ++i)
        sum += weights[i] * ms[i].dist(tuples[a][i], tuples[b][i]).raw();
      d[a][b] = Rat01::exact(sum);
    }
  return FinMetric(std::move(names), std::move(d));
}

std::vector<int> epsilon_net(const FinMetric& m) {
  const int n = m.size();
  Bits net(n);
  std::vector<int> ordered;
  auto current = [&]() {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (net.test(i)) s.push_back(i);
    return s;
  };
  if (n == 0) return {};
  FinMetric sym = symmetrize(m);
  for (unsigned long k = 1;; ++k) {
    mpq_class radius(1, k);
    // Greedy cover by open symmetric balls of radius 1/k, centers taken in
    // element-list order.
    Bits covered(n);
    for (int x = 0; x < n; ++x) {
      if (covered.test(x)) continue;
      net.set(x);
      for (int y = 0; y < n; ++y)
        if (sym.dist(x, y).raw() < radius) covered.set(y);
    }
    std::vector<int> s = current();
    if (yoneda_initial(m, s)) return s;
  }
}

bool yoneda_initial(const FinMetric& m, const std::vector<int>& s) {
  for (int x = 0; x < m.size(); ++x)
    for (int y = 0; y < m.size(); ++y) {
      Rat01 join = Rat01::zero();
      for (int z : s) join = max(join, trunc_minus(m.dist(z, y), m.dist(z, x)));
      if (!(join >= m.dist(x, y))) return false;
    }
  return true;
}

}  // namespace poskit
