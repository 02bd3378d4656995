#include "poskit/quantale.hpp"

#include <cassert>

namespace poskit {

Rat01 luk_tensor(const Rat01& u, const Rat01& v) {
  mpq_class s = u.raw() + v.raw() - 1;
  if (s < 0) return Rat01::zero();
  return Rat01::exact(std::move(s));
}

Rat01 pitchfork(const Rat01& v, const Rat01& u) {
  mpq_class s = 1 - u.raw() + v.raw();
  if (s > 1) return Rat01::one();
  return Rat01::exact(std::move(s));
}

Rat01 trunc_minus(const Rat01& v, const Rat01& u) {
  mpq_class s = v.raw() - u.raw();
  if (s < 0) return Rat01::zero();
  return Rat01::exact(std::move(s));
}

Rat01 oplus(const Rat01& u, const Rat01& v) {
  mpq_class s = u.raw() + v.raw();
  if (s > 1) return Rat01::one();
  return Rat01::exact(std::move(s));
}

std::vector<Rat01> unit_grid(unsigned q) {
  assert(q >= 1);
  std::vector<Rat01> g;
  g.reserve(q + 1);
  for (unsigned k = 0; k <= q; ++k) g.push_back(Rat01::fraction(static_cast<long>(k), q));
  return g;
}

}  // namespace poskit
