#pragma once

#include <vector>

#include "poskit/rat01.hpp"

namespace poskit {

// The two quantale structures on [0,1], computed exactly.

// u (x) v = max(0, u + v - 1). Unit 1.
Rat01 luk_tensor(const Rat01& u, const Rat01& v);

// v (pitchfork) u = min(1, 1 - u + v); right adjoint of the tensor action:
// luk_tensor(x, u) <= y  iff  x <= pitchfork(y, u).
Rat01 pitchfork(const Rat01& v, const Rat01& u);

// v (-) u = max(0, v - u); equals pitchfork(0', pitchfork(u, v)) where the
// outer application is taken at 0.
Rat01 trunc_minus(const Rat01& v, const Rat01& u);

// u (+) v = min(1, u + v). Unit 0.
Rat01 oplus(const Rat01& u, const Rat01& v);

// {0, 1/q, 2/q, ..., 1}; q >= 1.
std::vector<Rat01> unit_grid(unsigned q);

}  // namespace poskit
