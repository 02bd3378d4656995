#include "poskit/rat01.hpp"

#include <cctype>
#include <ostream>

#include "poskit/error.hpp"

namespace poskit {

Rat01 Rat01::one() { return Rat01(mpq_class(1)); }

Rat01 Rat01::exact(mpq_class v) {
  v.canonicalize();
  if (v < 0 || v > 1) fail("ParseError", "rational " + v.get_str() + " out of [0,1]");
  return Rat01(std::move(v));
}

Rat01 Rat01::fraction(long num, unsigned long den) {
  if (den == 0) fail("ParseError", "zero denominator");
  mpq_class v(num, den);
  return exact(std::move(v));
}

namespace {
bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}
}  // namespace

Rat01 Rat01::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (text == "0") return zero();
    if (text == "1") return one();
    fail("ParseError", "expected \"p/q\", \"0\" or \"1\", got \"" + text + "\"");
  }
  std::string p = text.substr(0, slash);
  std::string q = text.substr(slash + 1);
  if (!all_digits(p) || !all_digits(q))
    fail("ParseError", "malformed rational \"" + text + "\"");
  mpz_class num(p), den(q);
  if (den == 0) fail("ParseError", "zero denominator in \"" + text + "\"");
  return exact(mpq_class(num, den));
}

std::string Rat01::str() const {
  if (v_ == 0) return "0";
  if (v_ == 1) return "1";
  return v_.get_str();
}

Rat01 min(const Rat01& a, const Rat01& b) { return a <= b ? a : b; }
Rat01 max(const Rat01& a, const Rat01& b) { return a >= b ? a : b; }

Rat01 abs_diff(const Rat01& a, const Rat01& b) {
  mpq_class d = a.raw() - b.raw();
  if (d < 0) d = -d;
  return Rat01::exact(std::move(d));
}

Rat01 complement(const Rat01& u) { return Rat01::exact(1 - u.raw()); }

std::ostream& operator<<(std::ostream& os, const Rat01& r) { return os << r.str(); }

}  // namespace poskit
