#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace poskit {

// Exact rational confined to [0,1]. GMP keeps the representation canonical
// (fully reduced, positive denominator), so value equality is representation
// equality. Immutable after construction.
class Rat01 {
public:
  Rat01() : v_(0) {}

  static Rat01 zero() { return Rat01(); }
  static Rat01 one();

  // num/den reduced; throws ParseError when den == 0 or the value leaves [0,1].
  static Rat01 fraction(long num, unsigned long den);

  // Validates 0 <= v <= 1.
  static Rat01 exact(mpq_class v);

  // Accepts "p/q" (p, q unsigned decimal literals) and the integers "0", "1".
  static Rat01 parse(const std::string& text);

  const mpq_class& raw() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  // "0", "1", or reduced "p/q".
  std::string str() const;

  friend bool operator==(const Rat01& a, const Rat01& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat01& a, const Rat01& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat01& a, const Rat01& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat01& a, const Rat01& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat01& a, const Rat01& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat01& a, const Rat01& b) { return a.v_ >= b.v_; }

private:
  explicit Rat01(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

Rat01 min(const Rat01& a, const Rat01& b);
Rat01 max(const Rat01& a, const Rat01& b);

// |a - b|, always in [0,1].
Rat01 abs_diff(const Rat01& a, const Rat01& b);

// 1 - u (the quantale isomorphism between the two tensors).
Rat01 complement(const Rat01& u);

std::ostream& operator<<(std::ostream&, const Rat01&);

}  // namespace poskit
