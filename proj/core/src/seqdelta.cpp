#include "poskit/seqdelta.hpp"

#include <cassert>
#include <sstream>

#include "poskit/error.hpp"
#include "poskit/quantale.hpp"

namespace poskit {

namespace {

mpq_class qmin(const mpq_class& a, const mpq_class& b) { return a <= b ? a : b; }

// 2^e as an exact rational, e possibly negative.
mpq_class pow2(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e < 0) return mpq_class(mpz_class(1), p);
  return mpq_class(p);
}

}  // namespace

Seq01 Seq01::constant(Rat01 value) {
  Seq01 s;
  s.kind_ = Tail::Constant;
  s.tail_ = std::move(value);
  return s;
}

Seq01 Seq01::eventually(std::vector<Rat01> prefix, Rat01 tail) {
  Seq01 s;
  s.prefix_ = std::move(prefix);
  s.kind_ = Tail::Constant;
  s.tail_ = std::move(tail);
  s.canonicalize();
  return s;
}

Seq01 Seq01::ascent(std::vector<Rat01> prefix, Rat01 limit) {
  Seq01 s;
  s.prefix_ = std::move(prefix);
  s.kind_ = Tail::AscentLimit;
  s.tail_ = std::move(limit);
  mpq_class first = s.tail_.raw() - pow2(1 - static_cast<long>(s.prefix_.size()));
  if (first < 0)
    fail("ParseError", "ascent tail needs limit - 2^(1-n) >= 0 at its start index");
  s.canonicalize();
  return s;
}

void Seq01::canonicalize() {
  if (kind_ == Tail::Constant) {
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
    return;
  }
  // Absorb prefix entries that already follow the ascent formula.
  while (!prefix_.empty()) {
    long idx = static_cast<long>(prefix_.size()) - 1;
    mpq_class expected = tail_.raw() - pow2(1 - idx);
    if (expected < 0 || prefix_.back().raw() != expected) break;
    prefix_.pop_back();
  }
}

Rat01 Seq01::at(size_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  if (kind_ == Tail::Constant) return tail_;
  return Rat01::exact(tail_.raw() - pow2(1 - static_cast<long>(n)));
}

std::string Seq01::str() const {
  std::ostringstream os;
  os << "[";
  for (const Rat01& v : prefix_) os << v.str() << ", ";
  if (kind_ == Tail::Constant)
    os << tail_.str() << ", ...]";
  else
    os << "-> " << tail_.str() << "]";
  return os.str();
}

bool pointwise_leq(const Seq01& a, const Seq01& b) {
  size_t n0 = std::max(a.tail_start(), b.tail_start());
  for (size_t n = 0; n < n0; ++n)
    if (!(a.at(n) <= b.at(n))) return false;
  const bool aa = a.tail_kind() == Seq01::Tail::AscentLimit;
  const bool ba = b.tail_kind() == Seq01::Tail::AscentLimit;
  if (!aa && !ba) return a.tail_value() <= b.tail_value();
  if (!aa && ba) return a.tail_value() <= b.at(n0);  // b grows from its value at n0
  if (aa && !ba) return a.tail_value() <= b.tail_value();  // sup of a must stay below
  return a.tail_value() <= b.tail_value();
}

Rat01 sup_distance(const Seq01& a, const Seq01& b) {
  size_t n0 = std::max(a.tail_start(), b.tail_start());
  Rat01 best = Rat01::zero();
  for (size_t n = 0; n < n0; ++n) best = max(best, abs_diff(a.at(n), b.at(n)));
  const bool aa = a.tail_kind() == Seq01::Tail::AscentLimit;
  const bool ba = b.tail_kind() == Seq01::Tail::AscentLimit;
  if (aa == ba) {
    // Same shape: the tail difference is constant (|c - c'| or |L - L'|).
    best = max(best, abs_diff(a.tail_value(), b.tail_value()));
  } else {
    // Constant against ascent: |c - L + 2^(1-n)| is monotone in 2^(1-n), so
    // the supremum is reached at the first tail index or in the limit.
    best = max(best, abs_diff(a.at(n0), b.at(n0)));
    best = max(best, abs_diff(a.tail_value(), b.tail_value()));
  }
  return best;
}

bool is_increasing(const Seq01& s) {
  for (size_t n = 1; n <= s.tail_start(); ++n)
    if (!(s.at(n - 1) <= s.at(n))) return false;
  return true;  // both tail shapes are nondecreasing on their own
}

Seq01 running_join(const Seq01& s) {
  std::vector<Rat01> run;
  run.reserve(s.prefix().size());
  Rat01 acc = Rat01::zero();
  for (size_t n = 0; n < s.prefix().size(); ++n) {
    acc = n == 0 ? s.prefix()[n] : max(acc, s.prefix()[n]);
    run.push_back(acc);
  }
  const size_t start = s.tail_start();
  if (s.tail_kind() == Seq01::Tail::Constant) {
    Rat01 tail = run.empty() ? s.tail_value() : max(run.back(), s.tail_value());
    return Seq01::eventually(std::move(run), tail);
  }
  // Ascent tail: join with the running prefix maximum.
  if (run.empty()) return s;
  const Rat01& peak = run.back();
  const Rat01& limit = s.tail_value();
  if (peak <= s.at(start)) return Seq01::ascent(std::move(run), limit);
  if (limit <= peak) return Seq01::eventually(std::move(run), peak);
  // The ascent crosses the peak at the first n with 2^(1-n) < limit - peak.
  mpq_class margin = limit.raw() - peak.raw();
  long n = static_cast<long>(start);
  while (!(pow2(1 - n) < margin)) {
    run.push_back(peak);
    ++n;
  }
  return Seq01::ascent(std::move(run), limit);
}

Seq01 rate_limit(const Seq01& s) {
  const size_t start = s.tail_start();
  std::vector<Rat01> v;
  v.reserve(start + 4);
  for (size_t n = 0; n <= start; ++n) {
    if (n == 0)
      v.push_back(s.at(0));
    else
      v.push_back(Rat01::exact(
          qmin(s.at(n).raw(), v.back().raw() + pow2(1 - static_cast<long>(n)))));
  }
  Rat01 state = v.back();
  v.pop_back();  // v now holds indices [0, start); `state` is the value at `start`

  if (s.tail_kind() == Seq01::Tail::Constant) {
    const Rat01& t = s.tail_value();
    if (state == t) return Seq01::eventually(std::move(v), t);
    mpq_class cap = state.raw() + pow2(1 - static_cast<long>(start));
    if (cap <= t.raw()) {
      v.push_back(state);
      return Seq01::ascent(std::move(v), Rat01::exact(cap));
    }
    // The capped ascent reaches t after finitely many steps.
    long n = static_cast<long>(start);
    while (state != t) {
      v.push_back(state);
      state = Rat01::exact(qmin(t.raw(), state.raw() + pow2(-n)));
      ++n;
    }
    return Seq01::eventually(std::move(v), t);
  }

  // Ascent input: at the tail the input grows by exactly 2^-n each step, so
  // the limiter either tracks it (state == first tail value) or ascends
  // unclipped below it forever.
  if (state == s.at(start)) {
    v.push_back(state);
    return Seq01::ascent(std::move(v), s.tail_value());
  }
  mpq_class cap = state.raw() + pow2(1 - static_cast<long>(start));
  v.push_back(state);
  return Seq01::ascent(std::move(v), Rat01::exact(cap));
}

bool in_limit_class(const Seq01& s) {
  if (!is_increasing(s)) return false;
  for (size_t n = 0; n < s.tail_start(); ++n) {
    mpq_class gap = s.at(n + 1).raw() - s.at(n).raw();
    if (gap > pow2(-static_cast<long>(n))) return false;
  }
  return true;  // ascent-tail gaps are exactly 2^-n, constant-tail gaps are 0
}

Rat01 limit_value(const Seq01& s, const Rat01&) {
  if (!in_limit_class(s))
    fail("NotInClassC", "sequence " + s.str() + " is not in the limit class");
  return s.tail_value();
}

Rat01 delta(const Seq01& s) {
  Seq01 tamed = rate_limit(running_join(s));
  assert(in_limit_class(tamed));
  return limit_value(tamed, Rat01::zero());
}

Seq01 approximant_from_samples(const std::vector<Rat01>& samples, const Rat01& target,
                               unsigned k) {
  if (samples.empty()) fail("InsufficientSamples", "no samples given");
  std::vector<Rat01> below;
  below.reserve(samples.size());
  for (size_t n = 0; n < samples.size(); ++n) {
    mpq_class bound(1, static_cast<unsigned long>(n + 1));
    if (abs_diff(samples[n], target).raw() > bound)
      fail("ApproximationBoundViolated",
           "sample " + std::to_string(n) + " = " + samples[n].str() + " is farther than 1/" +
               std::to_string(n + 1) + " from " + target.str());
    // Samples already below the target are kept; overshooting ones are
    // pulled below it by the truncated subtraction.
    below.push_back(samples[n] <= target ? samples[n]
                                         : trunc_minus(samples[n], Rat01::exact(bound)));
  }
  std::vector<Rat01> run;
  Rat01 acc = below[0];
  for (const Rat01& p : below) {
    acc = max(acc, p);
    run.push_back(acc);
  }
  // Greedy gap-bounded subsequence: from w_j, jump to the largest running
  // join value within 2^-j.
  std::vector<Rat01> picked{run[0]};
  for (long j = 0;; ++j) {
    const Rat01& cur = picked.back();
    mpq_class allowed = cur.raw() + pow2(-j);
    Rat01 next = cur;
    for (const Rat01& v : run)
      if (v.raw() <= allowed && next < v) next = v;
    if (next == cur) break;
    picked.push_back(next);
  }
  Rat01 tail = picked.back();
  picked.pop_back();
  if (target.raw() - tail.raw() > pow2(-static_cast<long>(k)))
    fail("InsufficientSamples", "best reachable tail " + tail.str() + " misses " + target.str() +
                                    " by more than 2^-" + std::to_string(k));
  Seq01 out = Seq01::eventually(std::move(picked), tail);
  assert(in_limit_class(out));
  return out;
}

}  // namespace poskit
