#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pfc {

/// Exact rational number. Every weight, exponent and character coefficient
/// in the library is one of these.
using Q = mpq_class;

/// Parses "a", "a/b" or a finite decimal such as "-0.4" into an exact rational.
Q parse_rational(std::string_view text);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Q& x);

bool is_integer(const Q& x);
long to_long(const Q& x);  // requires is_integer
Q floor_q(const Q& x);
Q ceil_q(const Q& x);

/// x mod m, result in [0, m). m must be positive.
Q mod_q(const Q& x, const Q& m);

/// True when x - y is an integer multiple of m.
bool congruent(const Q& x, const Q& y, const Q& m);

long gcd_l(long a, long b);
long lcm_l(long a, long b);

inline Q q_of(long num, long den = 1) {
  Q r(num, den);
  r.canonicalize();
  return r;
}

// mpq_class has no <=>; containers keyed on Q use this.
struct QLess {
  bool operator()(const Q& a, const Q& b) const { return cmp(a, b) < 0; }
};

}  // namespace pfc
