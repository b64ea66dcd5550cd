#pragma once

#include "pfc/rational.hpp"

namespace pfc {

/// Calls fn(n, e) for every integer n with e = c * (a*n + b)^2 <= bound,
/// where a != 0 and c > 0. The set is finite; fn sees n in no fixed order.
template <class Fn>
void for_each_square_below(const Q& a, const Q& b, const Q& c, const Q& bound, Fn fn) {
  if (cmp(bound, Q(0)) < 0) return;
  Q centre = floor_q(Q(-b / a));
  auto value = [&](const Q& n) {
    Q x = a * n + b;
    return Q(c * x * x);
  };
  // value is convex in n with its minimum in [centre, centre + 1].
  for (Q n = centre + 1;; n += 1) {
    Q e = value(n);
    if (cmp(e, bound) > 0) break;
    fn(to_long(n), e);
  }
  for (Q n = centre;; n -= 1) {
    Q e = value(n);
    if (cmp(e, bound) > 0) break;
    fn(to_long(n), e);
  }
}

}  // namespace pfc
