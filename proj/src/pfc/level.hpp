#pragma once

#include <string>

#include "pfc/rational.hpp"

namespace pfc {

/// Coprime pair (u, v), both at least 2, labelling the minimal model M(u,v).
struct MinModel {
  long u;
  long v;

  MinModel(long u, long v);
  Q central_charge() const;  // 1 - 6(u-v)^2/(uv)
};

/// Admissible level k = u/v - 2 with k < 0.
class Level {
 public:
  Level(long u, long v);

  long u() const { return u_; }
  long v() const { return v_; }
  long w() const { return 2 * v_ - u_; }
  long p() const { return v_ * w(); }
  const Q& t() const { return t_; }
  const Q& k() const { return k_; }
  Q c_affine() const { return 3 - 6 / t_; }
  Q c_coset() const { return 2 - 6 / t_; }
  Q c_virasoro() const { return mm_.central_charge(); }
  const MinModel& minmod() const { return mm_; }

  /// lambda_{r,s} = r - 1 - t s, for 1 <= r <= u-1, 0 <= s <= v-1.
  Q lambda(long r, long s) const;
  /// Delta_{r,s} = ((vr - us)^2 - v^2) / 4uv.
  Q delta(long r, long s) const;
  /// -1/(4k) = v/(4w), the coefficient of mu^2 in coset weights.
  Q inv4k_neg() const { return q_of(v_, 4 * w()); }

  std::string describe() const;

 private:
  long u_, v_;
  Q t_, k_;
  MinModel mm_;
};

}  // namespace pfc
