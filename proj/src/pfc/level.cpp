#include "pfc/level.hpp"

#include "pfc/error.hpp"

namespace pfc {

MinModel::MinModel(long u_, long v_) : u(u_), v(v_) {
  if (u < 2 || v < 2 || gcd_l(u, v) != 1)
    fail(Errc::InvalidLevel, "minimal model needs coprime u, v >= 2, got (" + std::to_string(u) + "," +
                                 std::to_string(v) + ")");
}

Q MinModel::central_charge() const { return 1 - q_of(6 * (u - v) * (u - v), u * v); }

Level::Level(long u, long v) : u_(u), v_(v), mm_(u, v) {
  if (u >= 2 * v) fail(Errc::InvalidLevel, "only negative levels are supported (u < 2v)");
  t_ = q_of(u, v);
  k_ = t_ - 2;
}

Q Level::lambda(long r, long s) const {
  if (r < 1 || r > u_ - 1 || s < 0 || s > v_ - 1)
    fail(Errc::RangeError, "lambda(" + std::to_string(r) + "," + std::to_string(s) + ") outside 1<=r<=u-1, 0<=s<=v-1");
  return Q(r - 1) - t_ * s;
}

Q Level::delta(long r, long s) const {
  if (r < 1 || r > u_ - 1 || s < 0 || s > v_ - 1)
    fail(Errc::RangeError, "Delta(" + std::to_string(r) + "," + std::to_string(s) + ") outside 1<=r<=u-1, 0<=s<=v-1");
  long d = v_ * r - u_ * s;
  return q_of(d * d - v_ * v_, 4 * u_ * v_);
}

std::string Level::describe() const {
  return "u=" + std::to_string(u_) + " v=" + std::to_string(v_) + " k=" + to_string(k_) + " t=" + to_string(t_) +
         " w=" + std::to_string(w()) + " p=" + std::to_string(p()) + " c=" + to_string(c_affine()) +
         " c_coset=" + to_string(c_coset()) + " c_vir=" + to_string(c_virasoro());
}

}  // namespace pfc
