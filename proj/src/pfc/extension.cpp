#include "pfc/extension.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pfc/error.hpp"
#include "pfc/fusion.hpp"
#include "pfc/lattice_sum.hpp"
#include "pfc/minmod.hpp"

namespace pfc {

namespace {

Q two_w(const Level& lv) { return Q(2 * lv.w()); }

Real cos_pi(const Q& x) { return boost::multiprecision::cos(pi_real() * to_real(mod_q(x, Q(2)))); }
Real sin_pi(const Q& x) { return boost::multiprecision::sin(pi_real() * to_real(mod_q(x, Q(2)))); }

// (n, exponent) for every n with c (b + a n)^2 <= order.
std::vector<std::pair<long, Q>> lattice_points(const Q& a, const Q& b, const Q& c, const Q& order) {
  std::vector<std::pair<long, Q>> out;
  for_each_square_below(a, b, c, order, [&](long n, const Q& e) { out.emplace_back(n, e); });
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

}  // namespace

bool in_dual_lattice(const Level& lv, const Q& mu) { return is_integer(Q(mu * lv.v())); }

bool lifts(const Level& lv, const CosetLabel& x) {
  return x.kind != CosetKind::E || in_dual_lattice(lv, x.mu);
}

CosetLabel ext_canonical(const Level& lv, const CosetLabel& x) {
  CosetLabel c = canonical(lv, x);
  if (!lifts(lv, c)) fail(Errc::NotLiftable, "E-type weight " + to_string(c.mu) + " is not in (1/v)Z");
  c.mu = mod_q(c.mu, two_w(lv));
  return c;
}

QSeries theta(const Level& lv, const Q& mu, const Q& order) {
  SeriesBuilder b(order);
  for_each_square_below(two_w(lv), mu, lv.inv4k_neg(), order, [&](long, const Q& e) { b.add(e, Q(1)); });
  return b.build();
}

QSeries theta_one_sided(const Level& lv, const Q& mu, const Q& order) {
  SeriesBuilder b(order);
  for_each_square_below(-two_w(lv), mu, lv.inv4k_neg(), order, [&](long l, const Q& e) {
    if (l >= 0) b.add(e, Q(1));
  });
  for_each_square_below(two_w(lv), mu + two_w(lv), lv.inv4k_neg(), order, [&](long l, const Q& e) {
    if (l >= 0) b.add(e, Q(1));
  });
  return b.build();
}

QSeries dtheta(const Level& lv, const Q& mu, const Q& order, Route route) {
  const Q tw = two_w(lv);
  SeriesBuilder b(order);
  if (route == Route::Primary) {
    for_each_square_below(tw, mu, lv.inv4k_neg(), order, [&](long n, const Q& e) {
      Q lam = mu + tw * n;
      b.add(e, Q(-lam / tw));
    });
    return b.build();
  }
  for_each_square_below(-tw, mu, lv.inv4k_neg(), order, [&](long l, const Q& e) { b.add(e, Q(l)); });
  return b.build() - theta(lv, mu, order).scale(mu / tw);
}

QSeries A_closed(const Level& lv, const Q& lam, const Q& order) {
  return dtheta(lv, lam, order).scale(Q(2)) + theta(lv, lam, order).scale(1 + lam / lv.w());
}

QSeries A_resummed(const Level& lv, const Q& lam, const Q& order) {
  const Q tw = two_w(lv);
  const Q c = lv.inv4k_neg();
  // f(n) = -(lam - 2wn)^2/4k and g(n) = -(lam + 2w(n+1))^2/4k = f(-n-1).
  auto F = lattice_points(-tw, lam, c, order);
  auto G = lattice_points(tw, lam + tw, c, order);
  SeriesBuilder b(order);
  long top = 0;
  for (const auto& [n, e] : F) top = std::max(top, n);
  for (const auto& [n, e] : G) top = std::max(top, n);
  // l >= 0: all m >= 0, i.e. n = l + m >= l.
  for (long l = 0; l <= top; ++l) {
    for (const auto& [n, e] : F)
      if (n >= l) b.add(e, Q(1));
    for (const auto& [n, e] : G)
      if (n >= l) b.add(e, Q(-1));
  }
  // l <= -1: sum_{n >= -l} q^{f(n)} - sum_{n <= l-1} q^{f(n)}.
  long reach = 1;
  for (const auto& [n, e] : F) reach = std::max(reach, std::labs(n) + 1);
  for (long l = -1; l >= -reach; --l) {
    for (const auto& [n, e] : F) {
      if (n >= -l) b.add(e, Q(1));
      if (n <= l - 1) b.add(e, Q(-1));
    }
  }
  return b.build();
}

QSeries std_char(const Level& lv, const Q& mu, long r, long s, const Q& order) {
  if (!in_dual_lattice(lv, mu)) fail(Errc::NotLiftable, "weight " + to_string(mu) + " is not in (1/v)Z");
  const MinModel& m = lv.minmod();
  return product_to(
      order, chi_over_eta_valuation(m, r, s), [&](const Q& n) { return chi_over_eta(m, r, s, n); }, Q(0),
      [&](const Q& n) { return theta(lv, mu, n); });
}

QSeries gamma(const Level& lv, const Q& mu, long r, const Q& order) {
  if (r < 1 || r > lv.u() - 1) fail(Errc::RangeError, "r=" + std::to_string(r) + " outside 1..u-1");
  if (!congruent(mu, Q(r - 1), Q(2))) fail(Errc::ParityMismatch, "Gamma needs mu = r-1 (mod 2)");
  const MinModel& m = lv.minmod();
  const Q k = lv.k();
  QSeries total = QSeries::zero(order);
  for (long s = 1; s < lv.v(); ++s) {
    QSeries term = product_to(
        order, Q(0), [&](const Q& n) { return dtheta(lv, mu + s * k, n) - dtheta(lv, mu - s * k, n); },
        chi_over_eta_valuation(m, r, s), [&](const Q& n) { return chi_over_eta(m, r, s, n); });
    total = (s % 2 == 1) ? total + term : total - term;
  }
  return total;
}

namespace {

QSeries ext_C_theta(const Level& lv, const Q& mu, long r, const Q& order) {
  const Q k = lv.k();
  const long v = lv.v();
  const Q tw = two_w(lv);
  QSeries total = gamma(lv, mu, r, order);
  for (long s = 1; s < v; ++s) {
    QSeries plus = std_char(lv, mu + s * k, r, s, order).scale((mu - (v - s) * k) / tw);
    QSeries minus = std_char(lv, mu - s * k, r, s, order).scale((mu + (v - s) * k) / tw);
    total = (s % 2 == 1) ? total + plus - minus : total - plus + minus;
  }
  return total;
}

QSeries ext_D_theta(const Level& lv, const Q& mu, long r, long s, const Q& order) {
  const Q k = lv.k();
  const long v = lv.v();
  QSeries total = QSeries::zero(order);
  for (long sp = s + 1; sp < v; ++sp) {
    QSeries term = std_char(lv, mu - (sp - s) * k, r, sp, order);
    total = ((sp - s - 1) % 2 == 0) ? total + term : total - term;
  }
  QSeries tail = ext_C_theta(lv, mu - (v - s) * k, lv.u() - r, order);
  return ((v - 1 - s) % 2 == 0) ? total + tail : total - tail;
}

// Sum of coset characters over mu + L. Ground weights are convex in the
// weight, so walking outward until they pass the order is exhaustive.
QSeries coset_sum(const Level& lv, const CosetLabel& x, const Q& order) {
  const Q tw = two_w(lv);
  const Q far = tw + Q(lv.u()) + 2;
  QSeries total = QSeries::zero(order);
  long n0 = to_long(floor_q(Q(-x.mu / tw)));
  for (int dir : {1, -1}) {
    for (long n = (dir == 1 ? n0 : n0 - 1);; n += dir) {
      CosetLabel y = x;
      y.mu = x.mu + tw * n;
      Q g = ground_exponent(lv, y);
      Q absmu = y.mu < 0 ? Q(-y.mu) : y.mu;
      if (cmp(g, order) > 0) {
        if (cmp(absmu, far) > 0) break;
        continue;
      }
      total = total + coset_character_unchecked(lv, y, order);
    }
  }
  return total;
}

}  // namespace

QSeries ext_character(const Level& lv, const CosetLabel& raw, const Q& order, Route route) {
  CosetLabel x = canonical(lv, raw);
  if (!lifts(lv, x)) fail(Errc::NotLiftable, "E-type weight " + to_string(x.mu) + " is not in (1/v)Z");
  if (route == Route::Crosscheck) return coset_sum(lv, x, order);
  switch (x.kind) {
    case CosetKind::C: return ext_C_theta(lv, x.mu, x.r, order);
    case CosetKind::D: return ext_D_theta(lv, x.mu, x.r, x.s, order);
    default: return std_char(lv, x.mu, x.r, x.s, order);
  }
}

Q ext_ground_weight(const Level& lv, const CosetLabel& raw) {
  CosetLabel x = ext_canonical(lv, raw);
  const Q tw = two_w(lv);
  const Q reach = 2 * tw + 2 * Q(lv.u()) + 4;
  long lo = to_long(ceil_q(Q((-reach - x.mu) / tw)));
  long hi = to_long(floor_q(Q((reach - x.mu) / tw)));
  Q best;
  bool have = false;
  for (long n = lo; n <= hi; ++n) {
    CosetLabel y = x;
    y.mu = x.mu + tw * n;
    Q wgt = conformal_weight(lv, y);
    if (!have || cmp(wgt, best) < 0) {
      best = wgt;
      have = true;
    }
  }
  return best;
}

std::vector<CosetLabel> simple_currents(const Level& lv) {
  std::vector<CosetLabel> out;
  const long tw = 2 * lv.w();
  for (long mu = 0; mu < tw; mu += 2) out.push_back(C_label(Q(mu), 1));
  for (long mu = lv.u() % 2; mu < tw; mu += 2) out.push_back(C_label(Q(mu), lv.u() - 1));
  return out;
}

Q orbit_ground_weight(const Level& lv, const CosetLabel& raw) {
  CosetLabel x = ext_canonical(lv, raw);
  Q best = ext_ground_weight(lv, x);
  for (const CosetLabel& j : simple_currents(lv)) {
    CosetElement img = gr_fuse_ext(lv, j, x);
    if (img.terms.size() != 1 || img.terms.begin()->second != 1)
      fail(Errc::InvalidArgument, "simple current image is not a single module");
    Q wgt = ext_ground_weight(lv, img.terms.begin()->first);
    if (cmp(wgt, best) < 0) best = wgt;
  }
  return best;
}

std::vector<CosetLabel> enumerate_modules(const Level& lv) {
  const long u = lv.u(), v = lv.v(), w = lv.w();
  const Q tw(2 * w);
  std::vector<CosetLabel> out;
  for (long r = 1; r < u; ++r)
    for (long mu = (r - 1) % 2; mu < 2 * w; mu += 2) out.push_back(C_label(Q(mu), r));
  for (long r = 1; r < u; ++r)
    for (long s = 1; s <= v - 2; ++s)
      for (Q mu = mod_q(lv.lambda(r, s), Q(2)); cmp(mu, tw) < 0; mu += 2) out.push_back(D_label(mu, r, s));
  for (const Kac& c : kac_table(lv.minmod()))
    for (long j = 0; j < 2 * w * v; ++j) {
      Q mu = q_of(j, v);
      if (!atypical_weight(lv, mu, c.r, c.s)) out.push_back(E_label(mu, c.r, c.s));
    }
  return out;
}

std::vector<BkEntry> basis_Bk(const Level& lv) {
  const long u = lv.u(), w = lv.w();
  std::vector<BkEntry> out;
  auto add_range = [&](long r, long mu_max) {
    for (long mu = (r - 1) % 2; mu <= mu_max; mu += 2) out.push_back({Q(mu), r});
  };
  if (u % 2 == 1) {
    for (long r = 1; r <= (u - 1) / 2; ++r) add_range(r, w);
  } else {
    for (long r = 1; r <= u / 2 - 1; ++r) add_range(r, w);
    add_range(u / 2, w / 2);
  }
  return out;
}

Q dim_bound(const Level& lv) {
  const long u = lv.u(), v = lv.v(), w = lv.w();
  if (u % 2 == 1) return q_of((u - 1) * (w + 1), 4);
  return q_of(u * w, 4) - q_of(v - 1 - u, 2);
}

long gamma_rank(const Level& lv, const Q& order) {
  std::vector<std::map<Q, Q, QLess>> rows;
  for (const BkEntry& e : basis_Bk(lv)) {
    std::map<Q, Q, QLess> row;
    for (const auto& [x, c] : gamma(lv, e.mu, e.r, order).exponent_terms()) row[x] = c;
    rows.push_back(std::move(row));
  }
  long rank = 0;
  std::vector<bool> used(rows.size(), false);
  std::set<Q, QLess> columns;
  for (const auto& row : rows)
    for (const auto& [x, c] : row) columns.insert(x);
  for (const Q& col : columns) {
    size_t pivot = rows.size();
    for (size_t i = 0; i < rows.size(); ++i)
      if (!used[i] && rows[i].count(col) && rows[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows.size()) continue;
    used[pivot] = true;
    ++rank;
    const Q pv = rows[pivot][col];
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot || !rows[i].count(col) || rows[i][col] == 0) continue;
      Q f = rows[i][col] / pv;
      for (const auto& [x, c] : rows[pivot]) {
        Q& t = rows[i][x];
        t -= f * c;
        if (t == 0) rows[i].erase(x);
      }
    }
  }
  return rank;
}

RealMatrix smatrix_typ(const Level& lv) {
  const long p = lv.p();
  const Real big = boost::multiprecision::sqrt(Real(2) / Real(p));
  const Real small = boost::multiprecision::sqrt(Real(1) / Real(2 * p));
  RealMatrix out(p + 1, std::vector<Real>(p + 1));
  for (long m = 0; m <= p; ++m)
    for (long l = 0; l <= p; ++l) out[m][l] = (l % p == 0 ? small : big) * cos_pi(q_of(l * m, p));
  return out;
}

RealMatrix smatrix_theta(const Level& lv) {
  const long p = lv.p();
  const Real pre = boost::multiprecision::sqrt(Real(2) / Real(p));
  RealMatrix out(p > 1 ? p - 1 : 0, std::vector<Real>(p > 1 ? p - 1 : 0));
  for (long m = 1; m < p; ++m)
    for (long l = 1; l < p; ++l) out[m - 1][l - 1] = pre * sin_pi(q_of(l * m, p));
  return out;
}

RealMatrix smatrix_vir(const Level& lv) { return s_vir_matrix(lv.minmod()); }

Q gamma_A(const Level& lv, const BkEntry& e, GammaTable table) {
  const long u = lv.u(), w = lv.w();
  const bool half_r = (u % 2 == 0) && e.r == u / 2;
  const bool in_wZ = is_integer(Q(e.mu / w));
  if (table == GammaTable::Stated) {
    if (half_r && in_wZ) return q_of(1, 2);
    if (!half_r && !in_wZ) return Q(2);
    return Q(1);
  }
  // Orbit of mu' in Z/2wZ under mu -> -mu, and for r' = u/2 also mu -> w - mu.
  std::set<Q, QLess> orbit;
  const Q tw(2 * w);
  std::vector<Q> frontier{mod_q(e.mu, tw)};
  while (!frontier.empty()) {
    Q x = frontier.back();
    frontier.pop_back();
    if (!orbit.insert(x).second) continue;
    frontier.push_back(mod_q(Q(-x), tw));
    if (half_r) frontier.push_back(mod_q(Q(w - x), tw));
  }
  Q size(static_cast<long>(orbit.size()));
  return half_r ? Q(size / 2) : size;
}

RealMatrix smatrix_gamma(const Level& lv, GammaTable table) {
  auto B = basis_Bk(lv);
  const Real pre = Real(2) / boost::multiprecision::sqrt(Real(lv.u() * lv.w()));
  RealMatrix out(B.size(), std::vector<Real>(B.size()));
  for (size_t i = 0; i < B.size(); ++i)
    for (size_t j = 0; j < B.size(); ++j) {
      // r r'/t and mu mu'/k as exact rationals.
      Q x = q_of(B[i].r * B[j].r * lv.v(), lv.u());
      Q y = B[i].mu * B[j].mu / lv.k();
      out[i][j] = pre * to_real(gamma_A(lv, B[j], table)) * sin_pi(x) * cos_pi(y);
    }
  return out;
}

Q gamma_t_exponent(const Level& lv, const Q& mu, long r) {
  return conformal_weight(lv, C_label(mu, r)) - lv.c_coset() / 24;
}

Q std_t_exponent(const Level& lv, const Q& mu, long r, long s) {
  return lv.delta(r, s) + lv.inv4k_neg() * mu * mu - lv.c_coset() / 24;
}

bool exponents_congruent(const QSeries& s, const Q& e) {
  for (const auto& [x, c] : s.exponent_terms())
    if (!congruent(x, e, Q(1))) return false;
  return true;
}

ExtDecomposition decompose_ext(const Level& lv, const CosetLabel& raw) {
  CosetLabel x = canonical(lv, raw);
  if (!lifts(lv, x)) fail(Errc::NotLiftable, "E-type weight " + to_string(x.mu) + " is not in (1/v)Z");
  const Q k = lv.k();
  const long v = lv.v();
  const Q tw = two_w(lv);
  ExtDecomposition d;
  switch (x.kind) {
    case CosetKind::C:
      d.gamma_sign = 1;
      d.gamma_mu = x.mu;
      d.gamma_r = x.r;
      for (long s = 1; s < v; ++s) {
        Q sign = (s % 2 == 1) ? Q(1) : Q(-1);
        d.std_terms.push_back({sign * (x.mu - (v - s) * k) / tw, x.mu + s * k, x.r, s});
        d.std_terms.push_back({-sign * (x.mu + (v - s) * k) / tw, x.mu - s * k, x.r, s});
      }
      return d;
    case CosetKind::D: {
      for (long sp = x.s + 1; sp < v; ++sp)
        d.std_terms.push_back({Q((sp - x.s - 1) % 2 == 0 ? 1 : -1), x.mu - (sp - x.s) * k, x.r, sp});
      ExtDecomposition c = decompose_ext(lv, C_label(x.mu - (v - x.s) * k, lv.u() - x.r));
      long sign = ((v - 1 - x.s) % 2 == 0) ? 1 : -1;
      d.gamma_sign = sign * c.gamma_sign;
      d.gamma_mu = c.gamma_mu;
      d.gamma_r = c.gamma_r;
      for (auto t : c.std_terms) {
        t.coeff *= sign;
        d.std_terms.push_back(t);
      }
      return d;
    }
    default: d.std_terms.push_back({Q(1), x.mu, x.r, x.s}); return d;
  }
}

QSeries assemble(const Level& lv, const ExtDecomposition& d, const Q& order) {
  QSeries total = QSeries::zero(order);
  if (d.gamma_sign != 0) total = total + gamma(lv, d.gamma_mu, d.gamma_r, order).scale(Q(d.gamma_sign));
  for (const StdTerm& t : d.std_terms) total = total + std_char(lv, t.mu, t.r, t.s, order).scale(t.coeff);
  return total;
}

}  // namespace pfc
