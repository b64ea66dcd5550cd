#include "pfc/minmod.hpp"

#include <cstdlib>

#include "pfc/error.hpp"
#include "pfc/lattice_sum.hpp"

namespace pfc {

void check_kac(const MinModel& m, long r, long s) {
  if (r < 1 || r > m.u - 1 || s < 1 || s > m.v - 1)
    fail(Errc::OutOfKacTable, "(" + std::to_string(r) + "," + std::to_string(s) + ") outside the Kac table of M(" +
                                  std::to_string(m.u) + "," + std::to_string(m.v) + ")");
}

bool is_canonical(const MinModel& m, Kac a) { return m.v * a.r - m.u * a.s > 0; }

Kac kac_canonical(const MinModel& m, long r, long s) {
  check_kac(m, r, s);
  Kac a{r, s};
  return is_canonical(m, a) ? a : Kac{m.u - r, m.v - s};
}

std::vector<Kac> kac_table(const MinModel& m) {
  std::vector<Kac> out;
  for (long r = 1; r < m.u; ++r)
    for (long s = 1; s < m.v; ++s)
      if (is_canonical(m, {r, s})) out.push_back({r, s});
  return out;
}

Q kac_h(const MinModel& m, long r, long s) {
  check_kac(m, r, s);
  long a = m.v * r - m.u * s;
  long b = m.v - m.u;
  return q_of(a * a - b * b, 4 * m.u * m.v);
}

Q min_char_valuation(const MinModel& m, long r, long s) { return kac_h(m, r, s) - m.central_charge() / 24; }

QSeries min_char(const MinModel& m, long r, long s, const Q& order) {
  check_kac(m, r, s);
  const long uv = m.u * m.v;
  const Q c = q_of(1, 4 * uv);
  auto numerator = [&](const Q& n) {
    SeriesBuilder b(n);
    for_each_square_below(Q(2 * uv), Q(m.v * r - m.u * s), c, n, [&](long, const Q& e) { b.add(e, Q(1)); });
    for_each_square_below(Q(2 * uv), Q(m.v * r + m.u * s), c, n, [&](long, const Q& e) { b.add(e, Q(-1)); });
    return b.build();
  };
  return product_to(order, Q(0), numerator, -q_of(1, 24), inverse_eta);
}

int row_fusion(long n, long a, long b, long c) {
  if (a < 1 || a > n - 1 || b < 1 || b > n - 1 || c < 1 || c > n - 1) return 0;
  if (c < std::labs(a - b) + 1) return 0;
  if (c > std::min(a + b - 1, 2 * n - 1 - a - b)) return 0;
  return ((c - (a + b - 1)) % 2 == 0) ? 1 : 0;
}

std::map<Kac, long> fusion_coeffs(const MinModel& m, Kac a, Kac b) {
  check_kac(m, a.r, a.s);
  check_kac(m, b.r, b.s);
  std::map<Kac, long> out;
  for (long r = 1; r < m.u; ++r) {
    if (!row_fusion(m.u, a.r, b.r, r)) continue;
    for (long s = 1; s < m.v; ++s) {
      if (!row_fusion(m.v, a.s, b.s, s)) continue;
      out[kac_canonical(m, r, s)] += 1;
    }
  }
  return out;
}

long fusion_coeff(const MinModel& m, Kac a, Kac b, Kac c) {
  for (const Kac& x : {a, b, c})
    if (x.r < 1 || x.r > m.u - 1 || x.s < 1 || x.s > m.v - 1) return 0;
  auto f = fusion_coeffs(m, a, b);
  auto it = f.find(kac_canonical(m, c.r, c.s));
  return it == f.end() ? 0 : it->second;
}

Real s_vir(const MinModel& m, Kac a, Kac b) {
  check_kac(m, a.r, a.s);
  check_kac(m, b.r, b.s);
  const Real pi = pi_real();
  long sign_exp = a.r * b.s + b.r * a.s;
  Real sign = (sign_exp % 2 == 0) ? Real(1) : Real(-1);
  // sin(v pi r r'/u) and sin(u pi s s'/v) with arguments reduced mod 2 before
  // leaving exact arithmetic.
  Q x = mod_q(q_of(m.v * a.r * b.r, m.u), Q(2));
  Q y = mod_q(q_of(m.u * a.s * b.s, m.v), Q(2));
  Real pre = -2 * boost::multiprecision::sqrt(Real(2) / Real(m.u * m.v));
  return pre * sign * boost::multiprecision::sin(pi * to_real(x)) * boost::multiprecision::sin(pi * to_real(y));
}

Real verlinde(const MinModel& m, Kac a, Kac b, Kac c) {
  Real sum = 0;
  const Kac one{1, 1};
  for (const Kac& x : kac_table(m)) sum += s_vir(m, a, x) * s_vir(m, b, x) * s_vir(m, c, x) / s_vir(m, one, x);
  return sum;
}

std::vector<std::vector<Real>> s_vir_matrix(const MinModel& m) {
  auto table = kac_table(m);
  std::vector<std::vector<Real>> out(table.size(), std::vector<Real>(table.size()));
  for (size_t i = 0; i < table.size(); ++i)
    for (size_t j = i; j < table.size(); ++j) out[i][j] = out[j][i] = s_vir(m, table[i], table[j]);
  return out;
}

std::vector<std::vector<std::vector<Real>>> verlinde_tensor(const MinModel& m) {
  auto S = s_vir_matrix(m);
  auto table = kac_table(m);
  const size_t n = table.size();
  size_t one = 0;
  while (!(table[one] == kac_canonical(m, 1, 1))) ++one;
  std::vector<std::vector<std::vector<Real>>> out(n, std::vector<std::vector<Real>>(n, std::vector<Real>(n)));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      std::vector<Real> w(n);
      for (size_t x = 0; x < n; ++x) w[x] = S[a][x] * S[b][x] / S[one][x];
      for (size_t c = 0; c < n; ++c) {
        Real sum = 0;
        for (size_t x = 0; x < n; ++x) sum += w[x] * S[c][x];
        out[a][b][c] = sum;
      }
    }
  return out;
}

}  // namespace pfc
