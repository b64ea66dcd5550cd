#pragma once

#include <compare>
#include <map>
#include <vector>

#include "pfc/highprec.hpp"
#include "pfc/level.hpp"
#include "pfc/qseries.hpp"

namespace pfc {

/// A Kac-table entry (r, s). The canonical member of {(r,s), (u-r,v-s)} is
/// the one with vr - us > 0.
struct Kac {
  long r;
  long s;
  auto operator<=>(const Kac&) const = default;
};

void check_kac(const MinModel& m, long r, long s);
bool is_canonical(const MinModel& m, Kac a);
Kac kac_canonical(const MinModel& m, long r, long s);
/// Canonical representatives, sorted.
std::vector<Kac> kac_table(const MinModel& m);

/// h_{r,s} = ((vr - us)^2 - (v - u)^2) / 4uv.
Q kac_h(const MinModel& m, long r, long s);

/// Irreducible character chi_{r,s}, exact to `order`.
QSeries min_char(const MinModel& m, long r, long s, const Q& order);
/// Exact lowest exponent of chi_{r,s}: h - c/24.
Q min_char_valuation(const MinModel& m, long r, long s);

/// The truncated su(2)-type multiplicity on one row of the Kac table: 1 when
/// |a-b|+1 <= c <= min(a+b-1, 2n-1-a-b) and c = a+b-1 (mod 2), else 0.
/// Out-of-range labels (0 or n) give 0.
int row_fusion(long n, long a, long b, long c);

/// Fusion coefficients N_{ab}^{c} over canonical labels.
std::map<Kac, long> fusion_coeffs(const MinModel& m, Kac a, Kac b);
/// N_{ab}^{c} for a single (possibly non-canonical) target; 0 when any label
/// leaves the Kac table.
long fusion_coeff(const MinModel& m, Kac a, Kac b, Kac c);

Real s_vir(const MinModel& m, Kac a, Kac b);
/// Verlinde formula sum_x S_ax S_bx S_cx / S_1x (S is real and symmetric).
/// S over kac_table(m), in table order.
std::vector<std::vector<Real>> s_vir_matrix(const MinModel& m);
/// N[a][b][c] over kac_table(m) indices, from a single S matrix.
std::vector<std::vector<std::vector<Real>>> verlinde_tensor(const MinModel& m);
Real verlinde(const MinModel& m, Kac a, Kac b, Kac c);

}  // namespace pfc
