#pragma once

#include <vector>

#include "pfc/coset.hpp"
#include "pfc/highprec.hpp"
#include "pfc/level.hpp"
#include "pfc/qseries.hpp"

namespace pfc {

// Extended modules are named by coset labels whose weight is reduced mod the
// lattice L = 2wZ. The dual lattice is L' = (1/v)Z.

bool in_dual_lattice(const Level& lv, const Q& mu);
/// Whether the coset module lifts to the extension: always for C, D and
/// Estd+-, for E iff mu is in L'.
bool lifts(const Level& lv, const CosetLabel& x);
/// Coset canonical form with mu reduced to [0, 2w). NotLiftable for E off L'.
CosetLabel ext_canonical(const Level& lv, const CosetLabel& x);

/// theta_{mu+L}(q) = sum over lambda in mu+L of q^{-lambda^2/4k}.
QSeries theta(const Level& lv, const Q& mu, const Q& order);
/// The same lattice sum split into two one-sided halves.
QSeries theta_one_sided(const Level& lv, const Q& mu, const Q& order);
/// Normalized z-derivative of theta at z = 1. Primary: weights -lambda/2w.
/// Crosscheck: -(mu/2w) theta + sum_l l q^{-(mu-2wl)^2/4k}.
QSeries dtheta(const Level& lv, const Q& mu, const Q& order, Route route = Route::Primary);

/// 2 dtheta_{lam+L} + (1 + lam/w) theta_{lam+L}.
QSeries A_closed(const Level& lv, const Q& lam, const Q& order);
/// The defining double sum, with the l >= 0 half summed directly and each
/// l <= -1 row replaced by its two surviving tails.
QSeries A_resummed(const Level& lv, const Q& lam, const Q& order);

/// (chi_{r,s}/eta) theta_{mu+L}. NotLiftable if mu is not in L'.
QSeries std_char(const Level& lv, const Q& mu, long r, long s, const Q& order);
/// Gamma_{mu;r}. ParityMismatch unless mu = r-1 (mod 2).
QSeries gamma(const Level& lv, const Q& mu, long r, const Q& order);

/// Character of an extended module. Primary: theta route (Gamma plus theta
/// terms for C, alternating standard sum for D). Crosscheck: sum of coset
/// characters over mu + L.
QSeries ext_character(const Level& lv, const CosetLabel& x, const Q& order, Route route = Route::Primary);

/// Lowest conformal weight over the coset modules in mu + L.
Q ext_ground_weight(const Level& lv, const CosetLabel& x);
/// C(mu;1), mu in 2Z, and C(mu;u-1), mu in u+2Z, reduced mod L.
std::vector<CosetLabel> simple_currents(const Level& lv);
/// Lowest ext_ground_weight over the simple-current orbit of x.
Q orbit_ground_weight(const Level& lv, const CosetLabel& x);

/// Inequivalent irreducible extended modules: C, D (s <= v-2), E.
std::vector<CosetLabel> enumerate_modules(const Level& lv);

struct BkEntry {
  Q mu;
  long r;
};
std::vector<BkEntry> basis_Bk(const Level& lv);
/// Closed form for |B_k|.
Q dim_bound(const Level& lv);
/// Exact rank over Q of the Gamma_{mu;r}, (mu;r) in B_k, truncated at order.
long gamma_rank(const Level& lv, const Q& order);

using RealMatrix = std::vector<std::vector<Real>>;

/// m, l = 0..p.
RealMatrix smatrix_typ(const Level& lv);
/// m, l = 1..p-1.
RealMatrix smatrix_theta(const Level& lv);
/// Over the canonical Kac table.
RealMatrix smatrix_vir(const Level& lv);

enum class GammaTable { Stated, OrbitCount };
/// Over B_k x B_k. `Stated` uses the fixed rule A = 1/2 (r' = u/2, mu' in wZ),
/// 2 (r' != u/2, mu' not in wZ), 1 otherwise; `OrbitCount` uses the size of
/// the orbit of mu' under the symmetries of Gamma, halved when r' = u/2.
RealMatrix smatrix_gamma(const Level& lv, GammaTable table = GammaTable::OrbitCount);
Q gamma_A(const Level& lv, const BkEntry& e, GammaTable table);

/// Delta(C(mu;r)) - c~/24, the T exponent of Gamma_{mu;r}.
Q gamma_t_exponent(const Level& lv, const Q& mu, long r);
/// Delta_{r,s} - mu^2/4k - c~/24, the T exponent of a standard character.
Q std_t_exponent(const Level& lv, const Q& mu, long r, long s);
/// True when every exponent of s is congruent to e mod 1.
bool exponents_congruent(const QSeries& s, const Q& e);

/// ch = gamma_sign * Gamma_{gamma_mu; gamma_r} + sum coeff * std(mu; r, s).
struct StdTerm {
  Q coeff;
  Q mu;
  long r;
  long s;
};
struct ExtDecomposition {
  long gamma_sign = 0;
  Q gamma_mu;
  long gamma_r = 0;
  std::vector<StdTerm> std_terms;
};
ExtDecomposition decompose_ext(const Level& lv, const CosetLabel& x);
QSeries assemble(const Level& lv, const ExtDecomposition& d, const Q& order);

}  // namespace pfc
