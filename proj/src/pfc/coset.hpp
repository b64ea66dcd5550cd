#pragma once

#include <string>
#include <vector>

#include "pfc/level.hpp"
#include "pfc/minmod.hpp"
#include "pfc/qseries.hpp"

namespace pfc {

enum class CosetKind { C, D, E, EstdPlus, EstdMinus };

/// Parafermion coset module label. `s` is unused (0) for C.
struct CosetLabel {
  CosetKind kind;
  Q mu;
  long r;
  long s;

  bool operator==(const CosetLabel& o) const {
    return kind == o.kind && r == o.r && s == o.s && mu == o.mu;
  }
};

struct CosetLabelLess {
  bool operator()(const CosetLabel& a, const CosetLabel& b) const;
};

inline CosetLabel C_label(Q mu, long r) { return {CosetKind::C, std::move(mu), r, 0}; }
inline CosetLabel D_label(Q mu, long r, long s) { return {CosetKind::D, std::move(mu), r, s}; }
inline CosetLabel E_label(Q mu, long r, long s) { return {CosetKind::E, std::move(mu), r, s}; }

/// Range and parity checks for a raw label (D with s = v-1 and
/// non-canonical Kac pairs are accepted).
void validate(const Level& lv, const CosetLabel& x);
/// Canonical form: D(mu;r,v-1) -> C(mu-k;u-r), E Kac pair canonicalized.
/// Errors: RangeError, ParityMismatch, TypicalOnAtypicalWeight.
CosetLabel canonical(const Level& lv, const CosetLabel& x);

/// True when mu = lambda_{r,s} or lambda_{u-r,v-s} (mod 2).
bool atypical_weight(const Level& lv, const Q& mu, long r, long s);

/// Ground-state conformal weight of a label (canonicalized first).
Q conformal_weight(const Level& lv, const CosetLabel& x);
/// Lowest q-exponent of the character: weight - c_coset/24.
Q ground_exponent(const Level& lv, const CosetLabel& x);

enum class Route { Primary, Crosscheck };

/// Character of a coset module, exact to `order`. Raw D(mu;r,v-1) uses its
/// own alternating formula; everything else follows the label's kind. The
/// crosscheck route changes only the C-type expansion (and hence D).
/// TruncationBelowGroundState if order is below the ground exponent.
QSeries coset_character(const Level& lv, const CosetLabel& x, const Q& order, Route route = Route::Primary);
/// Same without the ground-state guard (returns the zero series there).
QSeries coset_character_unchecked(const Level& lv, const CosetLabel& x, const Q& order,
                                  Route route = Route::Primary);

/// chi_{r,s}/eta, exact to `order`, and its exact lowest exponent.
QSeries chi_over_eta(const MinModel& m, long r, long s, const Q& order);
Q chi_over_eta_valuation(const MinModel& m, long r, long s);

/// A family of coset modules parametrized by mu.
struct FamilyDescriptor {
  CosetKind kind;
  long r;
  long s;
  Q mu_class;                // representative of the allowed class mod 2 (C, D)
  std::vector<Q> excluded;   // excluded classes mod 2 (E)
  std::string text;
};

/// C, D (s <= v-2) and typical E families, the latter over the canonical
/// Kac table so each family is labelled as canonical() labels its members.
std::vector<FamilyDescriptor> enumerate_families(const Level& lv);

std::string kind_name(CosetKind k);

}  // namespace pfc
