#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pfc/coset.hpp"
#include "pfc/level.hpp"
#include "pfc/qseries.hpp"

namespace pfc {

enum class AffineKind { L, Dplus, Dminus, E, EstdPlus, EstdMinus };

/// sigma^flow applied to one of the relaxed highest-weight modules.
/// `lambda` is used by E only and is kept mod 2.
struct AffineLabel {
  AffineKind kind;
  long flow;
  long r;
  long s;
  Q lambda;

  bool operator==(const AffineLabel& o) const {
    return kind == o.kind && flow == o.flow && r == o.r && s == o.s && lambda == o.lambda;
  }
};

struct AffineLabelLess {
  bool operator()(const AffineLabel& a, const AffineLabel& b) const;
};

inline AffineLabel L_affine(long r, long flow = 0) { return {AffineKind::L, flow, r, 0, Q(0)}; }
inline AffineLabel Dplus_affine(long r, long s, long flow = 0) { return {AffineKind::Dplus, flow, r, s, Q(0)}; }
inline AffineLabel Dminus_affine(long r, long s, long flow = 0) { return {AffineKind::Dminus, flow, r, s, Q(0)}; }
inline AffineLabel E_affine(Q lambda, long r, long s, long flow = 0) {
  return {AffineKind::E, flow, r, s, std::move(lambda)};
}
inline AffineLabel Estd_affine(bool plus, long r, long s, long flow = 0) {
  return {plus ? AffineKind::EstdPlus : AffineKind::EstdMinus, flow, r, s, Q(0)};
}

std::string affine_kind_name(AffineKind k);

void validate(const Level& lv, const AffineLabel& x);
/// Applies the twist identifications: D+_{r,v-1} -> sigma L_{u-r},
/// D-_{r,s} -> sigma^{-1} D+_{u-r,v-1-s} (sigma^{-1} L_{u-r} when s = v-1),
/// E's weight reduced to [0,2) and its Kac pair canonicalized.
AffineLabel canonical(const Level& lv, const AffineLabel& x);

/// h-weight class (mod 2) of the flow-0 module: r-1, lambda_{r,s}, lambda, ...
Q base_weight(const Level& lv, const AffineLabel& x);
/// Weight class of the module itself: base_weight + flow*k (mod 2), with D-
/// reflected.
bool in_support(const Level& lv, const AffineLabel& x, const Q& weight);
/// `size` consecutive support weights, the first at or above `from`.
std::vector<Q> weight_window(const Level& lv, const AffineLabel& x, const Q& from, int size);

/// h-weight -> q-series (the y^k z^weight coefficient of the character).
struct WeightedCharacter {
  std::map<Q, QSeries, QLess> components;

  bool operator==(const WeightedCharacter& o) const;
};

/// Standard modules: component at mu + flow*k is q^{flow^2 k/4 + flow mu/2}
/// chi_{r,s}/eta^2. WeightNotInSupport for window weights off the support.
WeightedCharacter std_weighted_char(const Level& lv, const AffineLabel& x, const std::vector<Q>& window,
                                    const Q& order);
/// L, D+ and D- through the coset decomposition (component at nu = mu + flow*k
/// is q^{nu^2/4k}/eta times the coset character at mu). D+_{r,v-1} is taken
/// raw.
WeightedCharacter irr_weighted_char(const Level& lv, const AffineLabel& x, const std::vector<Q>& window,
                                    const Q& order);
/// Either of the above according to the kind.
WeightedCharacter weighted_char(const Level& lv, const AffineLabel& x, const std::vector<Q>& window,
                                const Q& order);
/// L and D+ through their alternating sums of spectrally flowed E+ characters.
WeightedCharacter resolution_char(const Level& lv, const AffineLabel& x, const std::vector<Q>& window,
                                  const Q& order);

/// ch[sigma^l M]: the component at mu moves to mu + l*k, times q^{l^2 k/4 + l mu/2}.
WeightedCharacter spectral_flow(const Level& lv, const WeightedCharacter& chi, long l);
/// ch[conj M]: mu -> -mu.
WeightedCharacter conjugate(const WeightedCharacter& chi);

/// (Fock weight, coset label) pairs of the module restricted to the window.
std::vector<std::pair<Q, CosetLabel>> decompose(const Level& lv, const AffineLabel& x,
                                                const std::vector<Q>& window);

/// q^{nu^2/4k}/eta, exact to `order`.
QSeries fock_character(const Level& lv, const Q& nu, const Q& order);

}  // namespace pfc
