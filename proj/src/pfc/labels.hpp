#pragma once

#include <string>

#include "pfc/affine.hpp"
#include "pfc/coset.hpp"
#include "pfc/fusion.hpp"

namespace pfc {

// Text grammar shared by the library and the command line:
//   affine    sf^l(L[r])  sf^l(D+[r,s])  sf^l(D-[r,s])  sf^l(E[lam;r,s])
//             sf^l(Estd+[r,s])  sf^l(Estd-[r,s])
//             (the prefix may be dropped except for E, which then reads as coset)
//   coset     C[mu;r]  D[mu;r,s]  E[mu;r,s]  Estd+[mu;r,s]  Estd-[mu;r,s]
//   extended  B.<coset label>
// Rationals are written a/b. Malformed text raises ParseError.

enum class LabelSpace { Affine, Coset, Extended };

struct ParsedLabel {
  LabelSpace space;
  AffineLabel affine{AffineKind::L, 0, 1, 0, Q(0)};
  CosetLabel coset{CosetKind::C, Q(0), 1, 0};
};

ParsedLabel parse_label(const std::string& text);
CosetLabel parse_coset_label(const std::string& text);
AffineLabel parse_affine_label(const std::string& text);
/// Requires the B. prefix; mu is reduced mod 2w.
CosetLabel parse_ext_label(const Level& lv, const std::string& text);

std::string format_label(const CosetLabel& x);
std::string format_ext_label(const CosetLabel& x);
std::string format_label(const AffineLabel& x);

/// "2*C[0;1] + E[1/3;1,1]", or "0".
std::string format_element(const CosetElement& x, bool extended = false);
std::string format_element(const AffineElement& x);

}  // namespace pfc
