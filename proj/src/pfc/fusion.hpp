#pragma once

#include <map>
#include <string>
#include <vector>

#include "pfc/affine.hpp"
#include "pfc/coset.hpp"

namespace pfc {

/// Integer combination of labels, i.e. an element of a Grothendieck ring.
/// `notes` records the resolutions applied while computing it.
template <class Label, class Less>
struct FusionElement {
  std::map<Label, long, Less> terms;
  std::vector<std::string> notes;

  void add(const Label& x, long c) {
    if (c == 0) return;
    long& t = terms[x];
    t += c;
    if (t == 0) terms.erase(x);
  }
  void add(const FusionElement& o, long c = 1) {
    for (const auto& [x, n] : o.terms) add(x, c * n);
    note(o.notes);
  }
  void note(const std::string& s) {
    for (const auto& n : notes)
      if (n == s) return;
    notes.push_back(s);
  }
  void note(const std::vector<std::string>& ss) {
    for (const auto& s : ss) note(s);
  }
  bool is_zero() const { return terms.empty(); }
  /// Equality of classes; notes are ignored.
  bool same_class(const FusionElement& o) const { return terms == o.terms; }
};

using CosetElement = FusionElement<CosetLabel, CosetLabelLess>;
using AffineElement = FusionElement<AffineLabel, AffineLabelLess>;

inline constexpr const char* kNoteAtypicalOutput =
    "typical output at an atypical weight replaced by its composition factors";
inline constexpr const char* kNoteStandardInput = "standard input replaced by its composition factors";
inline constexpr const char* kNoteGrothendieck = "Grothendieck product (composition factors only)";

// ---- coset ---------------------------------------------------------------

/// Class of a single label in terms of canonical irreducibles. Estd+- and
/// standard labels at atypical weights are split into composition factors.
CosetElement coset_class(const Level& lv, const CosetLabel& x);
/// Class of the standard module with data (mu; r, s), whatever mu is.
CosetElement standard_class(const Level& lv, const Q& mu, long r, long s);

/// C(mu;r) fused with x: a genuine fusion rule. UnnormalizedLabel if either
/// input is not canonical.
CosetElement fuse_with_C(const Level& lv, const CosetLabel& c, const CosetLabel& x);
/// Grothendieck product of two canonical labels.
CosetElement gr_fuse(const Level& lv, const CosetLabel& a, const CosetLabel& b);
/// Bilinear extension to elements.
CosetElement gr_fuse(const Level& lv, const CosetElement& a, const CosetElement& b);

// ---- affine --------------------------------------------------------------

AffineElement affine_class(const Level& lv, const AffineLabel& x);
AffineElement affine_standard_class(const Level& lv, const Q& lambda, long r, long s, long flow);
AffineElement gr_fuse_affine(const Level& lv, const AffineLabel& a, const AffineLabel& b);
AffineElement gr_fuse_affine(const Level& lv, const AffineElement& a, const AffineElement& b);

// ---- extended ------------------------------------------------------------

/// Coset product followed by reduction of every weight mod 2w. Inputs are
/// canonical extended labels.
CosetElement gr_fuse_ext(const Level& lv, const CosetLabel& a, const CosetLabel& b);
CosetElement gr_fuse_ext(const Level& lv, const CosetElement& a, const CosetElement& b);
/// Reduces every label of a coset element to its extended canonical form.
CosetElement reduce_ext(const Level& lv, const CosetElement& x);

}  // namespace pfc
