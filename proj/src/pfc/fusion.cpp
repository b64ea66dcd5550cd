#include "pfc/fusion.hpp"

#include "pfc/error.hpp"
#include "pfc/extension.hpp"
#include "pfc/minmod.hpp"

namespace pfc {

namespace {

bool in_kac(const MinModel& m, long r, long s) { return r >= 1 && r <= m.u - 1 && s >= 1 && s <= m.v - 1; }

// N_{(a)(b)}^{.} with zero for labels off the Kac table (s = 0 or s = v).
std::map<Kac, long> coeffs(const MinModel& m, Kac a, Kac b) {
  if (!in_kac(m, a.r, a.s) || !in_kac(m, b.r, b.s)) return {};
  return fusion_coeffs(m, a, b);
}

void require_canonical(const Level& lv, const CosetLabel& x) {
  if (!(canonical(lv, x) == x)) fail(Errc::UnnormalizedLabel, "label is not in canonical form");
}

// A D-type label with 1 <= s <= v-1, canonicalized.
CosetLabel D_or_C(const Level& lv, const Q& mu, long r, long s) { return canonical(lv, D_label(mu, r, s)); }

}  // namespace

CosetElement standard_class(const Level& lv, const Q& mu, long r, long s) {
  CosetElement out;
  const long u = lv.u(), v = lv.v();
  if (!atypical_weight(lv, mu, r, s)) {
    out.add(canonical(lv, E_label(mu, r, s)), 1);
    return out;
  }
  if (!congruent(mu, lv.lambda(r, s), Q(2))) {
    r = u - r;
    s = v - s;
  }
  out.add(D_or_C(lv, mu, r, s), 1);
  out.add(s == 1 ? canonical(lv, C_label(mu + lv.k(), r)) : D_or_C(lv, mu + lv.k(), r, s - 1), 1);
  out.note(kNoteAtypicalOutput);
  return out;
}

CosetElement coset_class(const Level& lv, const CosetLabel& x) {
  validate(lv, x);
  CosetElement out;
  switch (x.kind) {
    case CosetKind::EstdPlus:
      out = standard_class(lv, x.mu, x.r, x.s);
      out.notes = {kNoteStandardInput};
      return out;
    case CosetKind::EstdMinus:
      out = standard_class(lv, x.mu, lv.u() - x.r, lv.v() - x.s);
      out.notes = {kNoteStandardInput};
      return out;
    default: out.add(canonical(lv, x), 1); return out;
  }
}

CosetElement fuse_with_C(const Level& lv, const CosetLabel& c, const CosetLabel& x) {
  if (c.kind != CosetKind::C) fail(Errc::InvalidArgument, "first argument must be C-type");
  require_canonical(lv, c);
  require_canonical(lv, x);
  if (x.kind == CosetKind::EstdPlus || x.kind == CosetKind::EstdMinus) {
    CosetElement parts = coset_class(lv, x);
    CosetElement out;
    for (const auto& [y, n] : parts.terms) out.add(fuse_with_C(lv, c, y), n);
    out.note(parts.notes);
    return out;
  }
  const long u = lv.u();
  CosetElement out;
  for (long r2 = 1; r2 < u; ++r2) {
    long n = row_fusion(u, c.r, x.r, r2);
    if (!n) continue;
    Q mu = c.mu + x.mu;
    switch (x.kind) {
      case CosetKind::C: out.add(C_label(mu, r2), n); break;
      case CosetKind::D: out.add(D_or_C(lv, mu, r2, x.s), n); break;
      default:
        if (atypical_weight(lv, mu, r2, x.s)) fail(Errc::InvalidArgument, "typical image at an atypical weight");
        out.add(canonical(lv, E_label(mu, r2, x.s)), n);
        break;
    }
  }
  return out;
}

namespace {

CosetElement fuse_irreducible(const Level& lv, const CosetLabel& a, const CosetLabel& b) {
  if (a.kind == CosetKind::C) return fuse_with_C(lv, a, b);
  if (b.kind == CosetKind::C) return fuse_with_C(lv, b, a);
  if (a.kind == CosetKind::D && b.kind == CosetKind::E) return fuse_irreducible(lv, b, a);
  const MinModel& m = lv.minmod();
  const Q k = lv.k();
  const long u = lv.u(), v = lv.v();
  const Q mu = a.mu + b.mu;
  CosetElement out;
  auto add_std = [&](const Q& weight, Kac c, long n) { out.add(standard_class(lv, weight, c.r, c.s), n); };
  if (a.kind == CosetKind::E && b.kind == CosetKind::E) {
    for (const auto& [c, n] : coeffs(m, {a.r, a.s}, {b.r, b.s})) {
      add_std(mu - k, c, n);
      add_std(mu + k, c, n);
    }
    for (long ds : {-1L, 1L})
      for (const auto& [c, n] : coeffs(m, {a.r, a.s}, {b.r, b.s + ds})) add_std(mu, c, n);
  } else if (a.kind == CosetKind::E) {
    for (const auto& [c, n] : coeffs(m, {a.r, a.s}, {b.r, b.s + 1})) add_std(mu, c, n);
    for (const auto& [c, n] : coeffs(m, {a.r, a.s}, {b.r, b.s})) add_std(mu - k, c, n);
  } else if (a.s + b.s < v) {
    for (const auto& [c, n] : coeffs(m, {a.r, a.s}, {b.r, b.s})) add_std(mu - k, c, n);
    for (long r2 = 1; r2 < u; ++r2)
      if (long n = row_fusion(u, a.r, b.r, r2)) out.add(D_or_C(lv, mu, r2, a.s + b.s), n);
  } else {
    for (const auto& [c, n] : coeffs(m, {a.r, a.s + 1}, {b.r, b.s + 1})) add_std(mu - k, c, n);
    for (long r2 = 1; r2 < u; ++r2)
      if (long n = row_fusion(u, a.r, b.r, r2)) out.add(D_or_C(lv, mu - k, u - r2, a.s + b.s - v + 1), n);
  }
  out.note(kNoteGrothendieck);
  return out;
}

}  // namespace

CosetElement gr_fuse(const Level& lv, const CosetLabel& a, const CosetLabel& b) {
  require_canonical(lv, a);
  require_canonical(lv, b);
  CosetElement ca = coset_class(lv, a), cb = coset_class(lv, b);
  return gr_fuse(lv, ca, cb);
}

CosetElement gr_fuse(const Level& lv, const CosetElement& a, const CosetElement& b) {
  CosetElement out;
  out.note(a.notes);
  out.note(b.notes);
  for (const auto& [x, n] : a.terms)
    for (const auto& [y, m] : b.terms) out.add(fuse_irreducible(lv, x, y), n * m);
  return out;
}

// ---- affine ----------------------------------------------------------------

namespace {

AffineLabel affine_D_or_L(const Level& lv, long r, long s, long flow) {
  return canonical(lv, Dplus_affine(r, s, flow));
}

Q affine_weight(const Level& lv, const AffineLabel& x) {
  switch (x.kind) {
    case AffineKind::L: return Q(x.r - 1);
    case AffineKind::Dplus: return lv.lambda(x.r, x.s);
    default: return x.lambda;
  }
}

void require_canonical(const Level& lv, const AffineLabel& x) {
  if (!(canonical(lv, x) == x)) fail(Errc::UnnormalizedLabel, "label is not in canonical form");
}

}  // namespace

AffineElement affine_standard_class(const Level& lv, const Q& lambda, long r, long s, long flow) {
  AffineElement out;
  const long u = lv.u(), v = lv.v();
  if (!atypical_weight(lv, lambda, r, s)) {
    out.add(canonical(lv, E_affine(lambda, r, s, flow)), 1);
    return out;
  }
  if (!congruent(lambda, lv.lambda(r, s), Q(2))) {
    r = u - r;
    s = v - s;
  }
  out.add(affine_D_or_L(lv, r, s, flow), 1);
  out.add(s == 1 ? L_affine(r, flow - 1) : affine_D_or_L(lv, r, s - 1, flow - 1), 1);
  out.note(kNoteAtypicalOutput);
  return out;
}

AffineElement affine_class(const Level& lv, const AffineLabel& x) {
  validate(lv, x);
  AffineElement out;
  switch (x.kind) {
    case AffineKind::EstdPlus:
      out = affine_standard_class(lv, lv.lambda(x.r, x.s), x.r, x.s, x.flow);
      out.notes = {kNoteStandardInput};
      return out;
    case AffineKind::EstdMinus: {
      long r = lv.u() - x.r, s = lv.v() - x.s;
      out = affine_standard_class(lv, lv.lambda(r, s), r, s, x.flow);
      out.notes = {kNoteStandardInput};
      return out;
    }
    default: out.add(canonical(lv, x), 1); return out;
  }
}

namespace {

AffineElement affine_fuse_irreducible(const Level& lv, const AffineLabel& a, const AffineLabel& b) {
  const long u = lv.u(), v = lv.v();
  const long flow = a.flow + b.flow;
  AffineElement out;
  if (b.kind == AffineKind::L && a.kind != AffineKind::L) return affine_fuse_irreducible(lv, b, a);
  if (a.kind == AffineKind::L) {
    for (long r2 = 1; r2 < u; ++r2) {
      long n = row_fusion(u, a.r, b.r, r2);
      if (!n) continue;
      switch (b.kind) {
        case AffineKind::L: out.add(L_affine(r2, flow), n); break;
        case AffineKind::Dplus: out.add(affine_D_or_L(lv, r2, b.s, flow), n); break;
        default: out.add(canonical(lv, E_affine(Q(a.r - 1) + b.lambda, r2, b.s, flow)), n); break;
      }
    }
    return out;
  }
  if (a.kind == AffineKind::Dplus && b.kind == AffineKind::E) return affine_fuse_irreducible(lv, b, a);
  const MinModel& m = lv.minmod();
  const Q k = lv.k();
  const Q lam = affine_weight(lv, a) + affine_weight(lv, b);
  auto add_std = [&](const Q& weight, Kac c, long f, long n) {
    out.add(affine_standard_class(lv, weight, c.r, c.s, f), n);
  };
  if (a.kind == AffineKind::E && b.kind == AffineKind::E) {
    for (const auto& [c, n] : coeffs(m, {a.r, a.s}, {b.r, b.s})) {
      add_std(lam - k, c, flow + 1, n);
      add_std(lam + k, c, flow - 1, n);
    }
    for (long ds : {-1L, 1L})
      for (const auto& [c, n] : coeffs(m, {a.r, a.s}, {b.r, b.s + ds})) add_std(lam, c, flow, n);
  } else if (a.kind == AffineKind::E) {
    for (const auto& [c, n] : coeffs(m, {a.r, a.s}, {b.r, b.s + 1})) add_std(lam, c, flow, n);
    for (const auto& [c, n] : coeffs(m, {a.r, a.s}, {b.r, b.s})) add_std(lam - k, c, flow + 1, n);
  } else if (a.s + b.s < v) {
    for (const auto& [c, n] : coeffs(m, {a.r, a.s}, {b.r, b.s})) add_std(lam - k, c, flow + 1, n);
    for (long r2 = 1; r2 < u; ++r2)
      if (long n = row_fusion(u, a.r, b.r, r2)) out.add(affine_D_or_L(lv, r2, a.s + b.s, flow), n);
  } else {
    for (const auto& [c, n] : coeffs(m, {a.r, a.s + 1}, {b.r, b.s + 1})) add_std(lam - k, c, flow + 1, n);
    for (long r2 = 1; r2 < u; ++r2)
      if (long n = row_fusion(u, a.r, b.r, r2)) out.add(affine_D_or_L(lv, u - r2, a.s + b.s - v + 1, flow + 1), n);
  }
  out.note(kNoteGrothendieck);
  return out;
}

}  // namespace

AffineElement gr_fuse_affine(const Level& lv, const AffineLabel& a, const AffineLabel& b) {
  require_canonical(lv, a);
  require_canonical(lv, b);
  return gr_fuse_affine(lv, affine_class(lv, a), affine_class(lv, b));
}

AffineElement gr_fuse_affine(const Level& lv, const AffineElement& a, const AffineElement& b) {
  AffineElement out;
  out.note(a.notes);
  out.note(b.notes);
  for (const auto& [x, n] : a.terms)
    for (const auto& [y, m] : b.terms) out.add(affine_fuse_irreducible(lv, x, y), n * m);
  return out;
}

// ---- extended --------------------------------------------------------------

CosetElement reduce_ext(const Level& lv, const CosetElement& x) {
  CosetElement out;
  out.note(x.notes);
  for (const auto& [y, n] : x.terms) out.add(ext_canonical(lv, y), n);
  return out;
}

CosetElement gr_fuse_ext(const Level& lv, const CosetLabel& a, const CosetLabel& b) {
  if (!(ext_canonical(lv, a) == a) || !(ext_canonical(lv, b) == b))
    fail(Errc::UnnormalizedLabel, "label is not in extended canonical form");
  CosetElement prod = a.kind == CosetKind::C   ? fuse_with_C(lv, a, b)
                      : b.kind == CosetKind::C ? fuse_with_C(lv, b, a)
                                               : gr_fuse(lv, a, b);
  return reduce_ext(lv, prod);
}

CosetElement gr_fuse_ext(const Level& lv, const CosetElement& a, const CosetElement& b) {
  return reduce_ext(lv, gr_fuse(lv, a, b));
}

}  // namespace pfc
