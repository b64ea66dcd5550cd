#include "pfc/coset.hpp"

#include "pfc/error.hpp"
#include "pfc/lattice_sum.hpp"

namespace pfc {

bool CosetLabelLess::operator()(const CosetLabel& a, const CosetLabel& b) const {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.r != b.r) return a.r < b.r;
  if (a.s != b.s) return a.s < b.s;
  return cmp(a.mu, b.mu) < 0;
}

std::string kind_name(CosetKind k) {
  switch (k) {
    case CosetKind::C: return "C";
    case CosetKind::D: return "D";
    case CosetKind::E: return "E";
    case CosetKind::EstdPlus: return "Estd+";
    case CosetKind::EstdMinus: return "Estd-";
  }
  return "?";
}

bool atypical_weight(const Level& lv, const Q& mu, long r, long s) {
  return congruent(mu, lv.lambda(r, s), Q(2)) || congruent(mu, lv.lambda(lv.u() - r, lv.v() - s), Q(2));
}

void validate(const Level& lv, const CosetLabel& x) {
  const long u = lv.u(), v = lv.v();
  if (x.r < 1 || x.r > u - 1) fail(Errc::RangeError, "r=" + std::to_string(x.r) + " outside 1..u-1");
  if (x.kind == CosetKind::C) {
    if (x.s != 0) fail(Errc::RangeError, "C-type labels carry no s");
    if (!congruent(x.mu, Q(x.r - 1), Q(2)))
      fail(Errc::ParityMismatch, "C needs mu = r-1 (mod 2), got mu=" + to_string(x.mu) + " r=" + std::to_string(x.r));
    return;
  }
  if (x.s < 1 || x.s > v - 1) fail(Errc::RangeError, "s=" + std::to_string(x.s) + " outside 1..v-1");
  switch (x.kind) {
    case CosetKind::D:
    case CosetKind::EstdPlus:
      if (!congruent(x.mu, lv.lambda(x.r, x.s), Q(2)))
        fail(Errc::ParityMismatch, kind_name(x.kind) + " needs mu = lambda_{r,s} (mod 2), got mu=" + to_string(x.mu));
      break;
    case CosetKind::EstdMinus:
      if (!congruent(x.mu, lv.lambda(u - x.r, v - x.s), Q(2)))
        fail(Errc::ParityMismatch, "Estd- needs mu = lambda_{u-r,v-s} (mod 2), got mu=" + to_string(x.mu));
      break;
    case CosetKind::E:
      if (atypical_weight(lv, x.mu, x.r, x.s))
        fail(Errc::TypicalOnAtypicalWeight, "E[" + to_string(x.mu) + ";" + std::to_string(x.r) + "," +
                                                std::to_string(x.s) + "] sits on an atypical weight");
      break;
    case CosetKind::C: break;
  }
}

CosetLabel canonical(const Level& lv, const CosetLabel& x) {
  validate(lv, x);
  if (x.kind == CosetKind::D && x.s == lv.v() - 1) return C_label(x.mu - lv.k(), lv.u() - x.r);
  if (x.kind == CosetKind::E) {
    Kac c = kac_canonical(lv.minmod(), x.r, x.s);
    return E_label(x.mu, c.r, c.s);
  }
  return x;
}

Q conformal_weight(const Level& lv, const CosetLabel& raw) {
  CosetLabel x = canonical(lv, raw);
  const Q heis = lv.inv4k_neg() * x.mu * x.mu;
  switch (x.kind) {
    case CosetKind::C: {
      Q base = lv.delta(x.r, 0) + heis;
      Q absmu = x.mu < 0 ? Q(-x.mu) : x.mu;
      Q excess = absmu - lv.lambda(x.r, 0);
      return excess > 0 ? Q(base + excess / 2) : base;
    }
    case CosetKind::D: {
      Q base = lv.delta(x.r, x.s) + heis;
      Q excess = x.mu - lv.lambda(x.r, x.s);
      return excess > 0 ? Q(base + excess / 2) : base;
    }
    default: return lv.delta(x.r, x.s) + heis;
  }
}

Q ground_exponent(const Level& lv, const CosetLabel& x) { return conformal_weight(lv, x) - lv.c_coset() / 24; }

Q chi_over_eta_valuation(const MinModel& m, long r, long s) { return min_char_valuation(m, r, s) - q_of(1, 24); }

QSeries chi_over_eta(const MinModel& m, long r, long s, const Q& order) {
  return product_to(
      order, min_char_valuation(m, r, s), [&](const Q& n) { return min_char(m, r, s, n); }, -q_of(1, 24),
      inverse_eta);
}

namespace {

// q^{-mu^2/4k} chi_{r,s}/eta.
QSeries standard_part(const Level& lv, const Q& mu, long r, long s, const Q& order) {
  Q e = lv.inv4k_neg() * mu * mu;
  return chi_over_eta(lv.minmod(), r, s, order - e).shift(e);
}

// The m-sum multiplying chi_{r,s}/eta in the C-type character.
QSeries c_lattice_part(const Level& lv, const Q& mu, long s, Route route, const Q& order) {
  const Q c = lv.inv4k_neg();
  const Q k = lv.k();
  const Q two_w(2 * lv.w());
  SeriesBuilder b(order);
  auto add_half = [&](const Q& a, const Q& shift0, const Q& sign) {
    for_each_square_below(a, shift0, c, order, [&](long m, const Q& e) {
      if (m >= 0) b.add(e, sign);
    });
  };
  if (route == Route::Primary) {
    add_half(two_w, mu - s * k, Q(1));
    add_half(two_w, mu + s * k + two_w, Q(-1));
  } else {
    const Q a = 2 * lv.v() * k;
    add_half(a, mu + s * k, Q(1));
    add_half(a, mu - s * k + a, Q(-1));
  }
  return b.build();
}

QSeries c_character(const Level& lv, const Q& mu, long r, const Q& order, Route route) {
  const MinModel& m = lv.minmod();
  QSeries total = QSeries::zero(order);
  for (long s = 1; s < lv.v(); ++s) {
    QSeries term = product_to(
        order, Q(0), [&](const Q& n) { return c_lattice_part(lv, mu, s, route, n); }, chi_over_eta_valuation(m, r, s),
        [&](const Q& n) { return chi_over_eta(m, r, s, n); });
    total = (s % 2 == 1) ? total + term : total - term;
  }
  return total;
}

QSeries d_character(const Level& lv, const Q& mu, long r, long s, const Q& order, Route route) {
  const Q k = lv.k();
  const long v = lv.v();
  QSeries total = QSeries::zero(order);
  for (long sp = s + 1; sp <= v - 1; ++sp) {
    QSeries term = standard_part(lv, mu - (sp - s) * k, r, sp, order);
    total = ((sp - s - 1) % 2 == 0) ? total + term : total - term;
  }
  QSeries tail = c_character(lv, mu - (v - s) * k, lv.u() - r, order, route);
  return ((v - 1 - s) % 2 == 0) ? total + tail : total - tail;
}

}  // namespace

QSeries coset_character_unchecked(const Level& lv, const CosetLabel& x, const Q& order, Route route) {
  validate(lv, x);
  switch (x.kind) {
    case CosetKind::C: return c_character(lv, x.mu, x.r, order, route);
    case CosetKind::D: return d_character(lv, x.mu, x.r, x.s, order, route);
    default: return standard_part(lv, x.mu, x.r, x.s, order);
  }
}

QSeries coset_character(const Level& lv, const CosetLabel& x, const Q& order, Route route) {
  Q g = ground_exponent(lv, x);
  if (cmp(order, g) < 0)
    fail(Errc::TruncationBelowGroundState,
         "order " + to_string(order) + " is below the ground exponent " + to_string(g));
  return coset_character_unchecked(lv, x, order, route);
}

std::vector<FamilyDescriptor> enumerate_families(const Level& lv) {
  const long u = lv.u(), v = lv.v();
  std::vector<FamilyDescriptor> out;
  for (long r = 1; r < u; ++r) {
    FamilyDescriptor f{CosetKind::C, r, 0, mod_q(Q(r - 1), Q(2)), {}, ""};
    f.text = "C[mu;" + std::to_string(r) + "], mu in " + to_string(f.mu_class) + "+2Z";
    out.push_back(f);
  }
  for (long r = 1; r < u; ++r)
    for (long s = 1; s <= v - 2; ++s) {
      FamilyDescriptor f{CosetKind::D, r, s, mod_q(lv.lambda(r, s), Q(2)), {}, ""};
      f.text = "D[mu;" + std::to_string(r) + "," + std::to_string(s) + "], mu in " + to_string(f.mu_class) + "+2Z";
      out.push_back(f);
    }
  for (const Kac& c : kac_table(lv.minmod())) {
    const long r = c.r, s = c.s;
    Q a = mod_q(lv.lambda(r, s), Q(2));
    Q b = mod_q(lv.lambda(u - r, v - s), Q(2));
    FamilyDescriptor f{CosetKind::E, r, s, Q(0), {}, ""};
    f.excluded.push_back(cmp(a, b) <= 0 ? a : b);
    if (a != b) f.excluded.push_back(cmp(a, b) <= 0 ? b : a);
    f.text = "E[mu;" + std::to_string(r) + "," + std::to_string(s) + "], mu not in {";
    for (size_t i = 0; i < f.excluded.size(); ++i) f.text += (i ? "," : "") + to_string(f.excluded[i]);
    f.text += "}+2Z";
    out.push_back(f);
  }
  return out;
}

}  // namespace pfc
