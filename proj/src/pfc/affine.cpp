#include "pfc/affine.hpp"

#include "pfc/error.hpp"
#include "pfc/minmod.hpp"

namespace pfc {

bool AffineLabelLess::operator()(const AffineLabel& a, const AffineLabel& b) const {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.flow != b.flow) return a.flow < b.flow;
  if (a.r != b.r) return a.r < b.r;
  if (a.s != b.s) return a.s < b.s;
  return cmp(a.lambda, b.lambda) < 0;
}

std::string affine_kind_name(AffineKind k) {
  switch (k) {
    case AffineKind::L: return "L";
    case AffineKind::Dplus: return "D+";
    case AffineKind::Dminus: return "D-";
    case AffineKind::E: return "E";
    case AffineKind::EstdPlus: return "Estd+";
    case AffineKind::EstdMinus: return "Estd-";
  }
  return "?";
}

void validate(const Level& lv, const AffineLabel& x) {
  if (x.r < 1 || x.r > lv.u() - 1) fail(Errc::RangeError, "r=" + std::to_string(x.r) + " outside 1..u-1");
  if (x.kind == AffineKind::L) {
    if (x.s != 0) fail(Errc::RangeError, "L carries no s");
    return;
  }
  if (x.s < 1 || x.s > lv.v() - 1) fail(Errc::RangeError, "s=" + std::to_string(x.s) + " outside 1..v-1");
  if (x.kind == AffineKind::E && atypical_weight(lv, x.lambda, x.r, x.s))
    fail(Errc::TypicalOnAtypicalWeight, "lambda=" + to_string(x.lambda) + " is atypical for (" +
                                            std::to_string(x.r) + "," + std::to_string(x.s) + ")");
}

AffineLabel canonical(const Level& lv, const AffineLabel& x) {
  validate(lv, x);
  const long u = lv.u(), v = lv.v();
  switch (x.kind) {
    case AffineKind::Dplus:
      if (x.s == v - 1) return L_affine(u - x.r, x.flow + 1);
      return x;
    case AffineKind::Dminus:
      if (x.s == v - 1) return L_affine(u - x.r, x.flow - 1);
      return Dplus_affine(u - x.r, v - 1 - x.s, x.flow - 1);
    case AffineKind::E: {
      Kac c = kac_canonical(lv.minmod(), x.r, x.s);
      return E_affine(mod_q(x.lambda, Q(2)), c.r, c.s, x.flow);
    }
    default: return x;
  }
}

Q base_weight(const Level& lv, const AffineLabel& x) {
  switch (x.kind) {
    case AffineKind::L: return Q(x.r - 1);
    case AffineKind::Dplus: return lv.lambda(x.r, x.s);
    case AffineKind::Dminus: return -lv.lambda(x.r, x.s);
    case AffineKind::E: return x.lambda;
    case AffineKind::EstdPlus: return lv.lambda(x.r, x.s);
    case AffineKind::EstdMinus: return lv.lambda(lv.u() - x.r, lv.v() - x.s);
  }
  return Q(0);
}

bool in_support(const Level& lv, const AffineLabel& x, const Q& weight) {
  return congruent(weight, base_weight(lv, x) + x.flow * lv.k(), Q(2));
}

std::vector<Q> weight_window(const Level& lv, const AffineLabel& x, const Q& from, int size) {
  Q first = base_weight(lv, x) + x.flow * lv.k();
  first += 2 * ceil_q(Q((from - first) / 2));
  std::vector<Q> out;
  for (int i = 0; i < size; ++i) out.push_back(first + 2 * i);
  return out;
}

bool WeightedCharacter::operator==(const WeightedCharacter& o) const {
  if (components.size() != o.components.size()) return false;
  auto a = components.begin();
  auto b = o.components.begin();
  for (; a != components.end(); ++a, ++b)
    if (a->first != b->first || a->second != b->second) return false;
  return true;
}

namespace {

QSeries chi_over_eta2(const MinModel& m, long r, long s, const Q& order) {
  return product_to(
      order, chi_over_eta_valuation(m, r, s), [&](const Q& n) { return chi_over_eta(m, r, s, n); }, -q_of(1, 24),
      inverse_eta);
}

void require_support(const Level& lv, const AffineLabel& x, const Q& nu) {
  if (!in_support(lv, x, nu))
    fail(Errc::WeightNotInSupport, "weight " + to_string(nu) + " is not in the support of " +
                                       affine_kind_name(x.kind) + " at flow " + std::to_string(x.flow));
}

// Component at nu of sigma^l E+_{r,s}, taking chi/eta^2 from `base` (known far
// enough out); zero when nu is off the support.
QSeries flowed_standard(const Level& lv, long r, long s, long l, const Q& nu, const QSeries& base, const Q& order) {
  Q mu = nu - l * lv.k();
  if (!congruent(mu, lv.lambda(r, s), Q(2))) return QSeries::zero(order);
  Q e = l * nu / 2 - l * l * lv.k() / 4;
  if (base.is_zero() || cmp(Q(order - e), base.valuation()) < 0) return QSeries::zero(order);
  return base.at_order(order - e).shift(e);
}

}  // namespace

QSeries fock_character(const Level& lv, const Q& nu, const Q& order) {
  Q e = -lv.inv4k_neg() * nu * nu;
  return inverse_eta(order - e).shift(e);
}

WeightedCharacter std_weighted_char(const Level& lv, const AffineLabel& x, const std::vector<Q>& window,
                                    const Q& order) {
  validate(lv, x);
  long r = x.r, s = x.s;
  if (x.kind == AffineKind::EstdMinus) {
    r = lv.u() - x.r;
    s = lv.v() - x.s;
  } else if (x.kind != AffineKind::E && x.kind != AffineKind::EstdPlus) {
    fail(Errc::InvalidArgument, affine_kind_name(x.kind) + " is not a standard module");
  }
  WeightedCharacter out;
  const long l = x.flow;
  for (const Q& nu : window) {
    require_support(lv, x, nu);
    Q mu = nu - l * lv.k();
    Q e = l * l * lv.k() / 4 + l * mu / 2;
    out.components.emplace(nu, chi_over_eta2(lv.minmod(), r, s, order - e).shift(e));
  }
  return out;
}

WeightedCharacter irr_weighted_char(const Level& lv, const AffineLabel& x, const std::vector<Q>& window,
                                    const Q& order) {
  validate(lv, x);
  if (x.kind == AffineKind::Dminus) {
    // sigma^l conj(D+) = conj(sigma^{-l} D+).
    AffineLabel plus = Dplus_affine(x.r, x.s, -x.flow);
    std::vector<Q> reflected;
    for (const Q& nu : window) {
      require_support(lv, x, nu);
      reflected.push_back(-nu);
    }
    return conjugate(irr_weighted_char(lv, plus, reflected, order));
  }
  if (x.kind != AffineKind::L && x.kind != AffineKind::Dplus)
    fail(Errc::InvalidArgument, affine_kind_name(x.kind) + " is not an atypical irreducible");
  WeightedCharacter out;
  for (const Q& nu : window) {
    require_support(lv, x, nu);
    Q mu = nu - x.flow * lv.k();
    CosetLabel c = x.kind == AffineKind::L ? C_label(mu, x.r) : D_label(mu, x.r, x.s);
    Q e0 = -lv.inv4k_neg() * nu * nu;
    QSeries comp = product_to(
        order, ground_exponent(lv, c), [&](const Q& n) { return coset_character_unchecked(lv, c, n); },
        e0 - q_of(1, 24), [&](const Q& n) { return fock_character(lv, nu, n); });
    out.components.emplace(nu, comp);
  }
  return out;
}

WeightedCharacter weighted_char(const Level& lv, const AffineLabel& x, const std::vector<Q>& window,
                                const Q& order) {
  switch (x.kind) {
    case AffineKind::L:
    case AffineKind::Dplus:
    case AffineKind::Dminus: return irr_weighted_char(lv, x, window, order);
    default: return std_weighted_char(lv, x, window, order);
  }
}

namespace {

struct ResolutionContext {
  const Level& lv;
  Q nu;
  Q order;
  std::map<std::pair<long, long>, QSeries> bases;

  const QSeries& base(long r, long s) {
    auto key = std::make_pair(r, s);
    auto it = bases.find(key);
    if (it == bases.end()) {
      // The flow prefactor l nu/2 - l^2 k/4 is bounded below by nu^2/4k.
      Q need = order + lv.inv4k_neg() * nu * nu;
      it = bases.emplace(key, chi_over_eta2(lv.minmod(), r, s, need)).first;
    }
    return it->second;
  }

  Q exponent(long l) const { return l * nu / 2 - l * l * lv.k() / 4; }

  QSeries standard(long r, long s, long l) { return flowed_standard(lv, r, s, l, nu, base(r, s), order); }

  QSeries irreducible_L(long r, long flow) {
    const long v = lv.v();
    QSeries total = QSeries::zero(order);
    Q vertex = nu / lv.k();
    for (long m = 0;; ++m) {
      bool contributed = false;
      long lowest = 2 * m * v + 1 + flow;
      for (long sp = 1; sp < v; ++sp) {
        long l1 = 2 * m * v + sp + flow;
        long l2 = 2 * (m + 1) * v - sp + flow;
        QSeries a = standard(r, sp, l1);
        QSeries b = standard(lv.u() - r, v - sp, l2);
        if (!a.is_zero() || !b.is_zero()) contributed = true;
        QSeries term = a - b;
        total = (sp % 2 == 1) ? total + term : total - term;
      }
      if (!contributed && cmp(Q(lowest), vertex) > 0 && cmp(exponent(lowest), order) > 0) break;
    }
    return total;
  }

  QSeries irreducible_D(long r, long s, long flow) {
    const long v = lv.v();
    QSeries total = QSeries::zero(order);
    for (long sp = s + 1; sp < v; ++sp) {
      QSeries term = standard(r, sp, sp - s + flow);
      total = ((sp - s - 1) % 2 == 0) ? total + term : total - term;
    }
    QSeries tail = irreducible_L(lv.u() - r, v - s + flow);
    return ((v - 1 - s) % 2 == 0) ? total + tail : total - tail;
  }
};

}  // namespace

WeightedCharacter resolution_char(const Level& lv, const AffineLabel& x, const std::vector<Q>& window,
                                  const Q& order) {
  validate(lv, x);
  if (x.kind != AffineKind::L && x.kind != AffineKind::Dplus)
    fail(Errc::InvalidArgument, "resolutions are available for L and D+ only");
  WeightedCharacter out;
  for (const Q& nu : window) {
    require_support(lv, x, nu);
    ResolutionContext ctx{lv, nu, order, {}};
    QSeries comp =
        x.kind == AffineKind::L ? ctx.irreducible_L(x.r, x.flow) : ctx.irreducible_D(x.r, x.s, x.flow);
    out.components.emplace(nu, comp);
  }
  return out;
}

WeightedCharacter spectral_flow(const Level& lv, const WeightedCharacter& chi, long l) {
  WeightedCharacter out;
  for (const auto& [mu, s] : chi.components) {
    Q e = l * l * lv.k() / 4 + l * mu / 2;
    out.components.emplace(mu + l * lv.k(), s.shift(e));
  }
  return out;
}

WeightedCharacter conjugate(const WeightedCharacter& chi) {
  WeightedCharacter out;
  for (const auto& [mu, s] : chi.components) out.components.emplace(-mu, s);
  return out;
}

std::vector<std::pair<Q, CosetLabel>> decompose(const Level& lv, const AffineLabel& raw,
                                                const std::vector<Q>& window) {
  AffineLabel x = raw.kind == AffineKind::Dminus ? canonical(lv, raw) : raw;
  validate(lv, x);
  std::vector<std::pair<Q, CosetLabel>> out;
  for (const Q& nu : window) {
    if (!in_support(lv, x, nu)) continue;
    Q mu = nu - x.flow * lv.k();
    CosetLabel c;
    switch (x.kind) {
      case AffineKind::L: c = C_label(mu, x.r); break;
      case AffineKind::Dplus: c = D_label(mu, x.r, x.s); break;
      case AffineKind::E: c = E_label(mu, x.r, x.s); break;
      case AffineKind::EstdPlus: c = {CosetKind::EstdPlus, mu, x.r, x.s}; break;
      default: c = {CosetKind::EstdMinus, mu, x.r, x.s}; break;
    }
    out.emplace_back(nu, c);
  }
  return out;
}

}  // namespace pfc
