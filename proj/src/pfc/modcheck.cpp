#include "pfc/modcheck.hpp"

#include <algorithm>

#include "pfc/affine.hpp"
#include "pfc/error.hpp"
#include "pfc/labels.hpp"
#include "pfc/minmod.hpp"

namespace pfc {

std::string check_name(CheckKind k) {
  switch (k) {
    case CheckKind::ThetaS: return "theta_s";
    case CheckKind::StdS: return "std_s";
    case CheckKind::GammaS: return "gamma_s";
    case CheckKind::TPhase: return "t_phase";
    case CheckKind::LemmaA: return "lemma_A";
    case CheckKind::Resolutions: return "resolutions";
    case CheckKind::TwistRules: return "twistrules";
    case CheckKind::TwoRoute: return "two_route";
  }
  return "?";
}

CheckKind parse_check(const std::string& raw) {
  std::string name = raw;
  std::replace(name.begin(), name.end(), '-', '_');
  if (name == "t" || name == "t_phase") return CheckKind::TPhase;
  if (name == "lemma" || name == "lemma_A") return CheckKind::LemmaA;
  for (CheckKind k : {CheckKind::ThetaS, CheckKind::StdS, CheckKind::GammaS, CheckKind::Resolutions,
                      CheckKind::TwistRules, CheckKind::TwoRoute})
    if (name == check_name(k)) return k;
  fail(Errc::ParseError, "unknown check '" + raw + "'");
}

std::vector<CosetLabel> coset_labels_within(const Level& lv, const Q& bound) {
  const long u = lv.u(), v = lv.v();
  std::vector<CosetLabel> out;
  auto each_mu = [&](const Q& base, auto fn) {
    Q mu = mod_q(base + bound, Q(2)) - bound;
    for (; cmp(mu, bound) <= 0; mu += 2) fn(mu);
  };
  for (long r = 1; r < u; ++r) each_mu(Q(r - 1), [&](const Q& mu) { out.push_back(C_label(mu, r)); });
  for (long r = 1; r < u; ++r)
    for (long s = 1; s < v; ++s) {
      each_mu(lv.lambda(r, s), [&](const Q& mu) {
        out.push_back(D_label(mu, r, s));
        out.push_back({CosetKind::EstdPlus, mu, r, s});
      });
      each_mu(lv.lambda(u - r, v - s), [&](const Q& mu) { out.push_back({CosetKind::EstdMinus, mu, r, s}); });
    }
  return out;
}

RepDimension rep_dimension_report(const Level& lv) {
  long standard = lv.p() * (lv.u() - 1) * (lv.v() - 1);
  long bound = static_cast<long>(basis_Bk(lv).size());
  return {standard, bound, standard + 2 * bound};
}

namespace {

struct Harness {
  const Level& lv;
  const CheckOptions& opt;
  CheckReport report;

  void exact(const std::string& key, const QSeries& a, const QSeries& b, const Q& order) {
    CheckItem item{key, Real(0), Real(0), ""};
    if (!a.agrees_to(b, order)) {
      item.residual = 1;
      auto d = a.first_difference(b);
      item.detail = d ? "first difference at q^" + to_string(*d) : "truncation orders differ";
    }
    report.items.push_back(item);
  }

  void exact(const std::string& key, const WeightedCharacter& a, const WeightedCharacter& b, const Q& order) {
    if (a.components.size() != b.components.size()) {
      report.items.push_back({key, Real(1), Real(0), "weight windows differ"});
      return;
    }
    for (auto ia = a.components.begin(), ib = b.components.begin(); ia != a.components.end(); ++ia, ++ib) {
      if (ia->first != ib->first) {
        report.items.push_back({key, Real(1), Real(0), "weight windows differ"});
        return;
      }
      exact(key + " @" + to_string(ia->first), ia->second, ib->second, order);
    }
  }

  void numeric(const std::string& key, const Complex& lhs, const Complex& rhs, Real tail) {
    if (tail > opt.tol)
      fail(Errc::InsufficientTruncation, key + ": tail budget " + to_decimal(tail, 3) + " exceeds tolerance");
    report.items.push_back({key, (lhs - rhs).abs(), tail, ""});
  }

  CheckReport finish() {
    std::sort(report.items.begin(), report.items.end(),
              [](const CheckItem& a, const CheckItem& b) { return a.key < b.key; });
    report.max_residual = 0;
    report.tail_budget = 0;
    report.pass = true;
    for (const auto& it : report.items) {
      if (it.residual > report.max_residual) report.max_residual = it.residual;
      if (it.tail > report.tail_budget) report.tail_budget = it.tail;
      if (it.residual > opt.tol + it.tail) report.pass = false;
    }
    return report;
  }
};

struct Sampled {
  std::vector<Complex> value;
  std::vector<Real> tail;
};

Sampled sample(const std::vector<QSeries>& fs, const Tau& tau, int digits) {
  Sampled out;
  for (const auto& f : fs) {
    Evaluation e = evaluate(f, tau, digits);
    out.value.push_back(e.value);
    out.tail.push_back(e.tail_bound);
  }
  return out;
}

Complex minus_i_tau(const Tau& tau) { return {to_real(tau.im), -to_real(tau.re)}; }

// lhs_i(-1/tau) = pref * sum_j M_ij rhs_j(tau), for every row i.
void s_transform(Harness& h, const std::string& tag, const std::vector<std::string>& keys,
                 const std::vector<QSeries>& fs, const RealMatrix& M, const Complex& pref, const Tau& tau) {
  Sampled at = sample(fs, tau, h.opt.digits);
  Sampled img = sample(fs, tau.s_image(), h.opt.digits);
  const Real pmag = pref.abs();
  for (size_t i = 0; i < fs.size(); ++i) {
    Complex acc;
    Real tail = img.tail[i];
    for (size_t j = 0; j < fs.size(); ++j) {
      acc += at.value[j] * M[i][j];
      tail += pmag * boost::multiprecision::abs(M[i][j]) * at.tail[j];
    }
    h.numeric(tag + " " + keys[i] + " tau=" + tau.to_string(), img.value[i], pref * acc, tail);
  }
}

void check_theta_s(Harness& h) {
  const Level& lv = h.lv;
  const long p = lv.p(), v = lv.v();
  std::vector<QSeries> th, dth;
  std::vector<std::string> kt, kd;
  for (long m = 0; m <= p; ++m) {
    th.push_back(theta(lv, q_of(m, v), h.opt.order));
    kt.push_back("theta[" + std::to_string(m) + "/" + std::to_string(v) + "]");
  }
  for (long m = 1; m < p; ++m) {
    dth.push_back(dtheta(lv, q_of(m, v), h.opt.order));
    kd.push_back("dtheta[" + std::to_string(m) + "/" + std::to_string(v) + "]");
  }
  RealMatrix st = smatrix_typ(lv), sd = smatrix_theta(lv);
  for (const Tau& tau : h.opt.taus) {
    Complex z = minus_i_tau(tau);
    Complex root = sqrt_principal(z);
    s_transform(h, "theta", kt, th, st, root, tau);
    s_transform(h, "dtheta", kd, dth, sd, z * root, tau);
  }
}

void check_std_s(Harness& h) {
  const Level& lv = h.lv;
  const long p = lv.p(), v = lv.v();
  auto kac = kac_table(lv.minmod());
  RealMatrix st = smatrix_typ(lv), sv = smatrix_vir(lv);
  std::vector<QSeries> fs;
  std::vector<std::string> keys;
  for (size_t a = 0; a < kac.size(); ++a)
    for (long m = 0; m <= p; ++m) {
      fs.push_back(std_char(lv, q_of(m, v), kac[a].r, kac[a].s, h.opt.order));
      keys.push_back("std[" + to_string(q_of(m, v)) + ";" + std::to_string(kac[a].r) + "," +
                     std::to_string(kac[a].s) + "]");
    }
  const size_t n = fs.size(), width = static_cast<size_t>(p + 1);
  RealMatrix M(n, std::vector<Real>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) M[i][j] = sv[i / width][j / width] * st[i % width][j % width];
  for (const Tau& tau : h.opt.taus) {
    s_transform(h, "std", keys, fs, M, Complex(Real(1)), tau);
    if (tau.re == 0 && tau.im == 1) {
      // At the fixed point S^2 acts trivially on the vector of values.
      Sampled at = sample(fs, tau, h.opt.digits);
      Real worst = 0, tail = 0;
      for (size_t i = 0; i < n; ++i) {
        Complex twice;
        for (size_t j = 0; j < n; ++j) {
          Complex once;
          for (size_t l = 0; l < n; ++l) once += at.value[l] * M[j][l];
          twice += once * M[i][j];
        }
        Real r = (twice - at.value[i]).abs();
        if (r > worst) worst = r;
        if (at.tail[i] > tail) tail = at.tail[i];
      }
      h.numeric("std S^2 fixed point tau=i", Complex(worst), Complex(Real(0)), 2 * tail);
    }
  }
}

void check_gamma_s(Harness& h) {
  const Level& lv = h.lv;
  auto B = basis_Bk(lv);
  std::vector<QSeries> fs;
  std::vector<std::string> keys;
  for (const auto& b : B) {
    fs.push_back(gamma(lv, b.mu, b.r, h.opt.order));
    keys.push_back("Gamma[" + to_string(b.mu) + ";" + std::to_string(b.r) + "]");
  }
  RealMatrix S = smatrix_gamma(lv, h.opt.gamma_table);
  h.report.note = h.opt.gamma_table == GammaTable::Stated ? "A coefficients: fixed-rule table"
                                                            : "A coefficients: orbit count";
  for (const Tau& tau : h.opt.taus) s_transform(h, "gamma", keys, fs, S, minus_i_tau(tau), tau);
}

void check_t_phase(Harness& h) {
  const Level& lv = h.lv;
  auto phase_item = [&](const std::string& key, const QSeries& f, const Q& e) {
    if (!exponents_congruent(f, e)) {
      h.report.items.push_back({key, Real(1), Real(0), "exponents not congruent to " + to_string(e) + " mod 1"});
      return;
    }
    Complex ph = unit_phase(to_real(e));
    for (const Tau& tau : h.opt.taus) {
      Evaluation a = evaluate(f, tau.plus_one(), h.opt.digits);
      Evaluation b = evaluate(f, tau, h.opt.digits);
      h.numeric(key + " tau=" + tau.to_string(), a.value, ph * b.value, a.tail_bound + b.tail_bound);
    }
  };
  for (const auto& b : basis_Bk(lv))
    phase_item("Gamma[" + to_string(b.mu) + ";" + std::to_string(b.r) + "]",
               gamma(lv, b.mu, b.r, h.opt.order), gamma_t_exponent(lv, b.mu, b.r));
  for (const Kac& c : kac_table(lv.minmod()))
    for (long m = 0; m <= lv.p(); ++m) {
      Q mu = q_of(m, lv.v());
      phase_item("std[" + to_string(mu) + ";" + std::to_string(c.r) + "," + std::to_string(c.s) + "]",
                 std_char(lv, mu, c.r, c.s, h.opt.order), std_t_exponent(lv, mu, c.r, c.s));
    }
}

void check_lemma(Harness& h) {
  const Level& lv = h.lv;
  const long reach = 4 * lv.w() * lv.v();
  for (long j = -reach; j <= reach; ++j) {
    Q lam = q_of(j, lv.v());
    h.exact("A[" + to_string(lam) + "]", A_closed(lv, lam, h.opt.order), A_resummed(lv, lam, h.opt.order),
            h.opt.order);
  }
}

QSeries cchar(const Level& lv, const CosetLabel& x, const Q& order) {
  return coset_character_unchecked(lv, x, order);
}

void check_resolutions(Harness& h) {
  const Level& lv = h.lv;
  const Q& N = h.opt.order;
  const long u = lv.u(), v = lv.v();
  const Q k = lv.k();
  for (const CosetLabel& x : coset_labels_within(lv, h.opt.mu_bound)) {
    if (x.kind == CosetKind::EstdPlus) {
      QSeries rhs = cchar(lv, D_label(x.mu, x.r, x.s), N);
      rhs = rhs + cchar(lv, x.s == 1 ? C_label(x.mu + k, x.r) : D_label(x.mu + k, x.r, x.s - 1), N);
      h.exact("ses " + format_label(x), cchar(lv, x, N), rhs, N);
    } else if (x.kind == CosetKind::EstdMinus) {
      QSeries rhs = cchar(lv, D_label(x.mu, u - x.r, v - x.s), N);
      rhs = rhs + cchar(lv, x.s == v - 1 ? C_label(x.mu + k, u - x.r) : D_label(x.mu + k, u - x.r, v - 1 - x.s), N);
      h.exact("ses " + format_label(x), cchar(lv, x, N), rhs, N);
    } else if (x.kind == CosetKind::D && x.s == v - 1) {
      h.exact("rewrite " + format_label(x), cchar(lv, x, N), cchar(lv, C_label(x.mu - k, u - x.r), N), N);
    }
  }
  // Affine irreducibles against their alternating standard resolutions.
  const Q from(1 - h.opt.window);
  for (long flow = -1; flow <= 1; ++flow)
    for (long r = 1; r < u; ++r) {
      std::vector<AffineLabel> labels{L_affine(r, flow)};
      for (long s = 1; s < v; ++s) labels.push_back(Dplus_affine(r, s, flow));
      for (const AffineLabel& x : labels) {
        auto win = weight_window(lv, x, from, h.opt.window);
        h.exact("resolution " + format_label(x), irr_weighted_char(lv, x, win, N), resolution_char(lv, x, win, N),
                N);
      }
    }
}

void check_twistrules(Harness& h) {
  const Level& lv = h.lv;
  const Q& N = h.opt.order;
  const long u = lv.u(), v = lv.v();
  const Q k = lv.k();
  const Q from(1 - h.opt.window);
  auto shifted = [&](const std::vector<Q>& win, const Q& by) {
    std::vector<Q> out;
    for (const Q& x : win) out.push_back(x + by);
    return out;
  };
  // Flow moves every component's order with its terms; compute the source
  // far enough out that all flowed components are known to N.
  auto flowed = [&](const AffineLabel& src, const std::vector<Q>& target, long l) {
    std::vector<Q> win = shifted(target, Q(-l * k));
    Q extra(0);
    for (const Q& mu : win) {
      Q e = l * l * k / 4 + l * mu / 2;
      if (cmp(-e, extra) > 0) extra = -e;
    }
    WeightedCharacter w = spectral_flow(lv, irr_weighted_char(lv, src, win, N + extra), l);
    for (auto& [nu, series] : w.components) series = series.at_order(N);
    return w;
  };
  for (long r = 1; r < u; ++r) {
    // sigma L_r = D+_{u-r,v-1}
    AffineLabel d = Dplus_affine(u - r, v - 1);
    auto win = weight_window(lv, d, from, h.opt.window);
    h.exact("sf(L[" + std::to_string(r) + "]) = D+[" + std::to_string(u - r) + "," + std::to_string(v - 1) + "]",
            flowed(L_affine(r), win, 1),
            irr_weighted_char(lv, d, win, N), N);
    // sigma^{-1} L_r = D-_{u-r,v-1}
    AffineLabel dm = Dminus_affine(u - r, v - 1);
    win = weight_window(lv, dm, from, h.opt.window);
    h.exact("sf^-1(L[" + std::to_string(r) + "]) = D-[" + std::to_string(u - r) + "," + std::to_string(v - 1) + "]",
            flowed(L_affine(r), win, -1),
            irr_weighted_char(lv, dm, win, N), N);
    // sigma^{-1} D+_{r,s} = D-_{u-r,v-1-s}
    for (long s = 1; s + 1 < v; ++s) {
      AffineLabel target = Dminus_affine(u - r, v - 1 - s);
      win = weight_window(lv, target, from, h.opt.window);
      h.exact("sf^-1(D+[" + std::to_string(r) + "," + std::to_string(s) + "]) = " + format_label(target),
              flowed(Dplus_affine(r, s), win, -1),
              irr_weighted_char(lv, target, win, N), N);
    }
  }
}

void check_two_route(Harness& h) {
  const Level& lv = h.lv;
  const Q& N = h.opt.order;
  for (const CosetLabel& x : enumerate_modules(lv)) {
    QSeries cross = ext_character(lv, x, N, Route::Crosscheck);
    h.exact("ext " + format_ext_label(x), ext_character(lv, x, N), cross, N);
    h.exact("decomposition " + format_ext_label(x), assemble(lv, decompose_ext(lv, x), N), cross, N);
  }
  for (const CosetLabel& x : coset_labels_within(lv, h.opt.mu_bound)) {
    if (x.kind != CosetKind::C && x.kind != CosetKind::D) continue;
    h.exact("coset " + format_label(x), coset_character_unchecked(lv, x, N),
            coset_character_unchecked(lv, x, N, Route::Crosscheck), N);
  }
  for (long m = 0; m < 2 * lv.p(); ++m) {
    Q mu = q_of(m, lv.v());
    h.exact("dtheta[" + to_string(mu) + "]", dtheta(lv, mu, N), dtheta(lv, mu, N, Route::Crosscheck), N);
    h.exact("theta[" + to_string(mu) + "]", theta(lv, mu, N), theta_one_sided(lv, mu, N), N);
  }
}

}  // namespace

CheckReport verify(CheckKind kind, const Level& lv, const CheckOptions& opt) {
  check_digits(opt.digits);
  for (const Tau& t : opt.taus)
    if (cmp(t.im, Q(0)) <= 0) fail(Errc::NonconvergentEvaluation, "Im(tau) must be positive");
  Harness h{lv, opt, {}};
  h.report.name = check_name(kind);
  h.report.taus = opt.taus;
  h.report.order = opt.order;
  h.report.digits = opt.digits;
  h.report.tol = opt.tol;
  switch (kind) {
    case CheckKind::ThetaS: check_theta_s(h); break;
    case CheckKind::StdS: check_std_s(h); break;
    case CheckKind::GammaS: check_gamma_s(h); break;
    case CheckKind::TPhase: check_t_phase(h); break;
    case CheckKind::LemmaA: check_lemma(h); break;
    case CheckKind::Resolutions: check_resolutions(h); break;
    case CheckKind::TwistRules: check_twistrules(h); break;
    case CheckKind::TwoRoute: check_two_route(h); break;
  }
  return h.finish();
}

}  // namespace pfc
