#pragma once

#include <string>
#include <vector>

#include "pfc/extension.hpp"
#include "pfc/highprec.hpp"
#include "pfc/level.hpp"

namespace pfc {

enum class CheckKind { ThetaS, StdS, GammaS, TPhase, LemmaA, Resolutions, TwistRules, TwoRoute };

std::string check_name(CheckKind k);
/// Accepts both "theta_s" and "theta-s"; "t" is an alias for t_phase.
CheckKind parse_check(const std::string& name);

struct CheckOptions {
  std::vector<Tau> taus{{Q(0), Q(1)}};
  Q order{60};
  int digits = 80;
  Real tol{"1e-20"};
  int window = 9;
  /// Coset labels with |mu| up to this bound enter the exact checks.
  Q mu_bound{6};
  GammaTable gamma_table = GammaTable::OrbitCount;
};

struct CheckItem {
  std::string key;
  Real residual;
  Real tail;
  std::string detail;  // first differing exponent for exact checks
};

struct CheckReport {
  std::string name;
  std::vector<Tau> taus;
  Q order;
  int digits = 0;
  Real tol;
  std::vector<CheckItem> items;
  Real max_residual{0};
  Real tail_budget{0};
  bool pass = true;
  std::string note;
};

/// Numerical kinds compare evaluations at -1/tau (or tau+1) against the
/// transformed sums at tau; exact kinds compare series to `order` and
/// report residual 0 or 1. Items are sorted by key.
/// InsufficientTruncation if the tail budget of a numerical item exceeds tol.
CheckReport verify(CheckKind kind, const Level& lv, const CheckOptions& opt);

struct RepDimension {
  long standard_count;
  long gamma_dim_bound;
  long total;
};
RepDimension rep_dimension_report(const Level& lv);

/// Coset labels (C, raw D with s <= v-1, Estd+-) with |mu| <= bound.
std::vector<CosetLabel> coset_labels_within(const Level& lv, const Q& bound);

}  // namespace pfc
