#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfc/rational.hpp"

namespace pfc {

/// Truncated generalized q-series
///
///     sum_n c_n q^{offset + n/denom},   0 <= n,   offset + n/denom <= order.
///
/// Every exponent at or below `order` is exact; nothing above it is known.
/// Values are immutable; all operations return new series.
class QSeries {
 public:
  using Term = std::pair<long, Q>;  // (index, coefficient)

  /// The zero series known to `order`.
  explicit QSeries(Q order = Q(0));

  static QSeries zero(const Q& order) { return QSeries(order); }
  static QSeries monomial(const Q& coeff, const Q& exponent, const Q& order);
  static QSeries one(const Q& order) { return monomial(Q(1), Q(0), order); }

  const Q& offset() const { return offset_; }
  long denom() const { return denom_; }
  const Q& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Q exponent_of(long index) const { return offset_ + q_of(index, denom_); }

  /// Lowest stored exponent. Requires a nonzero series.
  Q valuation() const;
  /// valuation() for nonzero series, order() for the zero series: a lower
  /// bound on the exponents of the exact (untruncated) series.
  Q lower_bound() const;

  Q coefficient(const Q& exponent) const;
  std::vector<std::pair<Q, Q>> exponent_terms() const;

  QSeries operator+(const QSeries& b) const;
  QSeries operator-(const QSeries& b) const;
  QSeries operator-() const { return scale(Q(-1)); }
  /// Known to min(order(a) + lb(b), order(b) + lb(a)).
  QSeries operator*(const QSeries& b) const;

  QSeries scale(const Q& c) const;
  /// Multiply by q^e; the order moves with the terms.
  QSeries shift(const Q& e) const;
  /// Multiplicative inverse; requires a nonzero leading term. Known to
  /// order - 2 * valuation.
  QSeries inverse() const;
  /// Truncate to a lower order. InsufficientTruncation if n exceeds order().
  QSeries at_order(const Q& n) const;

  /// Exact equality of orders and terms.
  bool operator==(const QSeries& b) const;
  bool operator!=(const QSeries& b) const { return !(*this == b); }
  /// Both series are known to n and agree there.
  bool agrees_to(const QSeries& b, const Q& n) const;
  /// Lowest exponent (at or below the common order) where a and b differ.
  std::optional<Q> first_difference(const QSeries& b) const;

  std::string to_string() const;

 private:
  friend class SeriesBuilder;
  void normalize();

  Q offset_{0};
  long denom_{1};
  Q order_;
  std::vector<Term> terms_;
};

/// Accumulates (exponent, coefficient) pairs and builds a QSeries. Terms
/// above the order are discarded silently.
class SeriesBuilder {
 public:
  explicit SeriesBuilder(Q order) : order_(std::move(order)) {}

  const Q& order() const { return order_; }
  /// Returns false (and drops the term) when exponent > order.
  bool add(const Q& exponent, const Q& coeff);
  void add(const QSeries& s);
  QSeries build() const;

 private:
  Q order_;
  std::map<Q, Q, QLess> acc_;
};

/// q^{1/24} prod_{n>=1} (1 - q^n), via the pentagonal-number series.
QSeries eta(const Q& order);
/// q^{-1/24} sum_n p(n) q^n.
QSeries inverse_eta(const Q& order);

/// Multiply two factors built on demand so the product is exact to `order`.
/// `lb_a`, `lb_b` are lower bounds on the exponents of the exact factors.
template <class MakeA, class MakeB>
QSeries product_to(const Q& order, const Q& lb_a, MakeA make_a, const Q& lb_b, MakeB make_b) {
  QSeries a = make_a(Q(order - lb_b));
  Q lb = a.is_zero() ? lb_a : a.valuation();
  if (a.is_zero()) return QSeries::zero(order);
  QSeries b = make_b(Q(order - lb));
  return (a * b).at_order(order);
}

}  // namespace pfc
