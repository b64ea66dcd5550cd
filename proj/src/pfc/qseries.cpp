#include "pfc/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pfc/error.hpp"

namespace pfc {

namespace {

// Largest index n with offset + n/denom <= order (may be negative).
long max_index(const Q& offset, long denom, const Q& order) {
  Q lim = (order - offset) * denom;
  return to_long(floor_q(lim));
}

struct Lattice {
  Q offset;
  long denom;
  long scale_a, shift_a;
  long scale_b, shift_b;
};

Lattice align(const QSeries& a, const QSeries& b) {
  Q off = cmp(a.offset(), b.offset()) <= 0 ? a.offset() : b.offset();
  Q da = a.offset() - off, db = b.offset() - off;
  long d = lcm_l(a.denom(), b.denom());
  d = lcm_l(d, to_long(Q(da.get_den())));
  d = lcm_l(d, to_long(Q(db.get_den())));
  return {off, d, d / a.denom(), to_long(Q(da * d)), d / b.denom(), to_long(Q(db * d))};
}

}  // namespace

QSeries::QSeries(Q order) : order_(std::move(order)) {}

QSeries QSeries::monomial(const Q& coeff, const Q& exponent, const Q& order) {
  QSeries s(order);
  s.offset_ = exponent;
  if (coeff != 0) s.terms_.push_back({0, coeff});
  s.normalize();
  return s;
}

void QSeries::normalize() {
  long lim = terms_.empty() ? 0 : max_index(offset_, denom_, order_);
  std::erase_if(terms_, [&](const Term& t) { return t.second == 0 || t.first > lim; });
  if (terms_.empty()) {
    offset_ = 0;
    denom_ = 1;
    return;
  }
  long first = terms_.front().first;
  if (first != 0) {
    offset_ += q_of(first, denom_);
    offset_.canonicalize();
    for (auto& t : terms_) t.first -= first;
  }
  long g = denom_;
  for (const auto& t : terms_) g = std::gcd(g, t.first);
  if (g > 1) {
    denom_ /= g;
    for (auto& t : terms_) t.first /= g;
  }
}

Q QSeries::valuation() const {
  if (terms_.empty()) fail(Errc::InvalidArgument, "valuation of the zero series");
  return exponent_of(terms_.front().first);
}

Q QSeries::lower_bound() const { return terms_.empty() ? order_ : valuation(); }

Q QSeries::coefficient(const Q& exponent) const {
  if (cmp(exponent, order_) > 0)
    fail(Errc::InsufficientTruncation, "coefficient of q^" + pfc::to_string(exponent) + " requested above order " +
                                           pfc::to_string(order_));
  Q n = (exponent - offset_) * denom_;
  if (!is_integer(n)) return Q(0);
  long idx = to_long(n);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), idx,
                             [](const Term& t, long i) { return t.first < i; });
  return (it != terms_.end() && it->first == idx) ? it->second : Q(0);
}

std::vector<std::pair<Q, Q>> QSeries::exponent_terms() const {
  std::vector<std::pair<Q, Q>> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.emplace_back(exponent_of(t.first), t.second);
  return out;
}

QSeries QSeries::operator+(const QSeries& b) const {
  const QSeries& a = *this;
  Q order = cmp(a.order_, b.order_) <= 0 ? a.order_ : b.order_;
  if (a.is_zero() || b.is_zero()) {
    QSeries r = a.is_zero() ? b : a;
    r.order_ = order;
    r.normalize();
    return r;
  }
  Lattice lat = align(a, b);
  QSeries r(order);
  r.offset_ = lat.offset;
  r.denom_ = lat.denom;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    long na = ia != a.terms_.end() ? ia->first * lat.scale_a + lat.shift_a : 0;
    long nb = ib != b.terms_.end() ? ib->first * lat.scale_b + lat.shift_b : 0;
    if (ib == b.terms_.end() || (ia != a.terms_.end() && na < nb)) {
      r.terms_.push_back({na, ia->second});
      ++ia;
    } else if (ia == a.terms_.end() || nb < na) {
      r.terms_.push_back({nb, ib->second});
      ++ib;
    } else {
      r.terms_.push_back({na, ia->second + ib->second});
      ++ia;
      ++ib;
    }
  }
  r.normalize();
  return r;
}

QSeries QSeries::operator-(const QSeries& b) const { return *this + b.scale(Q(-1)); }

QSeries QSeries::operator*(const QSeries& b) const {
  const QSeries& a = *this;
  Q o1 = a.order_ + b.lower_bound();
  Q o2 = b.order_ + a.lower_bound();
  QSeries r(cmp(o1, o2) <= 0 ? o1 : o2);
  if (a.is_zero() || b.is_zero()) return r;
  r.offset_ = a.offset_ + b.offset_;
  r.denom_ = lcm_l(a.denom_, b.denom_);
  long sa = r.denom_ / a.denom_, sb = r.denom_ / b.denom_;
  long lim = max_index(r.offset_, r.denom_, r.order_);
  std::map<long, Q> acc;
  for (const auto& ta : a.terms_) {
    long ia = ta.first * sa;
    if (ia > lim) break;
    for (const auto& tb : b.terms_) {
      long idx = ia + tb.first * sb;
      if (idx > lim) break;
      acc[idx] += ta.second * tb.second;
    }
  }
  r.terms_.assign(acc.begin(), acc.end());
  r.normalize();
  return r;
}

QSeries QSeries::scale(const Q& c) const {
  QSeries r = *this;
  if (c == 0) {
    r.terms_.clear();
  } else {
    for (auto& t : r.terms_) t.second *= c;
  }
  r.normalize();
  return r;
}

QSeries QSeries::shift(const Q& e) const {
  QSeries r = *this;
  r.order_ += e;
  if (!r.terms_.empty()) r.offset_ += e;
  r.normalize();
  return r;
}

QSeries QSeries::inverse() const {
  if (is_zero()) fail(Errc::InvalidArgument, "inverse of the zero series");
  const Q v = offset_;
  const Q c0inv = 1 / terms_.front().second;
  QSeries r(order_ - 2 * v);
  r.offset_ = -v;
  r.denom_ = denom_;
  long nmax = max_index(r.offset_, denom_, r.order_);
  if (nmax < 0) {
    r.normalize();
    return r;
  }
  std::vector<Q> b(static_cast<size_t>(nmax) + 1);
  b[0] = c0inv;
  for (long n = 1; n <= nmax; ++n) {
    Q sum = 0;
    for (size_t j = 1; j < terms_.size() && terms_[j].first <= n; ++j) sum += terms_[j].second * b[n - terms_[j].first];
    b[n] = -c0inv * sum;
  }
  for (long n = 0; n <= nmax; ++n)
    if (b[n] != 0) r.terms_.push_back({n, b[n]});
  r.normalize();
  return r;
}

QSeries QSeries::at_order(const Q& n) const {
  if (cmp(n, order_) > 0)
    fail(Errc::InsufficientTruncation,
         "series known to order " + pfc::to_string(order_) + ", requested " + pfc::to_string(n));
  QSeries r = *this;
  r.order_ = n;
  r.normalize();
  return r;
}

bool QSeries::operator==(const QSeries& b) const {
  return order_ == b.order_ && offset_ == b.offset_ && denom_ == b.denom_ && terms_ == b.terms_;
}

bool QSeries::agrees_to(const QSeries& b, const Q& n) const {
  if (cmp(n, order_) > 0 || cmp(n, b.order_) > 0) return false;
  return at_order(n) == b.at_order(n);
}

std::optional<Q> QSeries::first_difference(const QSeries& b) const {
  QSeries d = *this - b;
  if (d.is_zero()) return std::nullopt;
  return d.valuation();
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : exponent_terms()) {
    Q mag = c < 0 ? Q(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit) os << pfc::to_string(mag);
    if (e == 0) {
      if (unit) os << "1";
    } else {
      if (!unit) os << "*";
      os << "q^(" << pfc::to_string(e) << ")";
    }
  }
  if (first) os << "0";
  os << " + O(q^(" << pfc::to_string(order_) << "))";
  return os.str();
}

bool SeriesBuilder::add(const Q& exponent, const Q& coeff) {
  if (cmp(exponent, order_) > 0) return false;
  if (coeff != 0) acc_[exponent] += coeff;
  return true;
}

void SeriesBuilder::add(const QSeries& s) {
  for (const auto& [e, c] : s.exponent_terms()) add(e, c);
}

QSeries SeriesBuilder::build() const {
  QSeries s(order_);
  std::vector<std::pair<Q, Q>> live;
  for (const auto& [e, c] : acc_)
    if (c != 0) live.emplace_back(e, c);
  if (live.empty()) return s;
  s.offset_ = live.front().first;
  long d = 1;
  for (const auto& [e, c] : live) {
    Q diff = e - s.offset_;
    d = lcm_l(d, to_long(Q(diff.get_den())));
  }
  s.denom_ = d;
  for (const auto& [e, c] : live) s.terms_.push_back({to_long(Q((e - s.offset_) * d)), c});
  s.normalize();
  return s;
}

QSeries eta(const Q& order) {
  SeriesBuilder b(order);
  const Q base(1, 24);
  for (long k = 0;; ++k) {
    bool any = false;
    for (long kk : {k, -k - 1}) {
      Q e = base + q_of(kk * (3 * kk - 1), 2);
      any |= b.add(e, Q(kk % 2 == 0 ? 1 : -1));
    }
    if (!any) break;
  }
  return b.build();
}

QSeries inverse_eta(const Q& order) { return eta(order + q_of(1, 12)).inverse().at_order(order); }

}  // namespace pfc
