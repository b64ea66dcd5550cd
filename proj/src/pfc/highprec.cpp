#include "pfc/highprec.hpp"

#include <sstream>

#include "pfc/error.hpp"
#include "pfc/qseries.hpp"

namespace pfc {

Real to_real(const Q& x) {
  Real r;
  mpfr_set_q(r.backend().data(), x.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real pi_real() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

std::string to_decimal(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

Real Complex::abs() const { return boost::multiprecision::sqrt(re * re + im * im); }

Complex unit_phase(const Real& x) {
  Real a = 2 * pi_real() * x;
  return {boost::multiprecision::cos(a), boost::multiprecision::sin(a)};
}

Complex sqrt_principal(const Complex& z) {
  Real m = z.abs();
  if (m == 0) return {};
  Real re = boost::multiprecision::sqrt((m + z.re) / 2);
  Real im = boost::multiprecision::sqrt((m - z.re) / 2);
  if (z.im < 0) im = -im;
  return {re, im};
}

Tau Tau::s_image() const {
  Q n = re * re + im * im;
  return {Q(-re / n), Q(im / n)};
}

std::string Tau::to_string() const { return pfc::to_string(re) + "," + pfc::to_string(im); }

Tau parse_tau(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) fail(Errc::ParseError, "tau must be 're,im', got '" + text + "'");
  Tau t{parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
  if (cmp(t.im, Q(0)) <= 0)
    fail(Errc::NonconvergentEvaluation, "tau must lie in the upper half plane, got " + text);
  return t;
}

void check_digits(int digits) {
  if (digits < 15) fail(Errc::InvalidArgument, "digits must be at least 15");
  if (digits > kMaxDigits) fail(Errc::RangeError, "digits above " + std::to_string(kMaxDigits) + " are not supported");
}

Evaluation evaluate(const QSeries& s, const Tau& tau, int digits) {
  check_digits(digits);
  if (cmp(tau.im, Q(0)) <= 0) fail(Errc::NonconvergentEvaluation, "Im(tau) must be positive");
  const Real two_pi = 2 * pi_real();
  const Real y = to_real(tau.im);
  const Real x = to_real(tau.re);
  Evaluation ev;
  Real maxc = 0;
  for (const auto& [e, c] : s.exponent_terms()) {
    Real re = to_real(e);
    Real mag = boost::multiprecision::exp(-two_pi * y * re);
    Complex term = unit_phase(x * re) * (mag * to_real(c));
    ev.value += term;
    Real ac = boost::multiprecision::abs(to_real(c));
    if (ac > maxc) maxc = ac;
  }
  Real absq = boost::multiprecision::exp(-two_pi * y);
  Real step = boost::multiprecision::pow(absq, Real(1) / Real(s.denom()));
  ev.tail_bound = boost::multiprecision::pow(absq, to_real(s.order())) / (1 - step) * (maxc == 0 ? Real(1) : maxc);
  return ev;
}

}  // namespace pfc
