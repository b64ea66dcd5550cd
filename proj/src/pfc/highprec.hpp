#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "pfc/rational.hpp"

namespace pfc {

// Fixed working precision. Callers ask for `digits` and get at least that
// many; requests above kMaxDigits are rejected.
inline constexpr int kWorkingDigits = 160;
inline constexpr int kMaxDigits = 150;

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<kWorkingDigits>,
                                           boost::multiprecision::et_off>;

Real to_real(const Q& x);
Real pi_real();
std::string to_decimal(const Real& x, int digits);

struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}

  Complex operator+(const Complex& b) const { return {re + b.re, im + b.im}; }
  Complex operator-(const Complex& b) const { return {re - b.re, im - b.im}; }
  Complex operator*(const Complex& b) const { return {re * b.re - im * b.im, re * b.im + im * b.re}; }
  Complex operator*(const Real& s) const { return {re * s, im * s}; }
  Complex& operator+=(const Complex& b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  Real abs() const;
};

/// exp(2 pi i x) for real x.
Complex unit_phase(const Real& x);
/// Principal square root.
Complex sqrt_principal(const Complex& z);

/// A point of the upper half plane with exact rational coordinates.
struct Tau {
  Q re;
  Q im;

  Tau s_image() const;  // -1/tau
  Tau plus_one() const { return {re + 1, im}; }
  Complex value() const { return {to_real(re), to_real(im)}; }
  std::string to_string() const;
};

/// Parses "re,im" with decimal or a/b components.
Tau parse_tau(const std::string& text);

class QSeries;

struct Evaluation {
  Complex value;
  Real tail_bound;  // |q|^order / (1 - |q|^{1/D}) * max |c|
};

/// Numerical value of a truncated series at q = exp(2 pi i tau).
Evaluation evaluate(const QSeries& s, const Tau& tau, int digits);

void check_digits(int digits);

}  // namespace pfc
