#include "pfc/rational.hpp"

#include <cctype>
#include <numeric>

#include "pfc/error.hpp"

namespace pfc {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidLevel: return "InvalidLevel";
    case Errc::OutOfKacTable: return "OutOfKacTable";
    case Errc::ParityMismatch: return "ParityMismatch";
    case Errc::RangeError: return "RangeError";
    case Errc::TypicalOnAtypicalWeight: return "TypicalOnAtypicalWeight";
    case Errc::NotLiftable: return "NotLiftable";
    case Errc::WeightNotInSupport: return "WeightNotInSupport";
    case Errc::NonconvergentEvaluation: return "NonconvergentEvaluation";
    case Errc::InsufficientTruncation: return "InsufficientTruncation";
    case Errc::TruncationBelowGroundState: return "TruncationBelowGroundState";
    case Errc::UnnormalizedLabel: return "UnnormalizedLabel";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_int(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) fail(Errc::ParseError, "not a rational: '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Q parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) fail(Errc::ParseError, "empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_int(s.substr(0, slash), text);
    mpz_class den = parse_int(s.substr(slash + 1), text);
    if (den == 0) fail(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    Q r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip.front() == '-';
    if (!ip.empty() && (ip.front() == '-' || ip.front() == '+')) ip.remove_prefix(1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
      fail(Errc::ParseError, "not a decimal: '" + std::string(text) + "'");
    mpz_class whole = ip.empty() ? mpz_class(0) : mpz_class(std::string(ip), 10);
    mpz_class frac = fp.empty() ? mpz_class(0) : mpz_class(std::string(fp), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    Q r(whole * scale + frac, scale);
    r.canonicalize();
    return neg ? Q(-r) : r;
  }
  return Q(parse_int(s, text));
}

std::string to_string(const Q& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_integer(const Q& x) { return x.get_den() == 1; }

long to_long(const Q& x) {
  if (!is_integer(x) || !x.get_num().fits_slong_p())
    fail(Errc::RangeError, "expected a machine integer, got " + to_string(x));
  return x.get_num().get_si();
}

Q floor_q(const Q& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Q(f);
}

Q ceil_q(const Q& x) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Q(c);
}

Q mod_q(const Q& x, const Q& m) {
  Q r = x - m * floor_q(x / m);
  r.canonicalize();
  return r;
}

bool congruent(const Q& x, const Q& y, const Q& m) {
  Q d = (x - y) / m;
  d.canonicalize();
  return is_integer(d);
}

long gcd_l(long a, long b) { return std::gcd(a, b); }
long lcm_l(long a, long b) { return std::lcm(a, b); }

}  // namespace pfc
