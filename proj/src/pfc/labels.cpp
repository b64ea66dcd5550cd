#include "pfc/labels.hpp"

#include <regex>

#include "pfc/error.hpp"

namespace pfc {

namespace {

const std::string kRat = R"(\s*(-?[0-9]+(?:/[0-9]+)?|-?[0-9]*\.[0-9]+)\s*)";
const std::string kInt = R"(\s*(-?[0-9]+)\s*)";

long to_int(const std::string& s) {
  try {
    return std::stol(s);
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad integer '" + s + "'");
  }
}

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

CosetKind coset_kind(const std::string& tag) {
  if (tag == "C") return CosetKind::C;
  if (tag == "D") return CosetKind::D;
  if (tag == "E") return CosetKind::E;
  if (tag == "Estd+") return CosetKind::EstdPlus;
  return CosetKind::EstdMinus;
}

}  // namespace

CosetLabel parse_coset_label(const std::string& raw) {
  const std::string text = trim(raw);
  static const std::regex c_re("C\\[" + kRat + ";" + kInt + "\\]");
  static const std::regex rs_re("(D|E|Estd\\+|Estd-)\\[" + kRat + ";" + kInt + "," + kInt + "\\]");
  std::smatch m;
  if (std::regex_match(text, m, c_re)) return C_label(parse_rational(m[1].str()), to_int(m[2].str()));
  if (std::regex_match(text, m, rs_re))
    return {coset_kind(m[1].str()), parse_rational(m[2].str()), to_int(m[3].str()), to_int(m[4].str())};
  fail(Errc::ParseError, "not a coset label: '" + raw + "'");
}

AffineLabel parse_affine_label(const std::string& raw) {
  std::string text = trim(raw);
  long flow = 0;
  static const std::regex sf_re(R"(sf\^\s*(-?[0-9]+)\s*\((.*)\))");
  std::smatch m;
  if (std::regex_match(text, m, sf_re)) {
    flow = to_int(m[1].str());
    text = trim(m[2].str());
  }
  static const std::regex l_re("L\\[" + kInt + "\\]");
  static const std::regex rs_re("(D\\+|D-|Estd\\+|Estd-)\\[" + kInt + "," + kInt + "\\]");
  static const std::regex e_re("E\\[" + kRat + ";" + kInt + "," + kInt + "\\]");
  if (std::regex_match(text, m, l_re)) return L_affine(to_int(m[1].str()), flow);
  if (std::regex_match(text, m, e_re))
    return E_affine(parse_rational(m[1].str()), to_int(m[2].str()), to_int(m[3].str()), flow);
  if (std::regex_match(text, m, rs_re)) {
    const std::string tag = m[1].str();
    long r = to_int(m[2].str()), s = to_int(m[3].str());
    if (tag == "D+") return Dplus_affine(r, s, flow);
    if (tag == "D-") return Dminus_affine(r, s, flow);
    return Estd_affine(tag == "Estd+", r, s, flow);
  }
  fail(Errc::ParseError, "not an affine label: '" + raw + "'");
}

CosetLabel parse_ext_label(const Level& lv, const std::string& raw) {
  const std::string text = trim(raw);
  if (text.rfind("B.", 0) != 0) fail(Errc::ParseError, "extended labels start with 'B.': '" + raw + "'");
  CosetLabel x = parse_coset_label(text.substr(2));
  x.mu = mod_q(x.mu, Q(2 * lv.w()));
  return x;
}

// E[..;..] and Estd+-[..;..] without a flow prefix read as coset labels.
ParsedLabel parse_label(const std::string& raw) {
  const std::string text = trim(raw);
  ParsedLabel out{LabelSpace::Coset};
  if (text.rfind("B.", 0) == 0) {
    out.space = LabelSpace::Extended;
    out.coset = parse_coset_label(text.substr(2));
    return out;
  }
  if (text.rfind("sf^", 0) == 0 || text.rfind("L[", 0) == 0 || text.rfind("D+[", 0) == 0 ||
      text.rfind("D-[", 0) == 0 || (text.rfind("Estd", 0) == 0 && text.find(';') == std::string::npos)) {
    out.space = LabelSpace::Affine;
    out.affine = parse_affine_label(text);
    return out;
  }
  out.coset = parse_coset_label(text);
  return out;
}

std::string format_label(const CosetLabel& x) {
  std::string head = kind_name(x.kind) + "[" + to_string(x.mu) + ";" + std::to_string(x.r);
  if (x.kind != CosetKind::C) head += "," + std::to_string(x.s);
  return head + "]";
}

std::string format_ext_label(const CosetLabel& x) { return "B." + format_label(x); }

std::string format_label(const AffineLabel& x) {
  std::string body = affine_kind_name(x.kind) + "[";
  if (x.kind == AffineKind::E) body += to_string(x.lambda) + ";";
  body += std::to_string(x.r);
  if (x.kind != AffineKind::L) body += "," + std::to_string(x.s);
  body += "]";
  return "sf^" + std::to_string(x.flow) + "(" + body + ")";
}

namespace {

template <class Elem, class Fmt>
std::string join_terms(const Elem& x, Fmt fmt) {
  if (x.terms.empty()) return "0";
  std::string out;
  for (const auto& [label, c] : x.terms) {
    long a = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (a != 1) out += std::to_string(a) + "*";
    out += fmt(label);
  }
  return out;
}

}  // namespace

std::string format_element(const CosetElement& x, bool extended) {
  return join_terms(x, [&](const CosetLabel& l) { return extended ? format_ext_label(l) : format_label(l); });
}

std::string format_element(const AffineElement& x) {
  return join_terms(x, [](const AffineLabel& l) { return format_label(l); });
}

}  // namespace pfc
