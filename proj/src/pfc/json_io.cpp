#include "pfc/json_io.hpp"

#include "pfc/error.hpp"

namespace pfc {

Json series_to_json(const QSeries& s) {
  Json terms = Json::array();
  for (const auto& [idx, c] : s.terms()) terms.push_back({std::to_string(idx), to_string(c)});
  return {{"offset", to_string(s.offset())}, {"denom", s.denom()}, {"order", to_string(s.order())}, {"terms", terms}};
}

QSeries series_from_json(const Json& j) {
  try {
    Q offset = parse_rational(j.at("offset").get<std::string>());
    long denom = j.at("denom").get<long>();
    Q order = parse_rational(j.at("order").get<std::string>());
    if (denom <= 0) fail(Errc::ParseError, "denom must be positive");
    SeriesBuilder b(order);
    for (const auto& t : j.at("terms")) {
      long idx = std::stol(t.at(0).get<std::string>());
      if (idx < 0) fail(Errc::ParseError, "negative term index");
      b.add(offset + q_of(idx, denom), parse_rational(t.at(1).get<std::string>()));
    }
    return b.build();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(Errc::ParseError, std::string("malformed series JSON: ") + e.what());
  }
}

Json report_to_json(const CheckReport& r, int digits) {
  Json taus = Json::array();
  for (const Tau& t : r.taus) taus.push_back(t.to_string());
  Json items = Json::array();
  for (const auto& it : r.items) {
    Json j = {{"key", it.key}, {"residual", to_decimal(it.residual, digits)}, {"tail", to_decimal(it.tail, digits)}};
    if (!it.detail.empty()) j["detail"] = it.detail;
    items.push_back(j);
  }
  Json out = {{"check", r.name},
              {"taus", taus},
              {"order", to_string(r.order)},
              {"digits", r.digits},
              {"tol", to_decimal(r.tol, digits)},
              {"max_residual", to_decimal(r.max_residual, digits)},
              {"tail_budget", to_decimal(r.tail_budget, digits)},
              {"pass", r.pass}};
  if (!r.note.empty()) out["note"] = r.note;
  out["items"] = items;
  return out;
}

Json matrix_to_json(const RealMatrix& m, int digits) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json jr = Json::array();
    for (const Real& x : row) jr.push_back(to_decimal(x, digits));
    rows.push_back(jr);
  }
  return rows;
}

}  // namespace pfc
