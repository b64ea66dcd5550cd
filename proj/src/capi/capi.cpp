#include "pfcoset/pfcoset.h"

#include <cstring>
#include <memory>
#include <string>

#include "pfc/error.hpp"
#include "pfc/extension.hpp"
#include "pfc/fusion.hpp"
#include "pfc/json_io.hpp"
#include "pfc/labels.hpp"
#include "pfc/minmod.hpp"
#include "pfc/modcheck.hpp"

struct pfc_level {
  pfc::Level level;
};

struct pfc_series {
  pfc::QSeries series;
};

namespace {

thread_local std::string g_last_error;

template <class Fn>
pfc_status guarded(Fn fn) {
  try {
    fn();
    g_last_error.clear();
    return PFC_OK;
  } catch (const pfc::Error& e) {
    g_last_error = e.what();
    return static_cast<pfc_status>(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PFC_INTERNAL_ERROR;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) pfc::fail(pfc::Errc::InvalidArgument, std::string(what) + " is null");
}

pfc::Q rational(const char* text, const char* what) {
  need(text, what);
  return pfc::parse_rational(text);
}

pfc::Route route_of(pfc_route r) { return r == PFC_ROUTE_CROSSCHECK ? pfc::Route::Crosscheck : pfc::Route::Primary; }

pfc_series* wrap(pfc::QSeries s) { return new pfc_series{std::move(s)}; }

pfc::Json label_terms(const pfc::CosetElement& e, bool extended) {
  pfc::Json terms = pfc::Json::array();
  for (const auto& [x, c] : e.terms)
    terms.push_back({{"label", extended ? pfc::format_ext_label(x) : pfc::format_label(x)}, {"coeff", c}});
  return {{"text", pfc::format_element(e, extended)}, {"terms", terms}, {"notes", e.notes}};
}

pfc::Json label_terms(const pfc::AffineElement& e) {
  pfc::Json terms = pfc::Json::array();
  for (const auto& [x, c] : e.terms) terms.push_back({{"label", pfc::format_label(x)}, {"coeff", c}});
  return {{"text", pfc::format_element(e)}, {"terms", terms}, {"notes", e.notes}};
}

pfc::Json fusion_json(const pfc::Level& lv, const char* a_text, const char* b_text, bool genuine) {
  need(a_text, "first label");
  need(b_text, "second label");
  pfc::ParsedLabel a = pfc::parse_label(a_text), b = pfc::parse_label(b_text);
  if (a.space != b.space) pfc::fail(pfc::Errc::InvalidArgument, "labels belong to different module categories");
  switch (a.space) {
    case pfc::LabelSpace::Affine: {
      pfc::AffineLabel x = pfc::canonical(lv, a.affine), y = pfc::canonical(lv, b.affine);
      if (genuine && x.kind != pfc::AffineKind::L && y.kind != pfc::AffineKind::L)
        pfc::fail(pfc::Errc::InvalidArgument, "genuine fusion needs an L-type factor; use gfuse");
      return label_terms(pfc::gr_fuse_affine(lv, x, y));
    }
    case pfc::LabelSpace::Coset: {
      pfc::CosetLabel x = pfc::canonical(lv, a.coset), y = pfc::canonical(lv, b.coset);
      if (genuine && x.kind != pfc::CosetKind::C && y.kind != pfc::CosetKind::C)
        pfc::fail(pfc::Errc::InvalidArgument, "genuine fusion needs a C-type factor; use gfuse");
      return label_terms(pfc::gr_fuse(lv, x, y), false);
    }
    case pfc::LabelSpace::Extended: {
      pfc::CosetLabel x = pfc::ext_canonical(lv, a.coset), y = pfc::ext_canonical(lv, b.coset);
      if (genuine && x.kind != pfc::CosetKind::C && y.kind != pfc::CosetKind::C)
        pfc::fail(pfc::Errc::InvalidArgument, "genuine fusion needs a C-type factor; use gfuse");
      return label_terms(pfc::gr_fuse_ext(lv, x, y), true);
    }
  }
  return {};
}

}  // namespace

extern "C" {

const char* pfc_last_error(void) { return g_last_error.c_str(); }

const char* pfc_status_name(pfc_status status) {
  if (status == PFC_OK) return "Ok";
  if (status == PFC_INTERNAL_ERROR) return "InternalError";
  return pfc::errc_name(static_cast<pfc::Errc>(status));
}

void pfc_string_free(char* s) { std::free(s); }

pfc_status pfc_level_create(long u, long v, pfc_level** out) {
  return guarded([&] {
    need(out, "out");
    *out = new pfc_level{pfc::Level(u, v)};
  });
}

void pfc_level_destroy(pfc_level* level) { delete level; }

pfc_status pfc_level_info_json(const pfc_level* level, char** out) {
  return guarded([&] {
    need(level, "level");
    need(out, "out");
    const pfc::Level& lv = level->level;
    pfc::Json j = {{"u", lv.u()},
                   {"v", lv.v()},
                   {"k", pfc::to_string(lv.k())},
                   {"t", pfc::to_string(lv.t())},
                   {"w", lv.w()},
                   {"p", lv.p()},
                   {"c_affine", pfc::to_string(lv.c_affine())},
                   {"c_coset", pfc::to_string(lv.c_coset())},
                   {"c_virasoro", pfc::to_string(lv.c_virasoro())}};
    *out = dup(j.dump());
  });
}

pfc_status pfc_kac_json(const pfc_level* level, char** out) {
  return guarded([&] {
    need(level, "level");
    need(out, "out");
    const pfc::MinModel& m = level->level.minmod();
    pfc::Json rows = pfc::Json::array();
    for (const pfc::Kac& c : pfc::kac_table(m))
      rows.push_back({{"r", c.r}, {"s", c.s}, {"h", pfc::to_string(pfc::kac_h(m, c.r, c.s))}});
    *out = dup(rows.dump());
  });
}

pfc_status pfc_enumerate_json(const pfc_level* level, int extended, char** out) {
  return guarded([&] {
    need(level, "level");
    need(out, "out");
    const pfc::Level& lv = level->level;
    pfc::Json rows = pfc::Json::array();
    if (extended) {
      for (const pfc::CosetLabel& x : pfc::enumerate_modules(lv))
        rows.push_back({{"label", pfc::format_ext_label(x)},
                        {"kind", pfc::kind_name(x.kind)},
                        {"ground_weight", pfc::to_string(pfc::ext_ground_weight(lv, x))}});
    } else {
      for (const auto& f : pfc::enumerate_families(lv))
        rows.push_back({{"family", f.text}, {"kind", pfc::kind_name(f.kind)}, {"r", f.r}, {"s", f.s}});
    }
    *out = dup(rows.dump());
  });
}

void pfc_series_destroy(pfc_series* s) { delete s; }

pfc_status pfc_series_to_json(const pfc_series* s, char** out) {
  return guarded([&] {
    need(s, "series");
    need(out, "out");
    *out = dup(pfc::series_to_json(s->series).dump());
  });
}

pfc_status pfc_series_from_json(const char* json, pfc_series** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    pfc::Json j;
    try {
      j = pfc::Json::parse(json);
    } catch (const std::exception& e) {
      pfc::fail(pfc::Errc::ParseError, e.what());
    }
    *out = wrap(pfc::series_from_json(j));
  });
}

pfc_status pfc_series_to_text(const pfc_series* s, char** out) {
  return guarded([&] {
    need(s, "series");
    need(out, "out");
    *out = dup(s->series.to_string());
  });
}

pfc_status pfc_series_to_csv(const pfc_series* s, char** out) {
  return guarded([&] {
    need(s, "series");
    need(out, "out");
    std::string csv = "exponent,coefficient\n";
    for (const auto& [e, c] : s->series.exponent_terms()) csv += pfc::to_string(e) + "," + pfc::to_string(c) + "\n";
    *out = dup(csv);
  });
}

pfc_status pfc_series_add(const pfc_series* a, const pfc_series* b, pfc_series** out) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    need(out, "out");
    *out = wrap(a->series + b->series);
  });
}

int pfc_series_equal(const pfc_series* a, const pfc_series* b) { return a && b && a->series == b->series; }

pfc_status pfc_series_eval_json(const pfc_series* s, const char* tau_re, const char* tau_im, int digits, char** out) {
  return guarded([&] {
    need(s, "series");
    need(out, "out");
    pfc::Tau tau{rational(tau_re, "tau_re"), rational(tau_im, "tau_im")};
    pfc::Evaluation e = pfc::evaluate(s->series, tau, digits);
    pfc::Json j = {{"re", pfc::to_decimal(e.value.re, digits)},
                   {"im", pfc::to_decimal(e.value.im, digits)},
                   {"tail_bound", pfc::to_decimal(e.tail_bound, 6)}};
    *out = dup(j.dump());
  });
}

pfc_status pfc_character(const pfc_level* level, const char* label, const char* order, pfc_route route,
                         pfc_series** out) {
  return guarded([&] {
    need(level, "level");
    need(label, "label");
    need(out, "out");
    const pfc::Level& lv = level->level;
    pfc::Q n = rational(order, "order");
    pfc::ParsedLabel p = pfc::parse_label(label);
    switch (p.space) {
      case pfc::LabelSpace::Coset: *out = wrap(pfc::coset_character(lv, p.coset, n, route_of(route))); break;
      case pfc::LabelSpace::Extended:
        *out = wrap(pfc::ext_character(lv, pfc::parse_ext_label(lv, label), n, route_of(route)));
        break;
      case pfc::LabelSpace::Affine:
        pfc::fail(pfc::Errc::InvalidArgument, "affine characters are weight-graded; use pfc_character_json");
    }
  });
}

pfc_status pfc_character_json(const pfc_level* level, const char* label, const char* order, pfc_route route,
                              int window, char** out) {
  return guarded([&] {
    need(level, "level");
    need(label, "label");
    need(out, "out");
    if (window <= 0) pfc::fail(pfc::Errc::InvalidArgument, "window must be positive");
    const pfc::Level& lv = level->level;
    pfc::Q n = rational(order, "order");
    pfc::ParsedLabel p = pfc::parse_label(label);
    pfc::Json j;
    if (p.space == pfc::LabelSpace::Affine) {
      auto win = pfc::weight_window(lv, p.affine, pfc::Q(1 - window), window);
      pfc::WeightedCharacter ch = route == PFC_ROUTE_CROSSCHECK &&
                                          (p.affine.kind == pfc::AffineKind::L || p.affine.kind == pfc::AffineKind::Dplus)
                                      ? pfc::resolution_char(lv, p.affine, win, n)
                                      : pfc::weighted_char(lv, p.affine, win, n);
      pfc::Json comps = pfc::Json::array();
      for (const auto& [nu, s] : ch.components)
        comps.push_back({{"weight", pfc::to_string(nu)}, {"series", pfc::series_to_json(s)}, {"text", s.to_string()}});
      j = {{"label", pfc::format_label(p.affine)}, {"space", "affine"}, {"components", comps}};
    } else {
      pfc::QSeries s;
      std::string name;
      if (p.space == pfc::LabelSpace::Coset) {
        s = pfc::coset_character(lv, p.coset, n, route_of(route));
        name = pfc::format_label(p.coset);
      } else {
        pfc::CosetLabel x = pfc::parse_ext_label(lv, label);
        s = pfc::ext_character(lv, x, n, route_of(route));
        name = pfc::format_ext_label(x);
      }
      j = {{"label", name},
           {"space", p.space == pfc::LabelSpace::Coset ? "coset" : "extended"},
           {"series", pfc::series_to_json(s)},
           {"text", s.to_string()}};
    }
    *out = dup(j.dump());
  });
}

pfc_status pfc_theta(const pfc_level* level, const char* mu, const char* order, int deriv, pfc_series** out) {
  return guarded([&] {
    need(level, "level");
    need(out, "out");
    pfc::Q m = rational(mu, "mu"), n = rational(order, "order");
    *out = wrap(deriv ? pfc::dtheta(level->level, m, n) : pfc::theta(level->level, m, n));
  });
}

pfc_status pfc_gamma(const pfc_level* level, const char* mu, long r, const char* order, pfc_series** out) {
  return guarded([&] {
    need(level, "level");
    need(out, "out");
    *out = wrap(pfc::gamma(level->level, rational(mu, "mu"), r, rational(order, "order")));
  });
}

pfc_status pfc_fuse_json(const pfc_level* level, const char* a, const char* b, char** out) {
  return guarded([&] {
    need(level, "level");
    need(out, "out");
    *out = dup(fusion_json(level->level, a, b, true).dump());
  });
}

pfc_status pfc_gfuse_json(const pfc_level* level, const char* a, const char* b, char** out) {
  return guarded([&] {
    need(level, "level");
    need(out, "out");
    *out = dup(fusion_json(level->level, a, b, false).dump());
  });
}

pfc_status pfc_smatrix_json(const pfc_level* level, const char* kind, int digits, char** out) {
  return guarded([&] {
    need(level, "level");
    need(kind, "kind");
    need(out, "out");
    pfc::check_digits(digits);
    const pfc::Level& lv = level->level;
    const std::string k = kind;
    pfc::RealMatrix m;
    pfc::Json index = pfc::Json::array();
    if (k == "typ") {
      m = pfc::smatrix_typ(lv);
      for (long i = 0; i <= lv.p(); ++i) index.push_back(i);
    } else if (k == "theta") {
      m = pfc::smatrix_theta(lv);
      for (long i = 1; i < lv.p(); ++i) index.push_back(i);
    } else if (k == "vir") {
      m = pfc::smatrix_vir(lv);
      for (const pfc::Kac& c : pfc::kac_table(lv.minmod()))
        index.push_back("(" + std::to_string(c.r) + "," + std::to_string(c.s) + ")");
    } else if (k == "gamma" || k == "gamma-stated") {
      m = pfc::smatrix_gamma(lv, k == "gamma" ? pfc::GammaTable::OrbitCount : pfc::GammaTable::Stated);
      for (const auto& e : pfc::basis_Bk(lv))
        index.push_back("(" + pfc::to_string(e.mu) + ";" + std::to_string(e.r) + ")");
    } else {
      pfc::fail(pfc::Errc::InvalidArgument, "unknown S-matrix kind '" + k + "'");
    }
    pfc::Json j = {{"kind", k}, {"index", index}, {"matrix", pfc::matrix_to_json(m, digits)}};
    *out = dup(j.dump());
  });
}

pfc_status pfc_basis_json(const pfc_level* level, const char* order, char** out) {
  return guarded([&] {
    need(level, "level");
    need(out, "out");
    const pfc::Level& lv = level->level;
    pfc::Json rows = pfc::Json::array();
    for (const auto& e : pfc::basis_Bk(lv)) rows.push_back({{"mu", pfc::to_string(e.mu)}, {"r", e.r}});
    pfc::Json j = {{"basis", rows},
                   {"size", rows.size()},
                   {"closed_form", pfc::to_string(pfc::dim_bound(lv))},
                   {"gamma_rank", pfc::gamma_rank(lv, rational(order, "order"))},
                   {"rank_order", order}};
    *out = dup(j.dump());
  });
}

pfc_status pfc_rep_dimension(const pfc_level* level, long* standard_count, long* gamma_dim_bound, long* total) {
  return guarded([&] {
    need(level, "level");
    pfc::RepDimension d = pfc::rep_dimension_report(level->level);
    if (standard_count) *standard_count = d.standard_count;
    if (gamma_dim_bound) *gamma_dim_bound = d.gamma_dim_bound;
    if (total) *total = d.total;
  });
}

void pfc_verify_options_init(pfc_verify_options* opt) {
  if (!opt) return;
  opt->order = "60";
  opt->digits = 80;
  opt->tol = "1e-20";
  opt->window = 9;
  opt->taus = nullptr;
  opt->n_taus = 0;
  opt->stated_gamma_table = 0;
}

pfc_status pfc_verify_json(const pfc_level* level, const char* kind, const pfc_verify_options* opt, int* pass,
                           char** out) {
  return guarded([&] {
    need(level, "level");
    need(kind, "kind");
    need(out, "out");
    pfc_verify_options defaults;
    pfc_verify_options_init(&defaults);
    const pfc_verify_options& o = opt ? *opt : defaults;
    pfc::CheckOptions co;
    co.order = rational(o.order ? o.order : "60", "order");
    co.digits = o.digits;
    pfc::check_digits(co.digits);
    try {
      co.tol = pfc::Real(o.tol ? o.tol : "1e-20");
    } catch (const std::exception&) {
      pfc::fail(pfc::Errc::ParseError, "bad tolerance");
    }
    if (o.window <= 0) pfc::fail(pfc::Errc::InvalidArgument, "window must be positive");
    co.window = o.window;
    if (o.n_taus > 0) {
      need(o.taus, "taus");
      co.taus.clear();
      for (size_t i = 0; i < o.n_taus; ++i) co.taus.push_back(pfc::parse_tau(o.taus[i]));
    }
    co.gamma_table = o.stated_gamma_table ? pfc::GammaTable::Stated : pfc::GammaTable::OrbitCount;
    pfc::CheckReport r = pfc::verify(pfc::parse_check(kind), level->level, co);
    if (pass) *pass = r.pass ? 1 : 0;
    *out = dup(pfc::report_to_json(r).dump());
  });
}

}  // extern "C"
