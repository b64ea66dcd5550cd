// pfcoset: command-line front end over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "pfcoset/pfcoset.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitFailed = 1;

struct ApiError {
  pfc_status status;
  std::string message;
};

void check(pfc_status st) {
  if (st != PFC_OK) throw ApiError{st, pfc_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  pfc_string_free(s);
  return out;
}

using LevelPtr = std::unique_ptr<pfc_level, decltype(&pfc_level_destroy)>;
using SeriesPtr = std::unique_ptr<pfc_series, decltype(&pfc_series_destroy)>;

SeriesPtr own(pfc_series* s) { return SeriesPtr(s, &pfc_series_destroy); }

struct Globals {
  long u = 0;
  long v = 0;
  std::string order;
  int window = 9;
  int digits = 80;
  std::vector<std::string> taus;
  std::string format = "text";
  std::string tol = "1e-20";
};

LevelPtr make_level(const Globals& g) {
  pfc_level* lv = nullptr;
  check(pfc_level_create(g.u, g.v, &lv));
  return LevelPtr(lv, &pfc_level_destroy);
}

std::string order_or(const Globals& g, const char* fallback) { return g.order.empty() ? fallback : g.order; }

void print_series(const Globals& g, pfc_series* s, const Json& meta) {
  if (g.format == "json") {
    Json j = meta;
    char* out = nullptr;
    check(pfc_series_to_json(s, &out));
    j["series"] = Json::parse(take(out));
    check(pfc_series_to_text(s, &out));
    j["text"] = take(out);
    std::cout << j.dump() << "\n";
  } else if (g.format == "csv") {
    char* out = nullptr;
    check(pfc_series_to_csv(s, &out));
    std::cout << take(out);
  } else {
    char* out = nullptr;
    check(pfc_series_to_text(s, &out));
    std::cout << take(out) << "\n";
  }
}

void print_rows(const Globals& g, const Json& rows, const std::vector<std::string>& columns) {
  if (g.format == "json") {
    std::cout << rows.dump() << "\n";
    return;
  }
  const bool csv = g.format == "csv";
  auto cell = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  if (csv) {
    for (size_t i = 0; i < columns.size(); ++i) std::cout << (i ? "," : "") << columns[i];
    std::cout << "\n";
  }
  for (const auto& row : rows) {
    for (size_t i = 0; i < columns.size(); ++i) {
      if (csv)
        std::cout << (i ? "," : "") << cell(row.at(columns[i]));
      else
        std::cout << (i ? "  " : "") << columns[i] << "=" << cell(row.at(columns[i]));
    }
    std::cout << "\n";
  }
}

void cmd_info(const Globals& g) {
  auto lv = make_level(g);
  char* out = nullptr;
  check(pfc_level_info_json(lv.get(), &out));
  Json j = Json::parse(take(out));
  if (g.format == "json") {
    std::cout << j.dump() << "\n";
  } else if (g.format == "csv") {
    std::cout << "key,value\n";
    for (const auto& [k, v] : j.items()) std::cout << k << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  } else {
    std::cout << "k=" << j["k"].get<std::string>() << " t=" << j["t"].get<std::string>() << " w=" << j["w"]
              << " p=" << j["p"] << " c~=" << j["c_coset"].get<std::string>()
              << " c_affine=" << j["c_affine"].get<std::string>()
              << " c_virasoro=" << j["c_virasoro"].get<std::string>() << "\n";
  }
}

void cmd_kac(const Globals& g) {
  auto lv = make_level(g);
  char* out = nullptr;
  check(pfc_kac_json(lv.get(), &out));
  print_rows(g, Json::parse(take(out)), {"r", "s", "h"});
}

void cmd_enumerate(const Globals& g, bool extended) {
  auto lv = make_level(g);
  char* out = nullptr;
  check(pfc_enumerate_json(lv.get(), extended ? 1 : 0, &out));
  Json rows = Json::parse(take(out));
  if (extended)
    print_rows(g, rows, {"label", "kind", "ground_weight"});
  else
    print_rows(g, rows, {"family"});
  if (g.format == "text") {
    size_t c = 0, d = 0, e = 0;
    for (const auto& r : rows) {
      std::string k = r["kind"];
      (k == "C" ? c : k == "D" ? d : e)++;
    }
    std::cout << "# C=" << c << " D=" << d << " E=" << e << " total=" << rows.size() << "\n";
  }
}

void cmd_char(const Globals& g, const std::string& label, bool crosscheck) {
  auto lv = make_level(g);
  pfc_route route = crosscheck ? PFC_ROUTE_CROSSCHECK : PFC_ROUTE_PRIMARY;
  const std::string order = order_or(g, "10");
  pfc_series* s = nullptr;
  pfc_status st = pfc_character(lv.get(), label.c_str(), order.c_str(), route, &s);
  if (st == PFC_OK) {
    auto held = own(s);
    print_series(g, held.get(), {{"label", label}, {"order", order}});
    return;
  }
  // Weight-graded (affine) characters.
  char* out = nullptr;
  check(pfc_character_json(lv.get(), label.c_str(), order.c_str(), route, g.window, &out));
  Json j = Json::parse(take(out));
  if (g.format == "json") {
    std::cout << j.dump() << "\n";
  } else if (g.format == "csv") {
    std::cout << "weight,series\n";
    for (const auto& c : j["components"])
      std::cout << c["weight"].get<std::string>() << ",\"" << c["text"].get<std::string>() << "\"\n";
  } else {
    for (const auto& c : j["components"])
      std::cout << "[" << c["weight"].get<std::string>() << "] " << c["text"].get<std::string>() << "\n";
  }
}

void cmd_fuse(const Globals& g, const std::string& a, const std::string& b, bool genuine) {
  auto lv = make_level(g);
  char* out = nullptr;
  check(genuine ? pfc_fuse_json(lv.get(), a.c_str(), b.c_str(), &out)
                : pfc_gfuse_json(lv.get(), a.c_str(), b.c_str(), &out));
  Json j = Json::parse(take(out));
  if (g.format == "json") {
    std::cout << j.dump() << "\n";
  } else if (g.format == "csv") {
    std::cout << "label,coeff\n";
    for (const auto& t : j["terms"]) std::cout << t["label"].get<std::string>() << "," << t["coeff"] << "\n";
  } else {
    std::cout << j["text"].get<std::string>() << "\n";
    for (const auto& n : j["notes"]) std::cout << "# " << n.get<std::string>() << "\n";
  }
}

void cmd_theta(const Globals& g, const std::string& mu, bool deriv) {
  auto lv = make_level(g);
  const std::string order = order_or(g, "10");
  pfc_series* s = nullptr;
  check(pfc_theta(lv.get(), mu.c_str(), order.c_str(), deriv ? 1 : 0, &s));
  auto held = own(s);
  print_series(g, held.get(), {{"mu", mu}, {"deriv", deriv}, {"order", order}});
}

void cmd_gamma(const Globals& g, const std::string& mu, long r) {
  auto lv = make_level(g);
  const std::string order = order_or(g, "10");
  pfc_series* s = nullptr;
  check(pfc_gamma(lv.get(), mu.c_str(), r, order.c_str(), &s));
  auto held = own(s);
  print_series(g, held.get(), {{"mu", mu}, {"r", r}, {"order", order}});
}

void cmd_smatrix(const Globals& g, const std::string& kind, bool stated) {
  auto lv = make_level(g);
  std::string k = kind == "gamma" && stated ? "gamma-stated" : kind;
  const int digits = g.format == "text" ? std::min(g.digits, 20) : g.digits;
  char* out = nullptr;
  check(pfc_smatrix_json(lv.get(), k.c_str(), digits, &out));
  Json j = Json::parse(take(out));
  if (g.format == "json") {
    std::cout << j.dump() << "\n";
    return;
  }
  const char* sep = g.format == "csv" ? "," : "  ";
  const auto& index = j["index"];
  auto name = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  std::cout << (g.format == "csv" ? "row" : "#");
  for (const auto& x : index) std::cout << sep << name(x);
  std::cout << "\n";
  for (size_t i = 0; i < j["matrix"].size(); ++i) {
    std::cout << name(index[i]);
    for (const auto& x : j["matrix"][i]) std::cout << sep << x.get<std::string>();
    std::cout << "\n";
  }
}

void cmd_basis(const Globals& g) {
  auto lv = make_level(g);
  const std::string order = order_or(g, "20");
  char* out = nullptr;
  check(pfc_basis_json(lv.get(), order.c_str(), &out));
  Json j = Json::parse(take(out));
  long sc = 0, gb = 0, tot = 0;
  check(pfc_rep_dimension(lv.get(), &sc, &gb, &tot));
  j["rep_dimension"] = {{"standard_count", sc}, {"gamma_dim_bound", gb}, {"total", tot}};
  if (g.format == "json") {
    std::cout << j.dump() << "\n";
  } else if (g.format == "csv") {
    std::cout << "mu,r\n";
    for (const auto& e : j["basis"]) std::cout << e["mu"].get<std::string>() << "," << e["r"] << "\n";
  } else {
    for (const auto& e : j["basis"]) std::cout << "(" << e["mu"].get<std::string>() << ";" << e["r"] << ")\n";
    std::cout << "# size=" << j["size"] << " closed_form=" << j["closed_form"].get<std::string>()
              << " gamma_rank=" << j["gamma_rank"] << " (order " << order << ")\n";
    std::cout << "# rep dimension: standard=" << sc << " gamma_bound=" << gb << " total=" << tot << "\n";
  }
}

int cmd_verify(const Globals& g, const std::string& kind, bool stated) {
  auto lv = make_level(g);
  std::vector<std::string> kinds;
  if (kind == "all")
    kinds = {"theta-s", "std-s", "gamma-s", "t", "lemma", "resolutions", "twistrules", "two-route"};
  else
    kinds = {kind};
  std::vector<const char*> taus;
  for (const auto& t : g.taus) taus.push_back(t.c_str());
  const std::string order = order_or(g, "60");
  pfc_verify_options opt;
  pfc_verify_options_init(&opt);
  opt.order = order.c_str();
  opt.digits = g.digits;
  opt.tol = g.tol.c_str();
  opt.window = g.window;
  opt.taus = taus.empty() ? nullptr : taus.data();
  opt.n_taus = taus.size();
  opt.stated_gamma_table = stated ? 1 : 0;
  bool all_pass = true;
  if (g.format == "csv") std::cout << "check,items,max_residual,tail_budget,pass\n";
  for (const auto& k : kinds) {
    int pass = 0;
    char* out = nullptr;
    check(pfc_verify_json(lv.get(), k.c_str(), &opt, &pass, &out));
    Json j = Json::parse(take(out));
    all_pass = all_pass && pass;
    if (g.format == "json") {
      std::cout << j.dump() << "\n";
    } else if (g.format == "csv") {
      std::cout << j["check"].get<std::string>() << "," << j["items"].size() << ","
                << j["max_residual"].get<std::string>() << "," << j["tail_budget"].get<std::string>() << ","
                << (pass ? "true" : "false") << "\n";
    } else {
      std::cout << (pass ? "PASS " : "FAIL ") << j["check"].get<std::string>() << "  items=" << j["items"].size()
                << "  max_residual=" << j["max_residual"].get<std::string>()
                << "  tail_budget=" << j["tail_budget"].get<std::string>();
      if (j.contains("note")) std::cout << "  (" << j["note"].get<std::string>() << ")";
      std::cout << "\n";
      if (!pass)
        for (const auto& it : j["items"])
          if (it.contains("detail") || std::stod(it["residual"].get<std::string>()) > std::stod(g.tol))
            std::cout << "  " << it["key"].get<std::string>() << "  residual=" << it["residual"].get<std::string>()
                      << (it.contains("detail") ? "  " + it["detail"].get<std::string>() : "") << "\n";
    }
  }
  return all_pass ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact characters, fusion and modular data for admissible sl(2) parafermion cosets"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--u", g.u, "level numerator u (k = u/v - 2)")->required();
  app.add_option("--v", g.v, "level denominator v")->required();
  app.add_option("--order", g.order, "truncation order N (rational)");
  app.add_option("--window", g.window, "number of weights for affine characters and twist checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--digits", g.digits, "decimal digits for numerical output")->check(CLI::Range(15, 150));
  app.add_option("--tau", g.taus, "sample point 're,im' (repeatable)")->allow_extra_args(false);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--tol", g.tol, "residual tolerance for numerical checks");

  std::string a, b, mu, kind;
  long r = 0;
  bool coset = false, extended = false, deriv = false, crosscheck = false, stated = false;

  auto* info = app.add_subcommand("info", "level data");
  auto* kac = app.add_subcommand("kac", "minimal-model Kac table");
  auto* en = app.add_subcommand("enumerate", "module families (coset) or irreducibles (extended)");
  en->add_flag("--coset", coset, "coset families (default)");
  en->add_flag("--extended", extended, "irreducible extended modules");
  auto* ch = app.add_subcommand("char", "character of an affine, coset or extended label");
  ch->add_option("label", a, "label, e.g. C[0;1], B.E[1/3;1,1], sf^1(L[1])")->required();
  ch->add_flag("--crosscheck", crosscheck, "use the independent route");
  auto* fu = app.add_subcommand("fuse", "fusion product with a C- or L-type factor");
  fu->add_option("a", a)->required();
  fu->add_option("b", b)->required();
  auto* gf = app.add_subcommand("gfuse", "Grothendieck fusion product");
  gf->add_option("a", a)->required();
  gf->add_option("b", b)->required();
  auto* th = app.add_subcommand("theta", "lattice theta function theta_{mu+L}");
  th->add_option("mu", mu)->required();
  th->add_flag("--deriv", deriv, "normalized derivative");
  auto* ga = app.add_subcommand("gamma", "weight-one part Gamma_{mu;r}");
  ga->add_option("mu", mu)->required();
  ga->add_option("r", r)->required();
  auto* sm = app.add_subcommand("smatrix", "S-matrices");
  sm->add_option("kind", kind)->required()->check(CLI::IsMember({"typ", "theta", "vir", "gamma"}));
  sm->add_flag("--stated", stated, "gamma: fixed-rule A coefficients");
  auto* ba = app.add_subcommand("basis", "spanning set B_k and dimension report");
  auto* ve = app.add_subcommand("verify", "run verification checks");
  ve->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember(
          {"theta-s", "std-s", "gamma-s", "t", "lemma", "resolutions", "twistrules", "two-route", "all"}));
  ve->add_flag("--stated", stated, "gamma-s: fixed-rule A coefficients");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (coset && extended) {
    std::cerr << "error: --coset and --extended are exclusive\n";
    return kExitUsage;
  }

  try {
    if (*info) cmd_info(g);
    if (*kac) cmd_kac(g);
    if (*en) cmd_enumerate(g, extended);
    if (*ch) cmd_char(g, a, crosscheck);
    if (*fu) cmd_fuse(g, a, b, true);
    if (*gf) cmd_fuse(g, a, b, false);
    if (*th) cmd_theta(g, mu, deriv);
    if (*ga) cmd_gamma(g, mu, r);
    if (*sm) cmd_smatrix(g, kind, stated);
    if (*ba) cmd_basis(g);
    if (*ve) return cmd_verify(g, kind, stated);
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
