#include <doctest.h>

#include "pfc/error.hpp"
#include "pfc/minmod.hpp"

using namespace pfc;

namespace {

// prod_{n>=1} (1 + sign q^{n-1/2}) in powers of q^{1/2}, to q^{n/2}.
std::vector<long> half_product(int n, int sign) {
  std::vector<long> c(n + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; k += 2)
    for (int i = n; i >= k; --i) c[i] += sign * c[i - k];
  return c;
}

std::vector<std::pair<long, long>> levels_up_to(long bound) {
  std::vector<std::pair<long, long>> out;
  for (long u = 2; u <= bound; ++u)
    for (long v = 2; u * v <= bound; ++v)
      if (gcd_l(u, v) == 1) out.emplace_back(u, v);
  return out;
}

}  // namespace

TEST_CASE("Ising characters match the free fermion") {
  MinModel m(4, 3);
  const int n = 40;  // in units of q^{1/2}
  auto plus = half_product(n, 1), minus = half_product(n, -1);
  QSeries vac = min_char(m, 1, 1, Q(n / 2));
  QSeries eps = min_char(m, 3, 1, Q(n / 2));
  for (int i = 0; i <= n - 4; ++i) {
    Q e = q_of(i, 2) - q_of(1, 48);
    if (i % 2 == 0)
      CHECK(vac.coefficient(e) == (plus[i] + minus[i]) / 2);
    else
      CHECK(eps.coefficient(e) == (plus[i] - minus[i]) / 2);
  }
}

TEST_CASE("Kac table and weights") {
  MinModel m(4, 3);
  CHECK(m.central_charge() == q_of(1, 2));
  CHECK(kac_table(m).size() == 3);
  CHECK(kac_h(m, 2, 1) == q_of(1, 16));
  CHECK(kac_h(m, 3, 1) == q_of(1, 2));
  CHECK(kac_h(m, 1, 2) == kac_h(m, 3, 1));
  CHECK(min_char(m, 1, 2, Q(10)) == min_char(m, 3, 1, Q(10)));
  CHECK_THROWS_AS(check_kac(m, 4, 1), Error);
  MinModel lee(5, 2);
  CHECK(lee.central_charge() == q_of(-22, 5));
  CHECK(kac_h(lee, 2, 1) == q_of(-1, 5));
}

TEST_CASE("characters are q^{h - c/24} times a series with leading coefficient 1") {
  for (auto [u, v] : levels_up_to(30)) {
    MinModel m(u, v);
    for (const Kac& a : kac_table(m)) {
      QSeries ch = min_char(m, a.r, a.s, Q(6));
      CHECK(ch.valuation() == kac_h(m, a.r, a.s) - m.central_charge() / 24);
      CHECK(ch.valuation() == min_char_valuation(m, a.r, a.s));
      CHECK(ch.coefficient(ch.valuation()) == 1);
    }
  }
}

TEST_CASE("combinatorial fusion equals Verlinde for uv <= 40") {
  for (auto [u, v] : levels_up_to(40)) {
    MinModel m(u, v);
    auto table = kac_table(m);
    auto N = verlinde_tensor(m);
    for (size_t a = 0; a < table.size(); ++a)
      for (size_t b = 0; b < table.size(); ++b) {
        auto n = fusion_coeffs(m, table[a], table[b]);
        for (size_t c = 0; c < table.size(); ++c) {
          long combinatorial = n.count(table[c]) ? n.at(table[c]) : 0;
          CHECK(boost::multiprecision::abs(N[a][b][c] - combinatorial) < Real("1e-9"));
        }
      }
  }
}

TEST_CASE("single Verlinde coefficients agree with the tensor") {
  MinModel m(5, 3);
  auto table = kac_table(m);
  auto N = verlinde_tensor(m);
  for (size_t a = 0; a < table.size(); ++a)
    for (size_t c = 0; c < table.size(); ++c)
      CHECK(boost::multiprecision::abs(N[a][1][c] - verlinde(m, table[a], table[1], table[c])) < Real("1e-100"));
}

TEST_CASE("fusion examples") {
  MinModel ising(4, 3);
  auto n = fusion_coeffs(ising, {3, 1}, {3, 1});
  CHECK(n.size() == 1);
  CHECK(n.at(kac_canonical(ising, 1, 1)) == 1);
  auto s = fusion_coeffs(ising, {2, 1}, {2, 1});
  CHECK(s.size() == 2);
}

TEST_CASE("S^vir is real orthogonal and symmetric") {
  for (auto [u, v] : levels_up_to(40)) {
    MinModel m(u, v);
    auto table = kac_table(m);
    auto S = s_vir_matrix(m);
    for (size_t a = 0; a < table.size(); ++a) {
      CHECK(boost::multiprecision::abs(S[a][0] - s_vir(m, table[0], table[a])) < Real("1e-100"));
      for (size_t b = 0; b < table.size(); ++b) {
        Real dot = 0;
        for (size_t c = 0; c < table.size(); ++c) dot += S[a][c] * S[b][c];
        CHECK(boost::multiprecision::abs(dot - (a == b ? 1 : 0)) < Real("1e-100"));
      }
    }
  }
}

TEST_CASE("row fusion rule") {
  CHECK(row_fusion(4, 2, 2, 1) == 1);
  CHECK(row_fusion(4, 2, 2, 3) == 1);
  CHECK(row_fusion(4, 2, 2, 2) == 0);
  CHECK(row_fusion(4, 3, 3, 3) == 0);
}
