#include <doctest.h>

#include <algorithm>
#include <array>

#include "pfc/error.hpp"
#include "pfc/extension.hpp"
#include "pfc/fusion.hpp"

using namespace pfc;

namespace {

const std::vector<std::pair<long, long>> kLevels{{3, 2}, {4, 3}, {2, 3}, {5, 3}, {3, 4}};

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc{};
}

bool near(const Real& a, const Real& b, double tol = 1e-100) { return abs(a - b) < tol; }

}  // namespace

TEST_CASE("theta functions") {
  for (auto [u, v] : kLevels) {
    Level lv(u, v);
    const long p = lv.p();
    const Q N(40);
    SeriesBuilder b(N);
    for (long l = 0; p * l * l <= 40; ++l) b.add(Q(p * l * l), Q(l == 0 ? 1 : 2));
    CHECK(theta(lv, Q(0), N) == b.build());
    CHECK(dtheta(lv, Q(0), N).is_zero());
    for (long m = 1; m < 2 * p; ++m) {
      Q mu = q_of(m, v);
      CHECK(dtheta(lv, -mu, N) == -dtheta(lv, mu, N));
      CHECK(theta(lv, -mu, N) == theta(lv, mu, N));
      CHECK(theta(lv, mu, N) == theta(lv, mu + 2 * lv.w(), N));
      CHECK(theta(lv, mu, N) == theta_one_sided(lv, mu, N));
      CHECK(dtheta(lv, mu, N) == dtheta(lv, mu, N, Route::Crosscheck));
    }
  }
}

TEST_CASE("A series") {
  for (auto [u, v] : kLevels) {
    Level lv(u, v);
    const Q N(30);
    CHECK(A_closed(lv, Q(0), N) == theta(lv, Q(0), N));
    for (long j = 1; j <= 2 * lv.w() * v; ++j) {
      Q lam = q_of(j, v);
      QSeries a = A_closed(lv, lam, N);
      CHECK(a == A_resummed(lv, lam, N));
    }
  }
}

TEST_CASE("standard characters") {
  SUBCASE("k = -1/2 vacuum standard") {
    Level lv(3, 2);
    const Q N(20);
    QSeries s = std_char(lv, Q(0), 1, 1, N);
    CHECK(s.valuation() == q_of(-1, 8) + q_of(1, 12));
    CHECK(s == (chi_over_eta(lv.minmod(), 1, 1, N + 1) * theta(lv, Q(0), N + 1)).at_order(N));
  }
  SUBCASE("periodic and equal to the coset sum") {
    for (auto [u, v] : kLevels) {
      Level lv(u, v);
      const Q N(12);
      for (const Kac& c : kac_table(lv.minmod())) {
        Q mu = q_of(1, v);
        while (atypical_weight(lv, mu, c.r, c.s)) mu += q_of(1, v);
        QSeries s = std_char(lv, mu, c.r, c.s, N);
        CHECK(s == std_char(lv, mu + 2 * lv.w(), c.r, c.s, N));
        SeriesBuilder sum(N);
        for (long l = -12; l <= 12; ++l)
          sum.add(coset_character_unchecked(lv, E_label(mu + 2 * lv.w() * l, c.r, c.s), N));
        CHECK(s == sum.build());
      }
    }
  }
  SUBCASE("not liftable off the dual lattice") {
    Level lv(4, 3);
    CHECK(code_of([&] { std_char(lv, q_of(1, 5), 1, 1, Q(4)); }) == Errc::NotLiftable);
    CHECK(lifts(lv, E_label(q_of(1, 3), 1, 1)));
    CHECK_FALSE(lifts(lv, E_label(q_of(1, 5), 1, 1)));
    CHECK(lifts(lv, C_label(Q(2), 1)));
    CHECK(code_of([&] { ext_canonical(lv, E_label(q_of(1, 5), 1, 1)); }) == Errc::NotLiftable);
  }
}

TEST_CASE("Gamma symmetries") {
  for (auto [u, v] : kLevels) {
    Level lv(u, v);
    const Q N(30);
    const long w = lv.w();
    const long sign = (v - 1) % 2 == 0 ? 1 : -1;
    for (long r = 1; r < u; ++r)
      for (long mu = (r - 1) % 2 - 2 * w; mu <= 2 * w; mu += 2) {
        QSeries g = gamma(lv, Q(mu), r, N);
        CHECK(g == gamma(lv, Q(mu + 2 * w), r, N));
        CHECK(g == gamma(lv, Q(-mu), r, N));
        CHECK(g == gamma(lv, Q(w + mu), u - r, N).scale(Q(sign)));
      }
    CHECK(code_of([&] { gamma(lv, Q(1), 1, N); }) == Errc::ParityMismatch);
  }
  SUBCASE("k = -1/2") {
    Level lv(3, 2);
    const Q N(30);
    QSeries expect = (chi_over_eta(lv.minmod(), 1, 1, N + 1) * dtheta(lv, q_of(1, 2), N + 1)).scale(Q(-2));
    CHECK(gamma(lv, Q(0), 1, N) == expect.at_order(N));
  }
}

TEST_CASE("extended characters") {
  for (auto [u, v] : std::vector<std::pair<long, long>>{{3, 2}, {4, 3}}) {
    Level lv(u, v);
    const Q N(15);
    for (const auto& x : enumerate_modules(lv)) {
      QSeries cross = ext_character(lv, x, N, Route::Crosscheck);
      CHECK(ext_character(lv, x, N) == cross);
      CHECK(assemble(lv, decompose_ext(lv, x), N) == cross);
    }
  }
  SUBCASE("D with s = v-1 is the C module at mu - k") {
    Level lv(4, 3);
    const Q N(12);
    for (long r = 1; r < 4; ++r) {
      Q mu = lv.lambda(r, 2);
      CHECK(ext_character(lv, ext_canonical(lv, D_label(mu, r, 2)), N) ==
            ext_character(lv, ext_canonical(lv, C_label(mu - lv.k(), 4 - r)), N));
    }
  }
}

TEST_CASE("enumeration") {
  auto count = [](const Level& lv) {
    std::array<int, 3> c{0, 0, 0};
    for (const auto& x : enumerate_modules(lv)) c[int(x.kind)]++;
    return c;
  };
  CHECK(count(Level(4, 3)) == std::array<int, 3>{6, 6, 24});
  CHECK(count(Level(3, 2)) == std::array<int, 3>{2, 0, 2});
  std::vector<Q> weights;
  Level half(3, 2);
  for (const auto& x : enumerate_modules(half)) weights.push_back(ext_ground_weight(half, x));
  std::sort(weights.begin(), weights.end(), QLess{});
  CHECK(weights == std::vector<Q>{q_of(-1, 8), Q(0), q_of(3, 8), Q(1)});
  for (const auto& x : enumerate_modules(Level(4, 3))) CHECK(ext_canonical(Level(4, 3), x) == x);
}

TEST_CASE("orbit ground weights at k = -2/3") {
  Level lv(4, 3);
  CHECK(orbit_ground_weight(lv, C_label(Q(0), 1)) == 0);
  CHECK(orbit_ground_weight(lv, D_label(q_of(2, 3), 1, 1)) == q_of(1, 2));
  CHECK(orbit_ground_weight(lv, E_label(Q(0), 1, 1)) == q_of(-1, 6));
  CHECK(simple_currents(lv).size() == 4);
}

TEST_CASE("B_k and its size") {
  auto mus = [](const Level& lv) {
    std::vector<std::pair<Q, long>> out;
    for (const auto& e : basis_Bk(lv)) out.emplace_back(e.mu, e.r);
    return out;
  };
  using V = std::vector<std::pair<Q, long>>;
  CHECK(mus(Level(3, 2)) == V{{Q(0), 1}});
  CHECK(mus(Level(4, 3)) == V{{Q(0), 1}, {Q(2), 1}, {Q(1), 2}});
  CHECK(mus(Level(2, 3)) == V{{Q(0), 1}, {Q(2), 1}});
  for (long v = 2; v < 30; ++v)
    for (long u = 2; u < 2 * v && u + v <= 30; ++u)
      if (gcd_l(u, v) == 1) {
        Level lv(u, v);
        CHECK_MESSAGE(Q(long(basis_Bk(lv).size())) == dim_bound(lv), lv.describe());
      }
  CHECK(gamma_rank(Level(4, 3), Q(20)) == 3);
  CHECK(gamma_rank(Level(3, 2), Q(20)) == 1);
}

TEST_CASE("S matrices") {
  for (auto [u, v] : kLevels) {
    Level lv(u, v);
    const auto typ = smatrix_typ(lv);
    REQUIRE(typ.size() == size_t(lv.p() + 1));
    CHECK(near(typ[0][0], sqrt(Real(1) / Real(2 * lv.p()))));
    CHECK(smatrix_theta(lv).size() == size_t(lv.p() - 1));
    // both act on even (odd) theta functions, so square to one
    const auto th = smatrix_theta(lv);
    for (const auto* m : {&typ, &th}) {
      const auto& a = *m;
      for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) {
          Real sum(0);
          for (size_t l = 0; l < a.size(); ++l) sum += a[i][l] * a[l][j];
          CHECK(near(sum, Real(i == j ? 1 : 0)));
        }
    }
  }
  for (GammaTable t : {GammaTable::Stated, GammaTable::OrbitCount}) {
    auto g = smatrix_gamma(Level(3, 2), t);
    REQUIRE(g.size() == 1);
    CHECK(near(g[0][0], Real(1)));
  }
}

TEST_CASE("T exponents") {
  Level half(3, 2);
  CHECK(gamma_t_exponent(half, Q(0), 1) == q_of(1, 12));
  for (auto [u, v] : kLevels) {
    Level lv(u, v);
    const Q N(20);
    for (const auto& e : basis_Bk(lv)) {
      Q t = gamma_t_exponent(lv, e.mu, e.r);
      CHECK(exponents_congruent(gamma(lv, e.mu, e.r, N), t));
      CHECK(is_integer(t - gamma_t_exponent(lv, e.mu + 2 * lv.w(), e.r)));
    }
    for (const Kac& c : kac_table(lv.minmod()))
      for (long m = 0; m <= lv.p(); ++m) {
        Q mu = q_of(m, v);
        CHECK(exponents_congruent(std_char(lv, mu, c.r, c.s, N), std_t_exponent(lv, mu, c.r, c.s)));
      }
  }
}

TEST_CASE("extended fusion is the reduced coset product") {
  Level lv(4, 3);
  auto xs = enumerate_modules(lv);
  for (size_t i = 0; i < xs.size(); i += 2)
    for (size_t j = 0; j < xs.size(); j += 3) {
      CosetElement e = gr_fuse_ext(lv, xs[i], xs[j]);
      CHECK(e.same_class(reduce_ext(lv, gr_fuse(lv, xs[i], xs[j]))));
      for (const auto& [z, n] : e.terms) {
        CHECK(lifts(lv, z));
        CHECK(ext_canonical(lv, z) == z);
      }
    }
  CosetElement unit;
  unit.add(C_label(Q(0), 1), 1);
  for (const auto& x : xs) {
    CosetElement one;
    one.add(x, 1);
    CHECK(gr_fuse_ext(lv, unit, one).same_class(reduce_ext(lv, coset_class(lv, x))));
  }
}
