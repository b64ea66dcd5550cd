#include <doctest.h>

#include <random>

#include "pfc/error.hpp"
#include "pfc/highprec.hpp"
#include "pfc/json_io.hpp"
#include "pfc/qseries.hpp"

using namespace pfc;

namespace {

// prod_{n>=1} (1 - q^n) by repeated multiplication.
std::vector<long> euler_product(int n) {
  std::vector<long> c(n + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = n; i >= k; --i) c[i] -= c[i - k];
  return c;
}

std::vector<long> partitions(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = k; i <= n; ++i) p[i] += p[i - k];
  return p;
}

QSeries random_series(std::mt19937& rng, const Q& order) {
  std::uniform_int_distribution<int> num(-12, 12), coef(-5, 5), len(0, 8);
  SeriesBuilder b(order);
  int n = len(rng);
  for (int i = 0; i < n; ++i) b.add(q_of(num(rng), 6), Q(coef(rng)));
  return b.build();
}

}  // namespace

TEST_CASE("eta matches the Euler product") {
  const int n = 60;
  auto c = euler_product(n);
  QSeries e = eta(Q(n));
  for (int i = 0; i <= n - 1; ++i) CHECK(e.coefficient(q_of(1, 24) + i) == c[i]);
}

TEST_CASE("inverse eta counts partitions") {
  const int n = 80;
  auto p = partitions(n);
  QSeries e = inverse_eta(Q(n));
  for (int i = 0; i <= n - 1; ++i) CHECK(e.coefficient(Q(i) - q_of(1, 24)) == p[i]);
}

TEST_CASE("eta times its inverse is one to order 100") {
  QSeries prod = product_to(
      Q(100), q_of(1, 24), [](const Q& n) { return eta(n); }, q_of(-1, 24), [](const Q& n) { return inverse_eta(n); });
  CHECK(prod == QSeries::one(Q(100)));
  CHECK(eta(Q(100)).inverse().agrees_to(inverse_eta(Q(100)), Q(99)));
}

TEST_CASE("ring axioms on random truncated series") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    QSeries a = random_series(rng, Q(3)), b = random_series(rng, Q(3)), c = random_series(rng, Q(3));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    Q n = std::min({((a * b) * c).order(), (a * (b * c)).order()}, QLess());
    CHECK(((a * b) * c).agrees_to(a * (b * c), n));
    QSeries lhs = a * (b + c), rhs = a * b + a * c;
    Q m = std::min(lhs.order(), rhs.order(), QLess());
    CHECK(lhs.agrees_to(rhs, m));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("product orders follow the lower bounds") {
  // q^{-1} + 1 known to 2, times 1 + q known to 2: exact to 1.
  SeriesBuilder x(Q(2)), y(Q(2));
  x.add(Q(-1), Q(1));
  x.add(Q(0), Q(1));
  y.add(Q(0), Q(1));
  y.add(Q(1), Q(1));
  QSeries p = x.build() * y.build();
  CHECK(p.order() == 1);
  CHECK(p.coefficient(Q(0)) == 2);
  CHECK_THROWS_AS(p.at_order(Q(2)), Error);
}

TEST_CASE("shift moves terms and order together") {
  QSeries e = eta(Q(10)).shift(q_of(-1, 24));
  CHECK(e.valuation() == 0);
  CHECK(e.order() == Q(10) - q_of(1, 24));
}

TEST_CASE("eta at tau = i") {
  // eta(i) = Gamma(1/4) / (2 pi^{3/4}).
  Evaluation ev = evaluate(eta(Q(40)), Tau{Q(0), Q(1)}, 40);
  CHECK(to_decimal(ev.value.re, 18) == "0.768225422326056659");
  CHECK(boost::multiprecision::abs(ev.value.im) < Real("1e-100"));
  CHECK(ev.tail_bound < Real("1e-100"));
}

TEST_CASE("evaluation rejects the lower half plane") {
  CHECK_THROWS_AS(evaluate(eta(Q(5)), Tau{Q(0), Q(-1)}, 30), Error);
  CHECK_THROWS_AS(evaluate(eta(Q(5)), Tau{Q(0), Q(1)}, 200), Error);
}

TEST_CASE("JSON round trip") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    QSeries s = random_series(rng, q_of(7, 2));
    CHECK(series_from_json(series_to_json(s)) == s);
  }
  CHECK(series_from_json(series_to_json(inverse_eta(Q(30)))) == inverse_eta(Q(30)));
  CHECK_THROWS_AS(series_from_json(Json::parse(R"({"offset":"0"})")), Error);
}

TEST_CASE("rational helpers") {
  CHECK(parse_rational("-0.4") == q_of(-2, 5));
  CHECK(parse_rational("6/4") == q_of(3, 2));
  CHECK(mod_q(q_of(-1, 3), Q(2)) == q_of(5, 3));
  CHECK(congruent(q_of(7, 3), q_of(1, 3), Q(2)));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}
