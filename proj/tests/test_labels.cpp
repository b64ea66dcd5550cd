#include <doctest.h>

#include "pfc/error.hpp"
#include "pfc/labels.hpp"

using namespace pfc;

TEST_CASE("coset labels round trip") {
  const std::vector<CosetLabel> xs{C_label(Q(0), 1),
                                   C_label(Q(-4), 3),
                                   D_label(q_of(2, 3), 1, 1),
                                   E_label(q_of(-7, 3), 2, 1),
                                   {CosetKind::EstdPlus, q_of(1, 2), 1, 1},
                                   {CosetKind::EstdMinus, q_of(-3, 2), 2, 1}};
  for (const auto& x : xs) {
    CHECK(parse_coset_label(format_label(x)) == x);
    ParsedLabel p = parse_label(format_label(x));
    CHECK(p.space == LabelSpace::Coset);
    CHECK(p.coset == x);
  }
  CHECK(format_label(C_label(Q(0), 1)) == "C[0;1]");
  CHECK(format_label(D_label(q_of(2, 3), 1, 1)) == "D[2/3;1,1]");
  CHECK(parse_coset_label("  E[ -0.5 ; 1 , 1 ] ") == E_label(q_of(-1, 2), 1, 1));
}

TEST_CASE("affine labels round trip") {
  const std::vector<AffineLabel> xs{L_affine(1),          L_affine(2, -3),        Dplus_affine(1, 1, 1),
                                    Dminus_affine(2, 1),  E_affine(q_of(1, 3), 1, 1, 2),
                                    Estd_affine(true, 1, 2), Estd_affine(false, 3, 1, -1)};
  for (const auto& x : xs) {
    CHECK(parse_affine_label(format_label(x)) == x);
    ParsedLabel p = parse_label(format_label(x));
    CHECK(p.space == LabelSpace::Affine);
    CHECK(p.affine == x);
  }
  CHECK(format_label(L_affine(1)) == "sf^0(L[1])");
  CHECK(parse_label("D+[1,1]").affine == Dplus_affine(1, 1));
  CHECK(parse_label("Estd-[2,1]").affine == Estd_affine(false, 2, 1));
  // without a prefix E reads as a coset label
  CHECK(parse_label("E[1/3;1,1]").space == LabelSpace::Coset);
}

TEST_CASE("extended labels") {
  Level lv(4, 3);  // L = 4Z
  CHECK(parse_ext_label(lv, "B.C[6;1]") == C_label(Q(2), 1));
  CHECK(parse_ext_label(lv, "B.E[-1/3;1,1]") == E_label(q_of(11, 3), 1, 1));
  CHECK(format_ext_label(C_label(Q(0), 3)) == "B.C[0;3]");
  CHECK(parse_label("B.D[2/3;1,1]").space == LabelSpace::Extended);
  CHECK_THROWS_AS(parse_ext_label(lv, "C[0;1]"), Error);
}

TEST_CASE("malformed text") {
  for (const char* bad : {"", "C[0]", "C[0;1", "X[0;1]", "D[1;1]", "sf^(L[1])", "L[1,2]", "E[a;1,1]", "B.L[1]"}) {
    try {
      parse_label(bad);
      FAIL("accepted '", bad, "'");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
    }
  }
}

TEST_CASE("elements") {
  CosetElement e;
  CHECK(format_element(e) == "0");
  e.add(C_label(Q(0), 1), 2);
  e.add(E_label(q_of(1, 3), 1, 1), -1);
  const std::string s = format_element(e);
  CHECK(s.find("2*C[0;1]") != std::string::npos);
  CHECK(s.find("- E[1/3;1,1]") != std::string::npos);
  CHECK(format_element(e, true).find("B.C[0;1]") != std::string::npos);
  AffineElement a;
  a.add(L_affine(1, 1), 1);
  CHECK(format_element(a) == "sf^1(L[1])");
}
