#include <gtest/gtest.h>

#include "idealis/parse.hpp"
#include "idealis/theorems.hpp"

using namespace idealis;

TEST(ParseRing, Examples) {
  EXPECT_EQ(parse_ring("Z/12"), RingSpec(make_integers_mod(12)));
  EXPECT_EQ(parse_ring("GF(2)[x]/(x^2+x)"), RingSpec(make_poly_quotient(parse_poly("x^2+x", 2))));
  EXPECT_EQ(parse_ring("Z"), RingSpec(Integers{}));
  EXPECT_EQ(parse_ring("  GF(3)[x] "), RingSpec(make_poly_ring(3)));
  const RingSpec p = parse_ring("Z/4 x Z/9");
  ASSERT_EQ(p.arity(), 2u);
  EXPECT_EQ(p.component(1), BaseRing(make_integers_mod(9)));
  EXPECT_EQ(parse_ring("Z/2 x Z/3 x Z/5").arity(), 3u);
}

TEST(ParseRing, QuotientModulusMadeMonic) {
  EXPECT_EQ(parse_ring("GF(3)[x]/(2*x^2+1)"), parse_ring("GF(3)[x]/(x^2+2)"));
}

TEST(ParseRing, Errors) {
  EXPECT_THROW(parse_ring("GF(4)[x]"), ParseError);
  EXPECT_THROW(parse_ring("GF(101)[x]"), ParseError);
  EXPECT_THROW(parse_ring("Z/1"), ParseError);
  EXPECT_THROW(parse_ring("Z/"), ParseError);
  EXPECT_THROW(parse_ring("Q"), ParseError);
  EXPECT_THROW(parse_ring("Z/12 x"), ParseError);
  EXPECT_THROW(parse_ring("GF(2)[x]/(1)"), ParseError);
  EXPECT_THROW(parse_ring("Z/99999999999999999999"), ParseError);
}

TEST(ParseRing, ErrorCarriesPosition) {
  try {
    parse_ring("Z/12 x Q");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 7u);
  }
}

TEST(ParsePoly, Syntax) {
  EXPECT_EQ(format_poly(parse_poly("x^3+2*x+1", 3)), "x^3+2*x+1");
  EXPECT_EQ(format_poly(parse_poly("x^3+5*x+4", 3)), "x^3+2*x+1");
  EXPECT_EQ(format_poly(parse_poly("x-1", 3)), "x+2");
  EXPECT_EQ(format_poly(parse_poly("x+x", 2)), "0");
  EXPECT_EQ(format_poly(parse_poly("3", 5)), "3");
  EXPECT_THROW(parse_poly("x^", 2), ParseError);
  EXPECT_THROW(parse_poly("y", 2), ParseError);
  EXPECT_THROW(parse_poly("x++1", 2), ParseError);
}

TEST(ParseIdeal, Examples) {
  const RingSpec p = parse_ring("Z/4 x Z/9");
  EXPECT_EQ(parse_ideal(p, "([2],[3])"), make_ideal(p, {Natural{2}, Natural{3}}));
  EXPECT_EQ(parse_ideal(p, "([2,3])"), make_ideal(p, {Natural{2}, Natural{3}}));
  EXPECT_EQ(parse_ideal(p, "([2,0],[0,3])"), make_ideal(p, {Natural{2}, Natural{3}}));
  const RingSpec z = parse_ring("Z");
  EXPECT_EQ(parse_ideal(z, "(12, 18)"), make_ideal(z, {Natural{6}}));
  EXPECT_EQ(parse_ideal(z, "(-6)"), make_ideal(z, {Natural{6}}));
  EXPECT_EQ(parse_ideal(z, "(0)"), zero_ideal(z));
  const RingSpec z12 = parse_ring("Z/12");
  EXPECT_EQ(parse_ideal(z12, "(8)"), make_ideal(z12, {Natural{4}}));
  EXPECT_EQ(parse_ideal(z12, "(0)"), zero_ideal(z12));
  const RingSpec g = parse_ring("GF(2)[x]/(x^3+x)");
  EXPECT_EQ(parse_ideal(g, "(x^2+x)"), make_ideal(g, {parse_poly("x^2+x", 2)}));
  EXPECT_EQ(parse_ideal(g, "(x^3)"), make_ideal(g, {parse_poly("x", 2)}));
}

TEST(ParseIdeal, Errors) {
  const RingSpec p = parse_ring("Z/4 x Z/9");
  EXPECT_THROW(parse_ideal(p, "([2],[3],[1])"), ParseError);
  EXPECT_THROW(parse_ideal(p, "(2)"), ParseError);
  EXPECT_THROW(parse_ideal(p, "([2],[x])"), ParseError);
  EXPECT_THROW(parse_ideal(p, "([2],[3]"), ParseError);
  EXPECT_THROW(parse_ideal(parse_ring("Z"), "6"), ParseError);
  EXPECT_THROW(parse_ideal(parse_ring("Z"), "(6) junk"), ParseError);
  EXPECT_THROW(parse_ideal(parse_ring("Z"), "()"), ParseError);
}

TEST(ParseElement, Products) {
  const RingSpec p = parse_ring("Z/4 x GF(2)[x]/(x^2)");
  const Element x = parse_element(p, "[7, x^3+x+1]");
  EXPECT_EQ(format_element(p, x), "[3,x+1]");
  EXPECT_THROW(parse_element(p, "[1]"), ParseError);
  EXPECT_THROW(parse_element(p, "[1,1,1]"), ParseError);
}

TEST(Format, RingsAndIdeals) {
  EXPECT_EQ(format_ring(parse_ring("Z/4   x  GF(2)[x]/(x^2+1)")), "Z/4 x GF(2)[x]/(x^2+1)");
  const RingSpec p = parse_ring("Z/4 x Z/9");
  EXPECT_EQ(format_ideal(make_ideal(p, {Natural{2}, Natural{9}})), "([2],[0])");
  EXPECT_EQ(format_ideal(zero_ideal(parse_ring("Z/30"))), "(0)");
}

TEST(Format, RoundTripOnAllMatrixIdeals) {
  SuiteConfig c;
  for (const auto& ring : matrix_rings(c)) {
    ASSERT_EQ(parse_ring(format_ring(ring)), ring);
    for (const auto& a : enumerate_ideals(ring, 512)) ASSERT_EQ(parse_ideal(ring, format_ideal(a)), a) << format_ideal(a);
    if (*element_count(ring) <= 64) {
      for (const auto& x : enumerate_elements(ring, 64)) ASSERT_EQ(parse_element(ring, format_element(ring, x)), x);
    }
  }
}
