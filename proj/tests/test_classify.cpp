#include <gtest/gtest.h>

#include "idealis/classify.hpp"
#include "idealis/parse.hpp"
#include "idealis/theorems.hpp"

using namespace idealis;

namespace {

Classification classify_text(const char* ring, const char* ideal, const ClassifyOptions& opt = {}) {
  const RingSpec r = parse_ring(ring);
  return classify(parse_ideal(r, ideal), opt);
}

std::string rule_of(const Classification& c, Predicate p) { return c.provenance[predicate_index(p)].rule; }
ProvenanceKind kind_of(const Classification& c, Predicate p) { return c.provenance[predicate_index(p)].kind; }

}  // namespace

TEST(ClassifyPid, SixZ) {
  const auto c = classify_text("Z", "(6)");
  EXPECT_TRUE(c[Predicate::StronglyTwoIrreducible]);
  EXPECT_TRUE(c[Predicate::TwoIrreducible]);
  EXPECT_FALSE(c[Predicate::StronglyIrreducible]);
  EXPECT_FALSE(c[Predicate::Irreducible]);
  EXPECT_FALSE(c[Predicate::Prime]);
  EXPECT_TRUE(c[Predicate::Radical]);
  EXPECT_TRUE(c[Predicate::TwoAbsorbing]);
  EXPECT_TRUE(c[Predicate::TwoAbsorbingPrimary]);
  EXPECT_EQ(kind_of(c, Predicate::StronglyTwoIrreducible), ProvenanceKind::Structural);
  EXPECT_EQ(rule_of(c, Predicate::StronglyTwoIrreducible), "pid-at-most-two-prime-powers");
}

TEST(ClassifyPid, PrimePowerAndThreePrimes) {
  const auto c8 = classify_text("Z", "(8)");
  EXPECT_TRUE(c8[Predicate::Primary]);
  EXPECT_TRUE(c8[Predicate::StronglyIrreducible]);
  EXPECT_FALSE(c8[Predicate::Prime]);
  EXPECT_FALSE(c8[Predicate::Radical]);
  EXPECT_FALSE(c8[Predicate::TwoAbsorbing]);
  EXPECT_EQ(kind_of(c8, Predicate::TwoAbsorbing), ProvenanceKind::TransferOracle);
  EXPECT_TRUE(c8[Predicate::TwoAbsorbingPrimary]);
  const auto c30 = classify_text("Z", "(30)");
  EXPECT_FALSE(c30[Predicate::TwoIrreducible]);
  EXPECT_FALSE(c30[Predicate::StronglyTwoIrreducible]);
  EXPECT_FALSE(c30[Predicate::TwoAbsorbing]);
  EXPECT_FALSE(c30[Predicate::TwoAbsorbingPrimary]);
  EXPECT_TRUE(c30[Predicate::Radical]);
  const auto c12 = classify_text("Z", "(12)");
  EXPECT_TRUE(c12[Predicate::StronglyTwoIrreducible]);
  EXPECT_TRUE(c12[Predicate::TwoAbsorbingPrimary]);
  EXPECT_FALSE(c12[Predicate::TwoAbsorbing]);
}

TEST(ClassifyPid, ZeroIdealIsPrime) {
  const auto c = classify_text("Z", "(0)");
  for (Predicate p : kAllPredicates) {
    EXPECT_TRUE(c[p]) << flag_name(p);
    EXPECT_EQ(rule_of(c, p), "domain-zero-ideal-prime");
  }
  const auto g = classify_text("GF(3)[x]", "(0)");
  for (Predicate p : kAllPredicates) EXPECT_TRUE(g[p]);
}

TEST(ClassifyPid, WholeRingRejected) {
  EXPECT_THROW(classify_text("Z", "(1)"), NotProperError);
  EXPECT_THROW(classify_text("Z/12", "(5)"), NotProperError);
  EXPECT_THROW(classify_text("Z/4 x Z/9", "([1],[1])"), NotProperError);
}

TEST(ClassifyPid, Polynomials) {
  const auto c = classify_text("GF(2)[x]", "(x^3+x)");  // x (x+1)^2
  EXPECT_TRUE(c[Predicate::StronglyTwoIrreducible]);
  EXPECT_FALSE(c[Predicate::Radical]);
  EXPECT_FALSE(c[Predicate::TwoAbsorbing]);
  const auto d = classify_text("GF(2)[x]", "(x^2+x+1)");
  EXPECT_TRUE(d[Predicate::Prime]);
}

TEST(ClassifyPir, Examples) {
  const auto c = classify_text("Z/360", "(30)");
  EXPECT_FALSE(c[Predicate::TwoIrreducible]);
  EXPECT_TRUE(c[Predicate::Radical]);
  EXPECT_EQ(rule_of(c, Predicate::TwoIrreducible), "pir-at-most-two-components");
  const auto d = classify_text("Z/360", "(12)");
  EXPECT_TRUE(d[Predicate::StronglyTwoIrreducible]);
  EXPECT_FALSE(d[Predicate::Primary]);
  const auto z = classify_text("Z/30", "(0)");
  EXPECT_FALSE(z[Predicate::StronglyTwoIrreducible]);
  EXPECT_FALSE(z[Predicate::TwoAbsorbing]);
}

TEST(ClassifyPir, LimitMutationFlipsThreeComponentIdeals) {
  ClassifyOptions opt;
  opt.two_component_limit = 3;
  const auto c = classify_text("Z/30", "(0)", opt);
  EXPECT_TRUE(c[Predicate::TwoIrreducible]);
  EXPECT_FALSE(classify_oracle(parse_ideal(parse_ring("Z/30"), "(0)"))[Predicate::TwoIrreducible]);
}

TEST(ClassifyProduct, Examples) {
  const RingSpec r = parse_ring("Z/4 x Z/9");
  const auto a = classify(parse_ideal(r, "([2],[1])"));
  EXPECT_TRUE(a[Predicate::Prime]);
  EXPECT_EQ(rule_of(a, Predicate::Prime), "product-single-proper-component");
  const auto b = classify(parse_ideal(r, "([2],[3])"));
  EXPECT_FALSE(b[Predicate::Prime]);
  EXPECT_TRUE(b[Predicate::StronglyTwoIrreducible]);
  EXPECT_TRUE(b[Predicate::TwoAbsorbing]);
  const auto z = classify(parse_ideal(r, "([0],[0])"));
  EXPECT_TRUE(z[Predicate::StronglyTwoIrreducible]);
  EXPECT_FALSE(z[Predicate::Radical]);
  EXPECT_EQ(kind_of(z, Predicate::TwoAbsorbing), ProvenanceKind::Oracle);
  const RingSpec t = parse_ring("Z/2 x Z/3 x Z/5");
  EXPECT_FALSE(classify(parse_ideal(t, "([0],[0],[0])"))[Predicate::TwoIrreducible]);
  EXPECT_TRUE(classify(parse_ideal(t, "([0],[0],[1])"))[Predicate::TwoIrreducible]);
}

TEST(ClassifyProduct, InfiniteComponentUsesTransfer) {
  const RingSpec r = parse_ring("Z x Z/9");
  const auto c = classify(parse_ideal(r, "([4],[3])"));
  EXPECT_TRUE(c[Predicate::StronglyTwoIrreducible]);
  EXPECT_EQ(kind_of(c, Predicate::TwoAbsorbing), ProvenanceKind::TransferOracle);
  const auto o = classify_oracle(parse_ideal(r, "([4],[3])"));
  EXPECT_TRUE(c.same_verdicts(o));
}

TEST(TransferSurrogate, Shapes) {
  const RingSpec z = parse_ring("Z");
  auto [r1, i1] = detail::transfer_surrogate(parse_ideal(z, "(12)"));
  EXPECT_EQ(format_ring(r1), "Z/12");
  EXPECT_TRUE(is_zero(i1));
  auto [r0, i0] = detail::transfer_surrogate(parse_ideal(z, "(0)"));
  EXPECT_EQ(format_ring(r0), "Z/2");
  EXPECT_TRUE(is_zero(i0));
  const RingSpec g = parse_ring("GF(3)[x]");
  auto [r2, i2] = detail::transfer_surrogate(parse_ideal(g, "(x^2+1)"));
  EXPECT_EQ(format_ring(r2), "GF(3)[x]/(x^2+1)");
  EXPECT_TRUE(is_zero(i2));
  auto [r3, i3] = detail::transfer_surrogate(parse_ideal(parse_ring("Z x Z/4"), "([1],[2])"));
  EXPECT_EQ(format_ring(r3), "Z/2 x Z/4");
  EXPECT_EQ(format_ideal(i3), "([1],[2])");
}

TEST(Disagreements, ListsDifferingPredicates) {
  Classification a, b;
  b.set(Predicate::Radical, true, {});
  EXPECT_EQ(disagreements(a, b), (std::vector<Predicate>{Predicate::Radical}));
  EXPECT_TRUE(disagreements(a, a).empty());
}

// Properties

TEST(ClassifyProperties, StructuralEqualsOracleOnMatrix) {
  SuiteConfig cfg;
  std::size_t ideals = 0;
  for (const auto& ring : matrix_rings(cfg)) {
    const IdealTable t(ring);
    for (std::size_t i = 1; i < t.size(); ++i) {
      const auto s = classify(t.ideal(i));
      const auto o = classify_oracle(t, i);
      ASSERT_TRUE(disagreements(s, o).empty()) << format_ring(ring) << " " << format_ideal(t.ideal(i));
      ++ideals;
    }
  }
  EXPECT_GT(ideals, 900u);
}

TEST(ClassifyProperties, TransferSoundnessForDivisors) {
  // (d) in Z and d Z/n agree on the 2-irreducible predicates when d | n.
  const RingSpec Z(Integers{});
  for (Natural n = 2; n <= 120; ++n) {
    const RingSpec r(make_integers_mod(n));
    const IdealTable t(r);
    for (Natural d : divisors(n)) {
      if (d == 1) continue;
      const auto zc = classify(make_ideal(Z, {d}));
      const std::size_t idx = t.index_of(make_ideal(r, {d}));
      for (Predicate p : {Predicate::TwoIrreducible, Predicate::StronglyTwoIrreducible}) {
        ASSERT_EQ(zc[p], evaluate_bf(t, idx, p).holds) << "d=" << d << " n=" << n;
      }
    }
  }
}

TEST(ClassifyProperties, PidConsistencyUpTo1000) {
  const RingSpec Z(Integers{});
  for (Natural a = 2; a <= 1000; ++a) {
    const auto c = classify(make_ideal(Z, {a}));
    const std::size_t k = shape_of(a).distinct_prime_count;
    ASSERT_EQ(c[Predicate::TwoIrreducible], k <= 2) << a;
    ASSERT_EQ(c[Predicate::StronglyTwoIrreducible], c[Predicate::TwoIrreducible]) << a;
    ASSERT_EQ(c[Predicate::SinglyStronglyTwoIrreducible], c[Predicate::TwoIrreducible]) << a;
    ASSERT_EQ(c[Predicate::TwoAbsorbingPrimary], c[Predicate::TwoIrreducible]) << a;
    ASSERT_EQ(c[Predicate::Irreducible], k == 1) << a;
  }
}

TEST(ClassifyProperties, EveryPolyQuotientIdealAgreesWithOracleOverGF5) {
  for (const auto& ring : poly_quotients(5, 2)) {
    const IdealTable t(ring);
    for (std::size_t i = 1; i < t.size(); ++i) ASSERT_TRUE(classify(t.ideal(i)).same_verdicts(classify_oracle(t, i)));
  }
}
