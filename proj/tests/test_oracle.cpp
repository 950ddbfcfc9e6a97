#include <gtest/gtest.h>

#include "idealis/oracle.hpp"
#include "idealis/parse.hpp"
#include "idealis/theorems.hpp"

using namespace idealis;

namespace {

struct Case {
  RingSpec ring;
  IdealTable table;
  std::size_t index;

  Case(const char* ring_text, const char* ideal_text, unsigned threads = 1)
      : ring(parse_ring(ring_text)), table(ring, OracleOptions{kDefaultMaxIdeals, threads}),
        index(table.index_of(parse_ideal(ring, ideal_text))) {}

  PredicateResult run(Predicate p) const { return evaluate_bf(table, index, p); }
  const Ideal& ideal() const { return table.ideal(index); }
};

std::vector<std::string> elements(const Case& c, const PredicateResult& r) {
  std::vector<std::string> out;
  for (const auto& e : r.witness->elements) out.push_back(format_element(c.ring, e));
  return out;
}

std::vector<std::string> ideals(const PredicateResult& r) {
  std::vector<std::string> out;
  for (const auto& i : r.witness->ideals) out.push_back(format_ideal(i));
  return out;
}

using V = std::vector<std::string>;

}  // namespace

TEST(OracleTable, LatticeMatchesRingOperations) {
  const RingSpec r = parse_ring("Z/4 x GF(2)[x]/(x^2+x)");
  const IdealTable t(r);
  ASSERT_EQ(t.size(), 12u);
  EXPECT_TRUE(is_whole(t.ideal(t.whole())));
  EXPECT_TRUE(is_zero(t.ideal(t.zero())));
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_EQ(t.ideal(t.radical(i)), ideal_radical(t.ideal(i)));
    for (std::size_t j = 0; j < t.size(); ++j) {
      EXPECT_EQ(t.ideal(t.meet(i, j)), ideal_intersect(t.ideal(i), t.ideal(j)));
      EXPECT_EQ(t.ideal(t.join(i, j)), ideal_sum(t.ideal(i), t.ideal(j)));
      EXPECT_EQ(t.ideal(t.product(i, j)), ideal_mul(t.ideal(i), t.ideal(j)));
      EXPECT_EQ(t.leq(i, j), ideal_leq(t.ideal(i), t.ideal(j)));
    }
  }
}

TEST(OracleTable, Errors) {
  EXPECT_THROW(IdealTable(parse_ring("Z")), InfiniteRingError);
  EXPECT_THROW(IdealTable(parse_ring("Z/360"), OracleOptions{10, 1}), CapExceededError);
  const IdealTable t(parse_ring("Z/12"));
  EXPECT_THROW(t.index_of(zero_ideal(parse_ring("Z/6"))), RingMismatchError);
  EXPECT_THROW(is_prime_bf(t, t.whole()), NotProperError);
}

TEST(Prime, Examples) {
  EXPECT_TRUE(Case("Z/12", "(2)").run(Predicate::Prime).holds);
  const Case c("Z/12", "(4)");
  const auto r = c.run(Predicate::Prime);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(elements(c, r), (V{"2", "2"}));
  const Case z6("Z/6", "(0)");
  const auto r6 = z6.run(Predicate::Prime);
  ASSERT_FALSE(r6.holds);
  EXPECT_EQ(elements(z6, r6), (V{"2", "3"}));
  EXPECT_EQ(r6.witness->failed_disjuncts, (V{"a in I", "b in I"}));
}

TEST(Primary, Examples) {
  EXPECT_TRUE(Case("Z/12", "(4)").run(Predicate::Primary).holds);
  EXPECT_FALSE(Case("Z/12", "(6)").run(Predicate::Primary).holds);
  const IdealTable t(parse_ring("Z/12"));
  EXPECT_THROW(is_primary_bf(t, t.whole()), NotProperError);
}

TEST(Radical, Examples) {
  EXPECT_TRUE(Case("Z/12", "(6)").run(Predicate::Radical).holds);
  const Case c("Z/12", "(4)");
  const auto r = c.run(Predicate::Radical);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(elements(c, r), (V{"2"}));
  EXPECT_TRUE(Case("Z/4", "(2)").run(Predicate::Radical).holds);
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(Case("Z/12", "(4)").run(Predicate::Irreducible).holds);
  const auto r = Case("Z/12", "(6)").run(Predicate::Irreducible);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(ideals(r), (V{"(2)", "(3)"}));
  EXPECT_TRUE(Case("Z/4", "(0)").run(Predicate::Irreducible).holds);
}

TEST(StronglyIrreducible, Examples) {
  EXPECT_FALSE(Case("Z/12", "(6)").run(Predicate::StronglyIrreducible).holds);
  EXPECT_TRUE(Case("Z/12", "(4)").run(Predicate::StronglyIrreducible).holds);
  for (const char* p : {"(2)", "(3)"}) EXPECT_TRUE(Case("Z/12", p).run(Predicate::StronglyIrreducible).holds);
}

TEST(TwoIrreducible, ZeroOfZ30) {
  const Case c("Z/30", "(0)");
  const auto r = c.run(Predicate::TwoIrreducible);
  ASSERT_FALSE(r.holds);
  // First triple in enumeration order.
  EXPECT_EQ(ideals(r), (V{"(2)", "(3)", "(5)"}));
  EXPECT_TRUE(witness_replays(c.ideal(), *r.witness));
  // (6),(10),(15) is not a witness: (6) meet (10) is already zero.
  Witness alt = *r.witness;
  alt.ideals = {parse_ideal(c.ring, "(6)"), parse_ideal(c.ring, "(10)"), parse_ideal(c.ring, "(15)")};
  EXPECT_EQ(ideal_intersect(alt.ideals[0], alt.ideals[1]), c.ideal());
  EXPECT_FALSE(witness_replays(c.ideal(), alt));
}

TEST(TwoIrreducible, Examples) {
  EXPECT_TRUE(Case("Z/12", "(6)").run(Predicate::TwoIrreducible).holds);
  EXPECT_TRUE(Case("Z/12", "(4)").run(Predicate::TwoIrreducible).holds);
}

TEST(StronglyTwoIrreducible, Examples) {
  EXPECT_FALSE(Case("Z/30", "(0)").run(Predicate::StronglyTwoIrreducible).holds);
  EXPECT_TRUE(Case("Z/6", "(0)").run(Predicate::StronglyTwoIrreducible).holds);
  EXPECT_TRUE(Case("Z/12", "(6)").run(Predicate::StronglyTwoIrreducible).holds);
}

TEST(SinglyStronglyTwoIrreducible, Examples) {
  const Case c("Z/30", "(0)");
  const auto r = c.run(Predicate::SinglyStronglyTwoIrreducible);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness->kind, WitnessKind::ElementTriple);
  EXPECT_TRUE(Case("Z/8", "(2)").run(Predicate::SinglyStronglyTwoIrreducible).holds);
}

TEST(TwoAbsorbing, Examples) {
  EXPECT_TRUE(Case("Z/12", "(6)").run(Predicate::TwoAbsorbing).holds);
  const Case c("Z/30", "(0)");
  const auto r = c.run(Predicate::TwoAbsorbing);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(elements(c, r), (V{"2", "3", "5"}));
  const Case d("Z/16", "(8)");
  const auto r16 = d.run(Predicate::TwoAbsorbing);
  ASSERT_FALSE(r16.holds);
  EXPECT_EQ(elements(d, r16), (V{"2", "2", "2"}));
  EXPECT_EQ(r16.witness->failed_disjuncts, (V{"ab in I", "ac in I", "bc in I"}));
}

TEST(TwoAbsorbingPrimary, Examples) {
  EXPECT_TRUE(Case("Z/16", "(8)").run(Predicate::TwoAbsorbingPrimary).holds);
  const Case c("Z/30", "(0)");
  const auto r = c.run(Predicate::TwoAbsorbingPrimary);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(elements(c, r), (V{"2", "3", "5"}));
  EXPECT_TRUE(Case("Z/12", "(6)").run(Predicate::TwoAbsorbingPrimary).holds);
}

TEST(TripleCover, Examples) {
  const Case a("Z/12", "(6)");
  EXPECT_TRUE(triple_cover_condition_bf(a.table, a.index).holds);
  const Case b("Z/30", "(0)");
  EXPECT_FALSE(triple_cover_condition_bf(b.table, b.index).holds);
  EXPECT_THROW(triple_cover_condition_bf(a.table, a.table.whole()), NotProperError);
}

TEST(RingLevel, ArithmeticalAndRegular) {
  EXPECT_TRUE(is_arithmetical_bf(IdealTable(parse_ring("Z/12"))).holds);
  EXPECT_TRUE(is_arithmetical_bf(IdealTable(parse_ring("GF(2)[x]/(x^3)"))).holds);
  EXPECT_TRUE(is_arithmetical_bf(IdealTable(parse_ring("Z/4 x Z/9"))).holds);
  EXPECT_TRUE(is_von_neumann_regular_bf(IdealTable(parse_ring("Z/6"))).holds);
  EXPECT_TRUE(is_von_neumann_regular_bf(IdealTable(parse_ring("Z/30"))).holds);
  const auto r = is_von_neumann_regular_bf(IdealTable(parse_ring("Z/4")));
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(ideals(r), (V{"(2)", "(2)"}));
}

TEST(NPrimary, Examples) {
  const Case a("Z/12", "(6)");
  const auto dec = find_primary_decomposition(a.table, a.index, 2);
  ASSERT_TRUE(dec.has_value());
  EXPECT_EQ(format_ideal(a.table.ideal((*dec)[0])), "(2)");
  EXPECT_EQ(format_ideal(a.table.ideal((*dec)[1])), "(3)");
  EXPECT_TRUE(is_n_primary_bf(a.table, a.index, 2).holds);
  const Case b("Z/30", "(0)");
  const auto r = is_n_primary_bf(b.table, b.index, 2);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness->kind, WitnessKind::Exhausted);
  EXPECT_TRUE(witness_replays(b.ideal(), *r.witness));
  EXPECT_TRUE(is_n_primary_bf(b.table, b.index, 3).holds);
  const Case c("Z/16", "(4)");
  EXPECT_TRUE(is_n_primary_bf(c.table, c.index, 1).holds);
  EXPECT_THROW(is_n_primary_bf(c.table, c.index, 0), DomainError);
}

TEST(IrreducibleDecomposition, Examples) {
  const Case a("Z/12", "(6)");
  const auto d = find_irreducible_decomposition(a.table, a.index, 2);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(format_ideal((*d)[0]), "(2)");
  EXPECT_EQ(format_ideal((*d)[1]), "(3)");
  EXPECT_FALSE(find_irreducible_decomposition(a.table, a.index, 1).has_value());
  const Case b("Z/12", "(4)");
  const auto e = find_irreducible_decomposition(b.table, b.index, 1);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->size(), 1u);
  const Case c("Z/30", "(0)");
  EXPECT_FALSE(find_irreducible_decomposition(c.table, c.index, 2).has_value());
}

TEST(CasesChecked, CountsPositionOrFullSpace) {
  const Case a("Z/12", "(6)");
  EXPECT_EQ(a.run(Predicate::TwoIrreducible).cases_checked, 6u * 6u * 6u);
  // (2)(3) at position 1*6 + 2 in pair order.
  EXPECT_EQ(a.run(Predicate::Prime).cases_checked, 9u);
}

TEST(Threads, SameWitnessAndCounts) {
  // Large enough that the search is split across threads.
  const RingSpec r = parse_ring("Z/2 x Z/3 x Z/5 x Z/7 x Z/11 x Z/13 x Z/4");
  const IdealTable one(r, OracleOptions{kDefaultMaxIdeals, 1});
  const IdealTable many(r, OracleOptions{kDefaultMaxIdeals, 4});
  ASSERT_EQ(one.size(), 192u);
  for (std::size_t i = 1; i < one.size(); i += 17) {
    for (Predicate p : kAllPredicates) {
      const auto a = evaluate_bf(one, i, p);
      const auto b = evaluate_bf(many, i, p);
      ASSERT_EQ(a.holds, b.holds);
      ASSERT_EQ(a.cases_checked, b.cases_checked);
      if (a.witness) {
        ASSERT_EQ(a.witness->elements, b.witness->elements);
        ASSERT_EQ(a.witness->ideals, b.witness->ideals);
      }
    }
  }
}

TEST(WitnessReplay, RejectsNonWitness) {
  const Case c("Z/30", "(0)");
  Witness w;
  w.condition = "2-absorbing";
  w.kind = WitnessKind::ElementTriple;
  w.elements = {parse_element(c.ring, "2"), parse_element(c.ring, "3"), parse_element(c.ring, "4")};
  EXPECT_FALSE(witness_replays(c.ideal(), w));
  w.condition = "no-such-condition";
  EXPECT_FALSE(witness_replays(c.ideal(), w));
}

// Properties

TEST(OracleProperties, EveryWitnessReplays) {
  SuiteConfig cfg;
  for (const auto& ring : matrix_rings(cfg)) {
    const IdealTable t(ring);
    for (std::size_t i = 1; i < t.size(); ++i) {
      for (Predicate p : kAllPredicates) {
        const auto r = evaluate_bf(t, i, p);
        ASSERT_EQ(r.holds, !r.witness.has_value());
        if (r.witness) { ASSERT_TRUE(witness_replays(t.ideal(i), *r.witness)) << format_ring(ring) << " " << flag_name(p); }
      }
      const auto tc = triple_cover_condition_bf(t, i);
      if (tc.witness) { ASSERT_TRUE(witness_replays(t.ideal(i), *tc.witness)); }
    }
    for (const auto& r : {is_arithmetical_bf(t), is_von_neumann_regular_bf(t)}) {
      if (r.witness) { ASSERT_TRUE(witness_replays(t.ideal(0), *r.witness)); }
    }
  }
}

TEST(OracleProperties, RepresentativeReductionMatchesElementLevel) {
  SuiteConfig cfg;
  const Predicate element_quantified[] = {Predicate::Prime,        Predicate::Primary,
                                          Predicate::Radical,      Predicate::StronglyIrreducible,
                                          Predicate::SinglyStronglyTwoIrreducible, Predicate::TwoAbsorbing,
                                          Predicate::TwoAbsorbingPrimary};
  std::size_t rings = 0;
  for (const auto& ring : matrix_rings(cfg)) {
    if (*element_count(ring) > kElementLevelMaxElements) continue;
    ++rings;
    const IdealTable t(ring);
    for (std::size_t i = 1; i < t.size(); ++i) {
      for (Predicate p : element_quantified) {
        ASSERT_EQ(element_level_bf(t.ideal(i), p).holds, evaluate_bf(t, i, p).holds)
            << format_ring(ring) << " " << format_ideal(t.ideal(i)) << " " << flag_name(p);
      }
      ASSERT_EQ(element_level_triple_cover(t.ideal(i)).holds, triple_cover_condition_bf(t, i).holds);
    }
  }
  EXPECT_GT(rings, 150u);
}
