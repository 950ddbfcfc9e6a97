#include <gtest/gtest.h>

#include "idealis/classify.hpp"
#include "idealis/theorems.hpp"

using namespace idealis;

namespace {

const std::vector<RingSpec>& matrix() {
  static const std::vector<RingSpec> rings = matrix_rings(SuiteConfig{});
  return rings;
}

bool prime_power_or_two(Natural a) { return detail::omega_by_trial_division(a) <= 2; }

}  // namespace

TEST(Properties, ImplicationLatticeOnOracleVerdicts) {
  for (const auto& ring : matrix()) {
    const IdealTable t(ring);
    for (std::size_t i = 1; i < t.size(); ++i) {
      const auto c = classify_oracle(t, i);
      for (const auto& imp : kImplications) {
        ASSERT_TRUE(!c[imp.from] || c[imp.to])
            << format_ring(ring) << " " << format_ideal(t.ideal(i)) << " " << flag_name(imp.from) << " => " << flag_name(imp.to);
      }
    }
  }
}

TEST(Properties, ImplicationLatticeOnElementLevelVerdicts) {
  // Same implications restricted to predicates with an element-level check,
  // so the representative reduction is not involved.
  const Predicate p[] = {Predicate::Prime, Predicate::Primary, Predicate::TwoAbsorbing, Predicate::TwoAbsorbingPrimary};
  for (const auto& ring : matrix()) {
    if (*element_count(ring) > kElementLevelMaxElements) continue;
    for (const auto& I : enumerate_ideals(ring, kDefaultMaxIdeals)) {
      if (!is_proper(I)) continue;
      bool v[4];
      for (int k = 0; k < 4; ++k) v[k] = element_level_bf(I, p[k]).holds;
      ASSERT_TRUE(!v[0] || v[1]) << format_ring(ring) << " " << format_ideal(I);
      ASSERT_TRUE(!v[1] || v[3]) << format_ring(ring) << " " << format_ideal(I);
      ASSERT_TRUE(!v[2] || v[3]) << format_ring(ring) << " " << format_ideal(I);
    }
  }
}

TEST(Properties, ZeroIdealRemark) {
  for (const auto& ring : matrix()) {
    const IdealTable t(ring);
    ASSERT_EQ(is_2_irreducible_bf(t, t.zero()).holds, is_strongly_2_irreducible_bf(t, t.zero()).holds) << format_ring(ring);
  }
}

TEST(Properties, UfdCriterionByTransferOracle) {
  const RingSpec Z(Integers{});
  for (Natural a = 2; a <= 1000; ++a) {
    const Ideal I = make_ideal(Z, {a});
    const RingSpec q(make_integers_mod(a));
    const IdealTable t(q);
    const bool ssi = is_singly_strongly_2_irreducible_bf(t, t.zero()).holds;
    ASSERT_EQ(ssi, prime_power_or_two(a)) << a;
    ASSERT_EQ(classify(I)[Predicate::SinglyStronglyTwoIrreducible], ssi) << a;
  }
}

TEST(Properties, ReportsAreReproducible) {
  SuiteConfig c;
  c.max_n = 30;
  c.extra_moduli.clear();
  c.gf2_max_deg = 3;
  c.gf3_max_deg = 2;
  c.triple_cover_max_n = 30;
  c.comaximal_max_n = 30;
  c.pid_max = 50;
  c.ufd_max = 100;
  c.ufd_transfer_max = 30;
  const auto a = run_suite(c);
  const auto b = run_suite(c);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].theorem_id, b[i].theorem_id);
    EXPECT_EQ(a[i].cases, b[i].cases);
    EXPECT_EQ(a[i].status, b[i].status);
    EXPECT_EQ(a[i].rings_tested, b[i].rings_tested);
  }
}

TEST(Properties, CasesCheckedBoundedByTupleSpace) {
  for (const auto& ring : matrix()) {
    const IdealTable t(ring);
    const std::uint64_t n = t.size();
    for (std::size_t i = 1; i < t.size(); ++i) {
      for (Predicate p : kAllPredicates) {
        const auto r = evaluate_bf(t, i, p);
        ASSERT_GE(r.cases_checked, 1u);
        ASSERT_LE(r.cases_checked, n * n * n);
      }
    }
  }
}
