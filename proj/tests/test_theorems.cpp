#include <gtest/gtest.h>

#include "idealis/theorems.hpp"

using namespace idealis;

namespace {

SuiteConfig small_config() {
  SuiteConfig c;
  c.max_n = 40;
  c.extra_moduli.clear();
  c.gf2_max_deg = 3;
  c.gf3_max_deg = 2;
  c.triple_cover_max_n = 40;
  c.comaximal_max_n = 60;
  c.pid_max = 80;
  c.ufd_max = 200;
  c.ufd_transfer_max = 60;
  return c;
}

void expect_pass(const CheckReport& r) {
  EXPECT_EQ(r.status, CheckStatus::Pass) << r.theorem_id << " " << r.error
                                         << (r.counterexample ? " " + r.counterexample->detail : std::string());
  EXPECT_GT(r.cases, 0u) << r.theorem_id;
}

}  // namespace

TEST(Families, Sizes) {
  EXPECT_EQ(integers_mod_range(2, 10).size(), 9u);
  EXPECT_EQ(poly_quotients(2, 2).size(), 2u + 4u);
  EXPECT_EQ(poly_quotients(3, 1).size(), 3u);
  SuiteConfig c;
  EXPECT_EQ(matrix_rings(c).size(), 119u + 2u + (2 + 4 + 8 + 16 + 32) + (3 + 9 + 27) + 4u);
}

TEST(Checks, EachPassesOnSmallConfig) {
  for (const auto& r : run_suite(small_config())) expect_pass(r);
}

TEST(Checks, RegistryOrderAndIds) {
  const auto ids = check_ids();
  ASSERT_EQ(ids.size(), 18u);
  EXPECT_EQ(ids.front(), "check_triple_cover_equivalence");
  EXPECT_EQ(run_suite(small_config(), {"check_radical_theorem"}).size(), 1u);
  EXPECT_THROW(run_suite(small_config(), {"bogus"}), DomainError);
}

TEST(Checks, EmptyFamilyIsAnError) {
  const CheckEntry e{"empty", [](const SuiteConfig&) { return check_radical_theorem({}); }};
  const auto r = run_check(e, SuiteConfig{});
  EXPECT_EQ(r.status, CheckStatus::Error);
  EXPECT_FALSE(r.error.empty());
}

TEST(Checks, NoApplicableRingIsAnError) {
  const auto r = check_vnr_equivalence({parse_ring("Z/4"), parse_ring("Z/9")});
  EXPECT_EQ(r.status, CheckStatus::Error);
  EXPECT_EQ(r.error, "no applicable cases");
  EXPECT_EQ(r.cases, 0u);
}

TEST(Checks, CapExceededBecomesError) {
  SuiteConfig c = small_config();
  c.classify.oracle.max_ideals = 4;
  const auto reports = run_suite(c, {"check_radical_theorem"});
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].status, CheckStatus::Error);
}

TEST(Checks, ProductTheoremRejectsNonProducts) {
  const CheckEntry e{"p", [](const SuiteConfig&) { return check_product_theorem({parse_ring("Z/6")}); }};
  EXPECT_EQ(run_check(e, SuiteConfig{}).status, CheckStatus::Error);
}

TEST(Checks, ComaximalReportsZ30) {
  const auto r = check_comaximal_primes(integers_mod_range(2, 40));
  expect_pass(r);
  EXPECT_NE(std::find(r.rings_tested.begin(), r.rings_tested.end(), parse_ring("Z/30")), r.rings_tested.end());
}

TEST(Mutation, StructuralAgreementFailsWithCounterexample) {
  SuiteConfig c = small_config();
  c.classify.two_component_limit = 3;
  const auto r = run_suite(c, {"check_structural_agreement"});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].status, CheckStatus::Fail);
  ASSERT_TRUE(r[0].counterexample.has_value());
  EXPECT_EQ(format_ring(r[0].counterexample->ring), "Z/30");
  ASSERT_EQ(r[0].counterexample->ideals.size(), 1u);
  EXPECT_EQ(format_ideal(r[0].counterexample->ideals[0]), "(0)");
}

TEST(Determinism, ThreadCountDoesNotChangeReports) {
  SuiteConfig a = small_config(), b = small_config();
  b.classify.oracle.threads = 4;
  const auto ra = run_suite(a), rb = run_suite(b);
  ASSERT_EQ(ra.size(), rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) {
    EXPECT_EQ(ra[i].status, rb[i].status);
    EXPECT_EQ(ra[i].cases, rb[i].cases);
    EXPECT_EQ(ra[i].rings_tested, rb[i].rings_tested);
  }
}

TEST(Pid, CorollaryAndDedekind) {
  expect_pass(check_pid_corollary(200));
  expect_pass(check_dedekind_theorem(100, 3));
  expect_pass(check_ufd_ssi_theory(1000, 200));
}

TEST(Pid, OmegaByTrialDivision) {
  EXPECT_EQ(detail::omega_by_trial_division(1), 0u);
  EXPECT_EQ(detail::omega_by_trial_division(360), 3u);
  EXPECT_EQ(detail::omega_by_trial_division(997), 1u);
}
