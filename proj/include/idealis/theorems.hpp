#pragma once

// Executable checks of the ideal-theoretic statements over ring families.
// A failing check means an implementation bug.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "idealis/classify.hpp"
#include "idealis/error.hpp"
#include "idealis/oracle.hpp"
#include "idealis/parse.hpp"
#include "idealis/ring.hpp"

namespace idealis {

enum class CheckStatus { Pass, Fail, Error };

inline std::string_view check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Error: return "error";
  }
  return "";
}

struct Counterexample {
  RingSpec ring;
  std::vector<Ideal> ideals;
  std::optional<Witness> witness;
  std::string detail;
};

struct CheckReport {
  std::string theorem_id;
  std::vector<RingSpec> rings_tested;
  std::uint64_t cases = 0;
  CheckStatus status = CheckStatus::Pass;
  std::optional<Counterexample> counterexample;
  std::string error;  // set when status is Error
};

namespace detail {

class CheckRun {
 public:
  explicit CheckRun(std::string id) { report_.theorem_id = std::move(id); }

  bool failed() const { return report_.counterexample.has_value(); }
  void count(std::uint64_t n = 1) { report_.cases += n; }

  void tested(const RingSpec& r) {
    if (report_.rings_tested.empty() || !(report_.rings_tested.back() == r)) report_.rings_tested.push_back(r);
  }

  void fail(const RingSpec& ring, std::vector<Ideal> ideals, std::string detail, std::optional<Witness> w = std::nullopt) {
    if (failed()) return;
    report_.counterexample = Counterexample{ring, std::move(ideals), std::move(w), std::move(detail)};
  }

  CheckReport finish() {
    if (failed()) {
      report_.status = CheckStatus::Fail;
    } else if (report_.cases == 0) {
      report_.status = CheckStatus::Error;
      report_.error = "no applicable cases";
    } else {
      report_.status = CheckStatus::Pass;
    }
    return std::move(report_);
  }

 private:
  CheckReport report_;
};

inline void require_family(const std::vector<RingSpec>& family) {
  if (family.empty()) throw DomainError("empty ring family");
}

inline std::string verdict(bool b) { return b ? "true" : "false"; }

// Witness of whichever side failed, to make a counterexample re-checkable.
inline std::optional<Witness> witness_of(const PredicateResult& a, const PredicateResult& b) {
  if (a.witness) return a.witness;
  return b.witness;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Ring families

inline std::vector<RingSpec> integers_mod_range(Natural lo, Natural hi) {
  std::vector<RingSpec> out;
  for (Natural n = std::max<Natural>(lo, 2); n <= hi; ++n) out.emplace_back(make_integers_mod(n));
  return out;
}

/// Every GF(p)[x]/(f) with f monic of degree 1..max_deg.
inline std::vector<RingSpec> poly_quotients(std::uint32_t p, unsigned max_deg) {
  std::vector<RingSpec> out;
  for (unsigned d = 1; d <= max_deg; ++d) {
    for (const auto& f : monic_polys_of_degree(p, d)) out.emplace_back(make_poly_quotient(f));
  }
  return out;
}

inline std::vector<RingSpec> default_products() {
  return {parse_ring("Z/4 x Z/9"), parse_ring("Z/8 x Z/3"), parse_ring("Z/2 x Z/3 x Z/5"), parse_ring("GF(2)[x]/(x^2) x Z/9")};
}

struct SuiteConfig {
  Natural max_n = 120;
  std::vector<Natural> extra_moduli{210, 360};
  unsigned gf2_max_deg = 5;
  unsigned gf3_max_deg = 3;
  std::vector<RingSpec> products = default_products();
  Natural triple_cover_max_n = 60;
  Natural comaximal_max_n = 200;
  Natural pid_max = 200;
  unsigned pid_poly_max_deg = 4;
  Natural ufd_max = 1000;
  Natural ufd_transfer_max = 200;
  ClassifyOptions classify;
};

/// Z/n for 2 <= n <= max_n and the extra moduli, the polynomial quotients,
/// then the products.
inline std::vector<RingSpec> matrix_rings(const SuiteConfig& c) {
  auto out = integers_mod_range(2, c.max_n);
  for (Natural n : c.extra_moduli) out.emplace_back(make_integers_mod(n));
  for (auto& r : poly_quotients(2, c.gf2_max_deg)) out.push_back(std::move(r));
  for (auto& r : poly_quotients(3, c.gf3_max_deg)) out.push_back(std::move(r));
  for (const auto& r : c.products) out.push_back(r);
  return out;
}

// ---------------------------------------------------------------------------
// Checks over finite ring families

/// Triple-cover condition holds exactly when I is strongly 2-irreducible.
inline CheckReport check_triple_cover_equivalence(const std::vector<RingSpec>& family, const ClassifyOptions& opt = {}) {
  detail::require_family(family);
  detail::CheckRun run("check_triple_cover_equivalence");
  for (const auto& R : family) {
    const IdealTable t(R, opt.oracle);
    run.tested(R);
    for (std::size_t i = 1; i < t.size(); ++i) {
      run.count();
      const auto a = triple_cover_condition_bf(t, i);
      const auto b = is_strongly_2_irreducible_bf(t, i);
      if (a.holds != b.holds) {
        run.fail(R, {t.ideal(i)}, "triple-cover " + detail::verdict(a.holds) + ", strongly 2-irreducible " + detail::verdict(b.holds),
                 detail::witness_of(a, b));
        return run.finish();
      }
    }
  }
  return run.finish();
}

/// In arithmetical rings, 2-irreducible and strongly 2-irreducible coincide.
inline CheckReport check_arithmetical_equivalence(const std::vector<RingSpec>& family, const ClassifyOptions& opt = {}) {
  detail::require_family(family);
  detail::CheckRun run("check_arithmetical_equivalence");
  for (const auto& R : family) {
    const IdealTable t(R, opt.oracle);
    if (!is_arithmetical_bf(t).holds) continue;
    run.tested(R);
    for (std::size_t i = 1; i < t.size(); ++i) {
      run.count();
      const auto a = is_2_irreducible_bf(t, i);
      const auto b = is_strongly_2_irreducible_bf(t, i);
      if (a.holds != b.holds) {
        run.fail(R, {t.ideal(i)}, "2-irreducible " + detail::verdict(a.holds) + ", strongly 2-irreducible " + detail::verdict(b.holds),
                 detail::witness_of(a, b));
        return run.finish();
      }
    }
  }
  return run.finish();
}

/// For radical I: strongly 2-irreducible, 2-absorbing, 2-absorbing primary
/// and "prime or the meet of two primes" agree.
inline CheckReport check_radical_theorem(const std::vector<RingSpec>& family, const ClassifyOptions& opt = {}) {
  detail::require_family(family);
  detail::CheckRun run("check_radical_theorem");
  for (const auto& R : family) {
    const IdealTable t(R, opt.oracle);
    run.tested(R);
    const auto primes = ideals_where(t, [&](std::size_t j) { return t.is_proper(j) && is_prime_bf(t, j).holds; });
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (t.radical(i) != i) continue;
      run.count();
      bool two_primes = std::find(primes.begin(), primes.end(), i) != primes.end();
      for (std::size_t a = 0; a < primes.size() && !two_primes; ++a) {
        for (std::size_t b = a + 1; b < primes.size() && !two_primes; ++b) two_primes = t.meet(primes[a], primes[b]) == i;
      }
      const bool s2i = is_strongly_2_irreducible_bf(t, i).holds;
      const bool tab = is_2_absorbing_bf(t, i).holds;
      const bool tabp = is_2_absorbing_primary_bf(t, i).holds;
      if (s2i != tab || s2i != two_primes || s2i != tabp) {
        run.fail(R, {t.ideal(i)},
                 "strongly 2-irreducible " + detail::verdict(s2i) + ", 2-absorbing " + detail::verdict(tab) +
                     ", 2-absorbing primary " + detail::verdict(tabp) + ", prime or two primes " + detail::verdict(two_primes));
        return run.finish();
      }
    }
  }
  return run.finish();
}

inline constexpr std::size_t kIdempotentScanMaxElements = 1u << 16;

/// In von Neumann regular rings: 2-absorbing, 2-irreducible, strongly
/// 2-irreducible, singly strongly 2-irreducible and the idempotent-triple
/// condition agree.
inline CheckReport check_vnr_equivalence(const std::vector<RingSpec>& family, const ClassifyOptions& opt = {}) {
  detail::require_family(family);
  detail::CheckRun run("check_vnr_equivalence");
  for (const auto& R : family) {
    const IdealTable t(R, opt.oracle);
    if (!is_von_neumann_regular_bf(t).holds) continue;
    run.tested(R);
    std::vector<Element> idem;
    for (auto& e : enumerate_elements(R, kIdempotentScanMaxElements)) {
      if (multiply(R, e, e) == e) idem.push_back(std::move(e));
    }
    for (std::size_t i = 1; i < t.size(); ++i) {
      run.count();
      const Ideal& I = t.ideal(i);
      bool cond = true;
      for (std::size_t a = 0; a < idem.size() && cond; ++a) {
        for (std::size_t b = 0; b < idem.size() && cond; ++b) {
          const Element ab = multiply(R, idem[a], idem[b]);
          for (std::size_t c = 0; c < idem.size() && cond; ++c) {
            if (contains(I, multiply(R, ab, idem[c])) && !contains(I, ab) && !contains(I, multiply(R, idem[a], idem[c])) &&
                !contains(I, multiply(R, idem[b], idem[c]))) {
              cond = false;
            }
          }
        }
      }
      const bool v1 = is_2_absorbing_bf(t, i).holds;
      const bool v2 = is_2_irreducible_bf(t, i).holds;
      const bool v3 = is_strongly_2_irreducible_bf(t, i).holds;
      const bool v4 = is_singly_strongly_2_irreducible_bf(t, i).holds;
      if (v1 != v2 || v1 != v3 || v1 != v4 || v1 != cond) {
        run.fail(R, {I},
                 "2-absorbing " + detail::verdict(v1) + ", 2-irreducible " + detail::verdict(v2) + ", strongly 2-irreducible " +
                     detail::verdict(v3) + ", singly strongly 2-irreducible " + detail::verdict(v4) + ", idempotent triples " +
                     detail::verdict(cond));
        return run.finish();
      }
    }
  }
  return run.finish();
}

/// The meet of two strongly irreducible ideals is strongly 2-irreducible.
inline CheckReport check_intersection_two_strongly_irreducible(const std::vector<RingSpec>& family, const ClassifyOptions& opt = {}) {
  detail::require_family(family);
  detail::CheckRun run("check_intersection_two_strongly_irreducible");
  for (const auto& R : family) {
    const IdealTable t(R, opt.oracle);
    run.tested(R);
    const auto si = ideals_where(t, [&](std::size_t j) { return t.is_proper(j) && is_strongly_irreducible_bf(t, j).holds; });
    for (std::size_t a = 0; a < si.size(); ++a) {
      for (std::size_t b = a; b < si.size(); ++b) {
        run.count();
        const std::size_t m = t.meet(si[a], si[b]);
        const auto r = is_strongly_2_irreducible_bf(t, m);
        if (!r.holds) {
          run.fail(R, {t.ideal(si[a]), t.ideal(si[b]), t.ideal(m)}, "meet of two strongly irreducible ideals is not strongly 2-irreducible",
                   r.witness);
          return run.finish();
        }
      }
    }
  }
  return run.finish();
}

/// A 2-irreducible ideal is irreducible or the meet of two irreducibles;
/// in arithmetical rings every meet of two irreducibles is 2-irreducible.
inline CheckReport check_noetherian_decomposition(const std::vector<RingSpec>& family, const ClassifyOptions& opt = {}) {
  detail::require_family(family);
  detail::CheckRun run("check_noetherian_decomposition");
  for (const auto& R : family) {
    const IdealTable t(R, opt.oracle);
    run.tested(R);
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (!is_2_irreducible_bf(t, i).holds) continue;
      run.count();
      const auto parts = find_irreducible_decomposition(t, i, 2);
      bool ok = parts.has_value();
      if (ok) {
        Ideal m = whole_ideal(R);
        for (const auto& p : *parts) {
          m = ideal_intersect(m, p);
          ok = ok && is_irreducible_bf(t, t.index_of(p)).holds;
        }
        ok = ok && m == t.ideal(i);
      }
      if (!ok) {
        run.fail(R, {t.ideal(i)}, "2-irreducible ideal without a decomposition into at most two irreducible ideals");
        return run.finish();
      }
    }
    if (!is_arithmetical_bf(t).holds) continue;
    const auto irr = ideals_where(t, [&](std::size_t j) { return t.is_proper(j) && is_irreducible_bf(t, j).holds; });
    for (std::size_t a = 0; a < irr.size(); ++a) {
      for (std::size_t b = a + 1; b < irr.size(); ++b) {
        run.count();
        const std::size_t m = t.meet(irr[a], irr[b]);
        const auto r = is_2_irreducible_bf(t, m);
        if (!r.holds) {
          run.fail(R, {t.ideal(irr[a]), t.ideal(irr[b]), t.ideal(m)}, "meet of two irreducible ideals is not 2-irreducible", r.witness);
          return run.finish();
        }
      }
    }
  }
  return run.finish();
}

/// Every 2-irreducible ideal is 2-absorbing primary.
inline CheckReport check_2absorbing_primary_corollary(const std::vector<RingSpec>& family, const ClassifyOptions& opt = {}) {
  detail::require_family(family);
  detail::CheckRun run("check_2absorbing_primary_corollary");
  for (const auto& R : family) {
    const IdealTable t(R, opt.oracle);
    run.tested(R);
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (!is_2_irreducible_bf(t, i).holds) continue;
      run.count();
      const auto r = is_2_absorbing_primary_bf(t, i);
      if (!r.holds) {
        run.fail(R, {t.ideal(i)}, "2-irreducible ideal is not 2-absorbing primary", r.witness);
        return run.finish();
      }
    }
  }
  return run.finish();
}

/// Product of three pairwise comaximal primes is not 2-irreducible; a ring
/// whose proper ideals are all 2-irreducible has at most two maximal ideals.
inline CheckReport check_comaximal_primes(const std::vector<RingSpec>& family, const ClassifyOptions& opt = {}) {
  detail::require_family(family);
  detail::CheckRun run("check_comaximal_primes");
  for (const auto& R : family) {
    const IdealTable t(R, opt.oracle);
    run.tested(R);
    const auto primes = ideals_where(t, [&](std::size_t j) { return t.is_proper(j) && is_prime_bf(t, j).holds; });
    auto comax = [&](std::size_t a, std::size_t b) { return t.join(a, b) == t.whole(); };
    for (std::size_t a = 0; a < primes.size(); ++a) {
      for (std::size_t b = a + 1; b < primes.size(); ++b) {
        if (!comax(primes[a], primes[b])) continue;
        for (std::size_t c = b + 1; c < primes.size(); ++c) {
          if (!comax(primes[a], primes[c]) || !comax(primes[b], primes[c])) continue;
          run.count();
          const std::size_t prod = t.product(t.product(primes[a], primes[b]), primes[c]);
          if (is_2_irreducible_bf(t, prod).holds) {
            run.fail(R, {t.ideal(primes[a]), t.ideal(primes[b]), t.ideal(primes[c]), t.ideal(prod)},
                     "product of three pairwise comaximal primes is 2-irreducible");
            return run.finish();
          }
        }
      }
    }
    run.count();
    bool all_two_irreducible = true;
    for (std::size_t i = 1; i < t.size() && all_two_irreducible; ++i) all_two_irreducible = is_2_irreducible_bf(t, i).holds;
    std::size_t maximal = 0;
    for (std::size_t i = 1; i < t.size(); ++i) {
      bool is_max = true;
      for (std::size_t j = 1; j < t.size() && is_max; ++j) is_max = j == i || !t.leq(i, j);
      if (is_max) ++maximal;
    }
    if (all_two_irreducible && maximal > 2) {
      run.fail(R, {}, "every proper ideal is 2-irreducible but there are " + std::to_string(maximal) + " maximal ideals");
      return run.finish();
    }
  }
  return run.finish();
}

/// Along R -> R/H for ideals I containing H: strong 2-irreducibility passes
/// to the image, 2-irreducibility transfers both ways, and extension and
/// contraction are inverse.
inline CheckReport check_hom_correspondence(const std::vector<RingSpec>& family, const ClassifyOptions& opt = {}) {
  detail::require_family(family);
  detail::CheckRun run("check_hom_correspondence");
  for (const auto& R : family) {
    const IdealTable t(R, opt.oracle);
    run.tested(R);
    for (std::size_t h = 1; h < t.size(); ++h) {
      const Ideal& H = t.ideal(h);
      if (proper_components(H).size() != R.arity()) continue;
      const QuotientMap map = quotient_map(R, H);
      const IdealTable q(map.codomain, opt.oracle);
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (!t.leq(h, i)) continue;
        run.count();
        const Ideal& I = t.ideal(i);
        const Ideal E = extend(map, I);
        if (!(contract(map, E) == I)) {
          run.fail(R, {H, I}, "contraction of the extension differs from I");
          return run.finish();
        }
        const std::size_t e = q.index_of(E);
        const auto s_i = is_strongly_2_irreducible_bf(t, i);
        const auto s_e = is_strongly_2_irreducible_bf(q, e);
        if (s_i.holds && !s_e.holds) {
          run.fail(R, {H, I}, "strongly 2-irreducible ideal has a non strongly 2-irreducible image");
          return run.finish();
        }
        const auto t_i = is_2_irreducible_bf(t, i);
        const auto t_e = is_2_irreducible_bf(q, e);
        if (t_i.holds != t_e.holds) {
          run.fail(R, {H, I}, "2-irreducible " + detail::verdict(t_i.holds) + " but image " + detail::verdict(t_e.holds),
                   t_i.witness);
          return run.finish();
        }
      }
      for (std::size_t j = 0; j < q.size(); ++j) {
        run.count();
        if (!(extend(map, contract(map, q.ideal(j))) == q.ideal(j))) {
          run.fail(R, {H, contract(map, q.ideal(j))}, "extension of the contraction differs from J");
          return run.finish();
        }
      }
    }
  }
  return run.finish();
}

/// Every strongly 2-irreducible ideal is primary or the meet of two primaries.
inline CheckReport check_laskerian_decomposition(const std::vector<RingSpec>& family, const ClassifyOptions& opt = {}) {
  detail::require_family(family);
  detail::CheckRun run("check_laskerian_decomposition");
  for (const auto& R : family) {
    const IdealTable t(R, opt.oracle);
    run.tested(R);
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (!is_strongly_2_irreducible_bf(t, i).holds) continue;
      run.count();
      const auto r = is_n_primary_bf(t, i, 2);
      if (!r.holds) {
        run.fail(R, {t.ideal(i)}, "strongly 2-irreducible ideal is not an intersection of two primary ideals", r.witness);
        return run.finish();
      }
    }
  }
  return run.finish();
}

/// Structural classification equals the oracle on all ten predicates.
inline CheckReport check_structural_agreement(const std::vector<RingSpec>& family, const ClassifyOptions& opt = {},
                                              std::string id = "check_structural_agreement") {
  detail::require_family(family);
  detail::CheckRun run(std::move(id));
  for (const auto& R : family) {
    const IdealTable t(R, opt.oracle);
    run.tested(R);
    for (std::size_t i = 1; i < t.size(); ++i) {
      run.count();
      const Classification s = classify(t.ideal(i), opt);
      for (Predicate p : kAllPredicates) {
        const auto o = evaluate_bf(t, i, p);
        if (s[p] != o.holds) {
          run.fail(R, {t.ideal(i)},
                   std::string(flag_name(p)) + ": structural " + detail::verdict(s[p]) + " (" +
                       s.provenance[predicate_index(p)].rule + "), oracle " + detail::verdict(o.holds),
                   o.witness);
          return run.finish();
        }
      }
    }
  }
  return run.finish();
}

/// Classification by the product rules equals the oracle on product rings.
inline CheckReport check_product_theorem(const std::vector<RingSpec>& family, const ClassifyOptions& opt = {}) {
  for (const auto& R : family) {
    if (!R.is_product()) throw DomainError("check_product_theorem needs product rings, got " + format_ring(R));
  }
  return check_structural_agreement(family, opt, "check_product_theorem");
}

struct Implication {
  Predicate from;
  Predicate to;
};

inline constexpr std::array<Implication, 8> kImplications = {{
    {Predicate::Prime, Predicate::Primary},
    {Predicate::Primary, Predicate::TwoAbsorbingPrimary},
    {Predicate::StronglyIrreducible, Predicate::Irreducible},
    {Predicate::Irreducible, Predicate::TwoIrreducible},
    {Predicate::StronglyIrreducible, Predicate::StronglyTwoIrreducible},
    {Predicate::StronglyTwoIrreducible, Predicate::TwoIrreducible},
    {Predicate::StronglyTwoIrreducible, Predicate::SinglyStronglyTwoIrreducible},
    {Predicate::TwoAbsorbing, Predicate::TwoAbsorbingPrimary},
}};

/// The eight implications between predicates, on oracle verdicts.
inline CheckReport check_implication_lattice(const std::vector<RingSpec>& family, const ClassifyOptions& opt = {}) {
  detail::require_family(family);
  detail::CheckRun run("check_implication_lattice");
  for (const auto& R : family) {
    const IdealTable t(R, opt.oracle);
    run.tested(R);
    for (std::size_t i = 1; i < t.size(); ++i) {
      const Classification c = classify_oracle(t, i);
      for (const auto& imp : kImplications) {
        run.count();
        if (c[imp.from] && !c[imp.to]) {
          run.fail(R, {t.ideal(i)}, std::string(flag_name(imp.from)) + " does not imply " + std::string(flag_name(imp.to)),
                   evaluate_bf(t, i, imp.to).witness);
          return run.finish();
        }
      }
    }
  }
  return run.finish();
}

/// The zero ideal is 2-irreducible exactly when it is strongly 2-irreducible.
inline CheckReport check_zero_ideal_remark(const std::vector<RingSpec>& family, const ClassifyOptions& opt = {}) {
  detail::require_family(family);
  detail::CheckRun run("check_zero_ideal_remark");
  for (const auto& R : family) {
    const IdealTable t(R, opt.oracle);
    run.tested(R);
    run.count();
    const auto a = is_2_irreducible_bf(t, t.zero());
    const auto b = is_strongly_2_irreducible_bf(t, t.zero());
    if (a.holds != b.holds) {
      run.fail(R, {t.ideal(t.zero())}, "2-irreducible " + detail::verdict(a.holds) + ", strongly 2-irreducible " + detail::verdict(b.holds),
               detail::witness_of(a, b));
      return run.finish();
    }
  }
  return run.finish();
}

/// In rings where finitely generated ideals are principal, strongly
/// 2-irreducible and singly strongly 2-irreducible coincide.
inline CheckReport check_bezout_corollary(const std::vector<RingSpec>& family, const ClassifyOptions& opt = {}) {
  detail::require_family(family);
  detail::CheckRun run("check_bezout_corollary");
  for (const auto& R : family) {
    const IdealTable t(R, opt.oracle);
    run.tested(R);
    for (std::size_t i = 1; i < t.size(); ++i) {
      run.count();
      const auto a = is_strongly_2_irreducible_bf(t, i);
      const auto b = is_singly_strongly_2_irreducible_bf(t, i);
      if (a.holds != b.holds) {
        run.fail(R, {t.ideal(i)},
                 "strongly 2-irreducible " + detail::verdict(a.holds) + ", singly strongly 2-irreducible " + detail::verdict(b.holds),
                 detail::witness_of(a, b));
        return run.finish();
      }
    }
  }
  return run.finish();
}

// ---------------------------------------------------------------------------
// Checks over principal ideals of Z and GF(p)[x]

namespace detail {

// Number of distinct prime factors by plain trial division, kept apart from
// factor_int so the shape rule is checked against a second computation.
inline std::size_t omega_by_trial_division(Natural a) {
  std::size_t k = 0;
  for (Natural p = 2; p * p <= a; ++p) {
    if (a % p != 0) continue;
    ++k;
    while (a % p == 0) a /= p;
  }
  return a > 1 ? k + 1 : k;
}

inline Ideal integer_ideal(Natural a) { return make_ideal(RingSpec(Integers{}), {a}); }

}  // namespace detail

/// For (d), 2 <= d <= bound: 2-irreducible, strongly 2-irreducible,
/// 2-absorbing primary and the two-prime-power shape are one boolean, equal
/// to the brute-force verdicts on the zero ideal of Z/d.
inline CheckReport check_pid_corollary(Natural bound, const ClassifyOptions& opt = {}) {
  detail::CheckRun run("check_pid_corollary");
  run.tested(RingSpec(Integers{}));
  for (Natural d = 2; d <= bound; ++d) {
    run.count();
    const Ideal I = detail::integer_ideal(d);
    const Classification s = classify_principal_pid(I, opt);
    const bool shape = detail::omega_by_trial_division(d) <= 2;
    const IdealTable t(RingSpec(make_integers_mod(d)), opt.oracle);
    const std::size_t z = t.zero();
    const std::array<bool, 7> v = {s[Predicate::TwoIrreducible],
                                   s[Predicate::StronglyTwoIrreducible],
                                   s[Predicate::TwoAbsorbingPrimary],
                                   shape,
                                   is_2_irreducible_bf(t, z).holds,
                                   is_strongly_2_irreducible_bf(t, z).holds,
                                   is_2_absorbing_primary_bf(t, z).holds};
    for (bool b : v) {
      if (b != v[0]) {
        run.fail(RingSpec(Integers{}), {I}, "conditions disagree for d = " + std::to_string(d));
        return run.finish();
      }
    }
  }
  return run.finish();
}

/// Nonzero proper (a): irreducible, strongly irreducible and primary hold
/// exactly for prime powers, structurally and by transfer oracle. Runs over
/// Z up to `int_bound` and monic polynomials over GF(2), GF(3) up to
/// `max_deg`.
inline CheckReport check_dedekind_theorem(Natural int_bound, unsigned max_deg, const ClassifyOptions& opt = {}) {
  detail::CheckRun run("check_dedekind_theorem");
  auto one = [&](const Ideal& I, bool prime_power) {
    run.count();
    const Classification s = classify_principal_pid(I, opt);
    const Classification o = classify_oracle(I, opt);
    for (Predicate p : {Predicate::Irreducible, Predicate::StronglyIrreducible, Predicate::Primary}) {
      if (s[p] != prime_power || o[p] != prime_power) {
        run.fail(I.ring, {I},
                 std::string(flag_name(p)) + ": structural " + detail::verdict(s[p]) + ", transfer oracle " + detail::verdict(o[p]) +
                     ", prime power " + detail::verdict(prime_power));
        return false;
      }
    }
    return true;
  };
  run.tested(RingSpec(Integers{}));
  for (Natural a = 2; a <= int_bound; ++a) {
    if (!one(detail::integer_ideal(a), detail::omega_by_trial_division(a) == 1)) return run.finish();
  }
  for (std::uint32_t p : {2u, 3u}) {
    const RingSpec R(make_poly_ring(p));
    run.tested(R);
    for (unsigned d = 1; d <= max_deg; ++d) {
      for (const auto& f : monic_polys_of_degree(p, d)) {
        // Prime power: a single monic irreducible divides f.
        std::size_t irreducible_divisors = 0;
        for (const auto& g : monic_divisors(f)) {
          if (g.degree() >= 1 && is_irreducible(g)) ++irreducible_divisors;
        }
        if (!one(make_ideal(R, {f}), irreducible_divisors == 1)) return run.finish();
      }
    }
  }
  return run.finish();
}

/// Principal ideals (a) of Z, 2 <= a <= bound: singly strongly
/// 2-irreducible exactly for p^k and p^k q^m; up to `transfer_bound`, also by
/// transfer oracle, with singly strongly 2-irreducible => 2-absorbing primary
/// and 2-absorbing => singly strongly 2-irreducible.
inline CheckReport check_ufd_ssi_theory(Natural bound, Natural transfer_bound, const ClassifyOptions& opt = {}) {
  detail::CheckRun run("check_ufd_ssi_theory");
  const RingSpec Z(Integers{});
  run.tested(Z);
  for (Natural a = 2; a <= bound; ++a) {
    run.count();
    const Ideal I = detail::integer_ideal(a);
    const bool shape = detail::omega_by_trial_division(a) <= 2;
    const Classification s = classify_principal_pid(I, opt);
    if (s[Predicate::SinglyStronglyTwoIrreducible] != shape) {
      run.fail(Z, {I}, "structural singly strongly 2-irreducible " + detail::verdict(!shape) + " against shape rule");
      return run.finish();
    }
    if (a > transfer_bound) continue;
    const Classification o = classify_oracle(I, opt);
    const bool ssi = o[Predicate::SinglyStronglyTwoIrreducible];
    if (ssi != shape) {
      run.fail(Z, {I}, "transfer-oracle singly strongly 2-irreducible " + detail::verdict(ssi) + " against shape rule");
      return run.finish();
    }
    if (ssi && !o[Predicate::TwoAbsorbingPrimary]) {
      run.fail(Z, {I}, "singly strongly 2-irreducible but not 2-absorbing primary");
      return run.finish();
    }
    if (o[Predicate::TwoAbsorbing] && !ssi) {
      run.fail(Z, {I}, "2-absorbing but not singly strongly 2-irreducible");
      return run.finish();
    }
  }
  return run.finish();
}

// ---------------------------------------------------------------------------
// Suite

struct CheckEntry {
  std::string id;
  std::function<CheckReport(const SuiteConfig&)> run;
};

namespace detail {

inline std::vector<RingSpec> with_moduli_up_to(std::vector<RingSpec> family, Natural bound) {
  for (Natural n = 2; n <= bound; ++n) {
    RingSpec r(make_integers_mod(n));
    if (std::find(family.begin(), family.end(), r) == family.end()) family.push_back(std::move(r));
  }
  return family;
}

}  // namespace detail

inline const std::vector<CheckEntry>& check_registry() {
  using C = const SuiteConfig&;
  static const std::vector<CheckEntry> registry = {
      {"check_triple_cover_equivalence",
       [](C c) { return check_triple_cover_equivalence(integers_mod_range(2, std::min(c.max_n, c.triple_cover_max_n)), c.classify); }},
      {"check_arithmetical_equivalence", [](C c) { return check_arithmetical_equivalence(matrix_rings(c), c.classify); }},
      {"check_radical_theorem", [](C c) { return check_radical_theorem(matrix_rings(c), c.classify); }},
      {"check_vnr_equivalence", [](C c) { return check_vnr_equivalence(matrix_rings(c), c.classify); }},
      {"check_intersection_two_strongly_irreducible",
       [](C c) { return check_intersection_two_strongly_irreducible(matrix_rings(c), c.classify); }},
      {"check_noetherian_decomposition", [](C c) { return check_noetherian_decomposition(matrix_rings(c), c.classify); }},
      {"check_2absorbing_primary_corollary", [](C c) { return check_2absorbing_primary_corollary(matrix_rings(c), c.classify); }},
      {"check_comaximal_primes",
       [](C c) { return check_comaximal_primes(detail::with_moduli_up_to(matrix_rings(c), c.comaximal_max_n), c.classify); }},
      {"check_hom_correspondence", [](C c) { return check_hom_correspondence(matrix_rings(c), c.classify); }},
      {"check_laskerian_decomposition", [](C c) { return check_laskerian_decomposition(matrix_rings(c), c.classify); }},
      {"check_ufd_ssi_theory", [](C c) { return check_ufd_ssi_theory(c.ufd_max, c.ufd_transfer_max, c.classify); }},
      {"check_pid_corollary", [](C c) { return check_pid_corollary(c.pid_max, c.classify); }},
      {"check_dedekind_theorem", [](C c) { return check_dedekind_theorem(c.pid_max, c.pid_poly_max_deg, c.classify); }},
      {"check_product_theorem", [](C c) { return check_product_theorem(c.products, c.classify); }},
      {"check_structural_agreement", [](C c) { return check_structural_agreement(matrix_rings(c), c.classify); }},
      {"check_implication_lattice", [](C c) { return check_implication_lattice(matrix_rings(c), c.classify); }},
      {"check_zero_ideal_remark", [](C c) { return check_zero_ideal_remark(matrix_rings(c), c.classify); }},
      {"check_bezout_corollary", [](C c) { return check_bezout_corollary(matrix_rings(c), c.classify); }},
  };
  return registry;
}

inline std::vector<std::string> check_ids() {
  std::vector<std::string> out;
  for (const auto& e : check_registry()) out.push_back(e.id);
  return out;
}

/// Runs one check; errors (resource caps included) become an error report.
inline CheckReport run_check(const CheckEntry& entry, const SuiteConfig& config) {
  try {
    return entry.run(config);
  } catch (const std::exception& e) {
    CheckReport r;
    r.theorem_id = entry.id;
    r.status = CheckStatus::Error;
    r.error = e.what();
    return r;
  }
}

/// Runs the selected checks (all when `ids` is empty) in registry order.
/// Unknown ids raise DomainError before anything runs.
inline std::vector<CheckReport> run_suite(const SuiteConfig& config, const std::vector<std::string>& ids = {}) {
  const auto& reg = check_registry();
  for (const auto& id : ids) {
    const bool known = std::any_of(reg.begin(), reg.end(), [&](const CheckEntry& e) { return e.id == id; });
    if (!known) throw DomainError("unknown check id: " + id);
  }
  std::vector<CheckReport> out;
  for (const auto& e : reg) {
    if (ids.empty() || std::find(ids.begin(), ids.end(), e.id) != ids.end()) out.push_back(run_check(e, config));
  }
  return out;
}

inline bool all_passed(const std::vector<CheckReport>& reports) {
  return !reports.empty() &&
         std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == CheckStatus::Pass; });
}

}  // namespace idealis
