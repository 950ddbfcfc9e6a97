#pragma once

// Structural classification of proper ideals from factorization shape and
// product decomposition, with oracle fallback for the 2-absorbing property
// of non-radical ideals.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "idealis/arith.hpp"
#include "idealis/error.hpp"
#include "idealis/oracle.hpp"
#include "idealis/parse.hpp"
#include "idealis/poly.hpp"
#include "idealis/ring.hpp"

namespace idealis {

enum class ProvenanceKind { Structural, Oracle, TransferOracle };

inline std::string_view provenance_kind_name(ProvenanceKind k) {
  switch (k) {
    case ProvenanceKind::Structural: return "structural";
    case ProvenanceKind::Oracle: return "oracle";
    case ProvenanceKind::TransferOracle: return "transfer-oracle";
  }
  return "";
}

struct Provenance {
  ProvenanceKind kind = ProvenanceKind::Structural;
  std::string rule;  // rule id for structural verdicts, empty otherwise

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Ten predicate verdicts for one proper ideal, indexed by Predicate.
struct Classification {
  std::array<bool, 10> values{};
  std::array<Provenance, 10> provenance{};

  bool operator[](Predicate p) const { return values[predicate_index(p)]; }
  void set(Predicate p, bool v, Provenance prov) {
    values[predicate_index(p)] = v;
    provenance[predicate_index(p)] = std::move(prov);
  }
  bool same_verdicts(const Classification& o) const { return values == o.values; }
};

/// Prime support of a generator: k distinct primes with exponents.
struct ShapeSummary {
  std::size_t distinct_prime_count = 0;
  std::vector<unsigned> exponents;
  bool squarefree = true;
};

inline ShapeSummary shape_of(Natural a) {
  ShapeSummary s;
  for (const auto& pp : factor_int(a).factors) {
    s.exponents.push_back(pp.exponent);
    if (pp.exponent > 1) s.squarefree = false;
  }
  s.distinct_prime_count = s.exponents.size();
  return s;
}

inline ShapeSummary shape_of(const Poly& g) {
  ShapeSummary s;
  if (g.degree() < 1) return s;
  for (const auto& [q, e] : factor_poly(make_monic(g)).factors) {
    s.exponents.push_back(e);
    if (e > 1) s.squarefree = false;
  }
  s.distinct_prime_count = s.exponents.size();
  return s;
}

inline ShapeSummary shape_of(const BaseIdeal& g) {
  if (const auto* n = std::get_if<Natural>(&g)) return shape_of(*n);
  return shape_of(std::get<Poly>(g));
}

struct ClassifyOptions {
  OracleOptions oracle;
  // Largest number of proper chain components for which the 2-irreducible
  // family holds in a finite principal ideal ring. Only the mutation guard
  // changes this.
  std::size_t two_component_limit = 2;
};

namespace detail {

inline Provenance rule(std::string id) { return {ProvenanceKind::Structural, std::move(id)}; }

inline void require_proper_ideal(const Ideal& I) {
  if (!is_proper(I)) throw NotProperError("ideal " + format_ideal(I) + " is not proper");
}

inline bool is_transfer_ring(const RingSpec& ring) { return !ring.is_finite(); }

// Finite ring with an ideal whose elementwise properties match those of I.
// A nonzero component (a) of Z or GF(p)[x] becomes the zero ideal of the
// quotient by (a); the zero ideal becomes the zero ideal of Z/2 or
// GF(p)[x]/(x) (both prime), and a whole component stays whole.
inline std::pair<RingSpec, Ideal> transfer_surrogate(const Ideal& I) {
  std::vector<BaseRing> parts;
  std::vector<BaseIdeal> gens;
  for (std::size_t i = 0; i < I.ring.arity(); ++i) {
    const auto& r = I.ring.component(i);
    const auto& g = I.parts[i];
    if (std::holds_alternative<Integers>(r)) {
      const Natural a = std::get<Natural>(g);
      if (a == 1) {
        parts.push_back(make_integers_mod(2));
        gens.emplace_back(Natural{1});
      } else {
        const Natural m = a == 0 ? 2 : a;
        parts.push_back(make_integers_mod(m));
        gens.emplace_back(m);
      }
    } else if (const auto* pr = std::get_if<PolyRing>(&r)) {
      const Poly& a = std::get<Poly>(g);
      if (a.is_one()) {
        parts.push_back(make_poly_quotient(Poly::x(pr->characteristic)));
        gens.emplace_back(a);
      } else {
        const Poly m = a.is_zero() ? Poly::x(pr->characteristic) : a;
        parts.push_back(make_poly_quotient(m));
        gens.emplace_back(m);
      }
    } else {
      parts.push_back(r);
      gens.push_back(g);
    }
  }
  RingSpec ring = RingSpec::from_parts(std::move(parts));
  Ideal J = make_ideal(ring, std::move(gens));
  return {std::move(ring), std::move(J)};
}

// Oracle verdict for one predicate, through the surrogate if the ring is
// infinite.
inline std::pair<bool, Provenance> oracle_verdict(const Ideal& I, Predicate p, const ClassifyOptions& opt) {
  if (I.ring.is_finite()) {
    return {evaluate_bf(I.ring, I, p, opt.oracle).holds, Provenance{ProvenanceKind::Oracle, ""}};
  }
  const auto [ring, J] = transfer_surrogate(I);
  return {evaluate_bf(ring, J, p, opt.oracle).holds, Provenance{ProvenanceKind::TransferOracle, ""}};
}

}  // namespace detail

/// I proper in Z or GF(p)[x].
inline Classification classify_principal_pid(const Ideal& I, const ClassifyOptions& opt = {}) {
  if (!I.ring.is_pid()) throw DomainError("classify_principal_pid needs Z or GF(p)[x]");
  detail::require_proper_ideal(I);
  Classification c;
  const BaseIdeal& g = I.parts[0];
  const bool zero = std::holds_alternative<Natural>(g) ? std::get<Natural>(g) == 0 : std::get<Poly>(g).is_zero();
  if (zero) {
    for (Predicate p : kAllPredicates) c.set(p, true, detail::rule("domain-zero-ideal-prime"));
    return c;
  }
  const ShapeSummary s = shape_of(g);
  const std::size_t k = s.distinct_prime_count;
  const bool prime_power = k == 1;
  const bool two_prime_powers = k <= 2;
  c.set(Predicate::Prime, prime_power && s.exponents[0] == 1, detail::rule("pid-prime-generator"));
  c.set(Predicate::Primary, prime_power, detail::rule("pid-prime-power"));
  c.set(Predicate::Irreducible, prime_power, detail::rule("pid-prime-power"));
  c.set(Predicate::StronglyIrreducible, prime_power, detail::rule("pid-prime-power"));
  c.set(Predicate::Radical, s.squarefree, detail::rule("pid-squarefree"));
  for (Predicate p : {Predicate::TwoIrreducible, Predicate::StronglyTwoIrreducible, Predicate::SinglyStronglyTwoIrreducible,
                      Predicate::TwoAbsorbingPrimary}) {
    c.set(p, two_prime_powers, detail::rule("pid-at-most-two-prime-powers"));
  }
  if (s.squarefree) {
    c.set(Predicate::TwoAbsorbing, two_prime_powers, detail::rule("radical-at-most-two-primes"));
  } else {
    const auto [v, prov] = detail::oracle_verdict(I, Predicate::TwoAbsorbing, opt);
    c.set(Predicate::TwoAbsorbing, v, prov);
  }
  return c;
}

/// I proper in Z/n or GF(p)[x]/(f). Under the chinese remainder splitting
/// the proper components of I are the primes of its divisor generator.
inline Classification classify_finite_pir(const Ideal& I, const ClassifyOptions& opt = {}) {
  if (I.ring.is_product() || I.ring.is_pid() || !I.ring.is_finite()) {
    throw DomainError("classify_finite_pir needs Z/n or GF(p)[x]/(f)");
  }
  detail::require_proper_ideal(I);
  Classification c;
  const ShapeSummary s = shape_of(I.parts[0]);
  const std::size_t comps = s.distinct_prime_count;
  c.set(Predicate::Prime, comps == 1 && s.exponents[0] == 1, detail::rule("pir-one-component-exponent-one"));
  c.set(Predicate::Primary, comps == 1, detail::rule("pir-one-component"));
  c.set(Predicate::Irreducible, comps == 1, detail::rule("pir-one-component"));
  c.set(Predicate::StronglyIrreducible, comps == 1, detail::rule("pir-one-component"));
  c.set(Predicate::Radical, s.squarefree, detail::rule("pir-squarefree"));
  const bool within = comps <= opt.two_component_limit;
  c.set(Predicate::TwoIrreducible, within, detail::rule("pir-at-most-two-components"));
  c.set(Predicate::StronglyTwoIrreducible, within, detail::rule("pir-at-most-two-components"));
  c.set(Predicate::SinglyStronglyTwoIrreducible, within, detail::rule("pir-at-most-two-components"));
  c.set(Predicate::TwoAbsorbingPrimary, comps <= 2, detail::rule("pir-at-most-two-components-transfer"));
  if (s.squarefree) {
    c.set(Predicate::TwoAbsorbing, comps <= 2, detail::rule("radical-at-most-two-primes"));
  } else {
    const auto [v, prov] = detail::oracle_verdict(I, Predicate::TwoAbsorbing, opt);
    c.set(Predicate::TwoAbsorbing, v, prov);
  }
  return c;
}

inline Classification classify(const Ideal& I, const ClassifyOptions& opt = {});

/// I proper in a product. Verdicts come from the proper components: one
/// proper component inherits its verdict, two proper components need both
/// strongly irreducible (or irreducible, for plain 2-irreducibility).
inline Classification classify_product(const Ideal& I, const ClassifyOptions& opt = {}) {
  if (!I.ring.is_product()) throw DomainError("classify_product needs a product ring");
  detail::require_proper_ideal(I);
  const auto proper = proper_components(I);
  std::vector<Classification> comp;
  for (std::size_t i : proper) comp.push_back(classify(component_ideal(I, i), opt));
  auto only = [&](Predicate p) { return comp.size() == 1 && comp[0][p]; };
  auto pair_both = [&](Predicate p) { return comp.size() == 2 && comp[0][p] && comp[1][p]; };

  Classification c;
  for (Predicate p : {Predicate::Prime, Predicate::Primary, Predicate::Irreducible, Predicate::StronglyIrreducible}) {
    c.set(p, only(p), detail::rule("product-single-proper-component"));
  }
  bool radical = true;
  for (const auto& x : comp) radical = radical && x[Predicate::Radical];
  c.set(Predicate::Radical, radical, detail::rule("product-componentwise-radical"));
  c.set(Predicate::StronglyTwoIrreducible,
        only(Predicate::StronglyTwoIrreducible) || pair_both(Predicate::StronglyIrreducible),
        detail::rule("product-one-or-two-proper-components"));
  c.set(Predicate::TwoIrreducible, only(Predicate::TwoIrreducible) || pair_both(Predicate::Irreducible),
        detail::rule("product-one-or-two-proper-components"));
  c.set(Predicate::SinglyStronglyTwoIrreducible,
        only(Predicate::SinglyStronglyTwoIrreducible) || pair_both(Predicate::StronglyIrreducible),
        detail::rule("product-one-or-two-proper-components"));
  if (radical) {
    const bool v = c[Predicate::StronglyTwoIrreducible];
    c.set(Predicate::TwoAbsorbing, v, detail::rule("radical-strongly-2-irreducible"));
    c.set(Predicate::TwoAbsorbingPrimary, v, detail::rule("radical-strongly-2-irreducible"));
  } else {
    for (Predicate p : {Predicate::TwoAbsorbing, Predicate::TwoAbsorbingPrimary}) {
      const auto [v, prov] = detail::oracle_verdict(I, p, opt);
      c.set(p, v, prov);
    }
  }
  return c;
}

inline Classification classify(const Ideal& I, const ClassifyOptions& opt) {
  detail::require_proper_ideal(I);
  if (I.ring.is_product()) return classify_product(I, opt);
  if (I.ring.is_pid()) return classify_principal_pid(I, opt);
  return classify_finite_pir(I, opt);
}

/// All ten predicates from a prebuilt table.
inline Classification classify_oracle(const IdealTable& t, std::size_t index) {
  Classification c;
  for (Predicate p : kAllPredicates) c.set(p, evaluate_bf(t, index, p).holds, Provenance{ProvenanceKind::Oracle, ""});
  return c;
}

/// All ten predicates by brute force; infinite rings go through the
/// transfer surrogate.
inline Classification classify_oracle(const Ideal& I, const ClassifyOptions& opt = {}) {
  detail::require_proper_ideal(I);
  if (I.ring.is_finite()) {
    const IdealTable t(I.ring, opt.oracle);
    return classify_oracle(t, t.index_of(I));
  }
  const auto [ring, J] = detail::transfer_surrogate(I);
  const IdealTable t(ring, opt.oracle);
  Classification c = classify_oracle(t, t.index_of(J));
  for (auto& p : c.provenance) p.kind = ProvenanceKind::TransferOracle;
  return c;
}

/// Predicates on which two classifications differ.
inline std::vector<Predicate> disagreements(const Classification& a, const Classification& b) {
  std::vector<Predicate> out;
  for (Predicate p : kAllPredicates) {
    if (a[p] != b[p]) out.push_back(p);
  }
  return out;
}

}  // namespace idealis
