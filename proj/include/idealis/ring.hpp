#pragma once

// Ring descriptors, elements and canonical ideals for the supported rings:
// Z, Z/n, GF(p)[x], GF(p)[x]/(f) and finite direct products of these.
//
// Every ideal of a supported ring is determined by one canonical generator
// per component:
//   Z              nonnegative generator g (0 = zero ideal, 1 = whole ring)
//   Z/n            divisor d of n (1 = whole ring, n = zero ideal)
//   GF(p)[x]       zero or a monic generator
//   GF(p)[x]/(f)   monic divisor g of f (1 = whole ring, f = zero ideal)
// Ideals of a product are products of component ideals.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "idealis/arith.hpp"
#include "idealis/error.hpp"
#include "idealis/poly.hpp"

namespace idealis {

struct Integers {
  friend bool operator==(const Integers&, const Integers&) = default;
};

struct IntegersMod {
  Natural modulus;
  friend bool operator==(const IntegersMod&, const IntegersMod&) = default;
};

struct PolyRing {
  std::uint32_t characteristic;
  friend bool operator==(const PolyRing&, const PolyRing&) = default;
};

struct PolyQuotient {
  Poly modulus;  // monic, degree >= 1
  std::uint32_t characteristic() const { return modulus.characteristic(); }
  friend bool operator==(const PolyQuotient&, const PolyQuotient&) = default;
};

using BaseRing = std::variant<Integers, IntegersMod, PolyRing, PolyQuotient>;

inline BaseRing make_integers_mod(Natural n) {
  if (n < 2) throw DomainError("Z/n requires n >= 2, got " + std::to_string(n));
  if (n >= kNaturalLimit) throw OverflowError("modulus exceeds 2^63");
  return IntegersMod{n};
}

inline BaseRing make_poly_ring(std::uint32_t p) {
  require_characteristic(p);
  return PolyRing{p};
}

inline BaseRing make_poly_quotient(const Poly& f) {
  require_characteristic(f.characteristic());
  if (f.degree() < 1) throw DomainError("quotient modulus must have degree >= 1");
  return PolyQuotient{make_monic(f)};
}

inline bool is_finite(const BaseRing& r) {
  return std::holds_alternative<IntegersMod>(r) || std::holds_alternative<PolyQuotient>(r);
}

/// A supported ring: one base ring, or a flattened product of at least two.
class RingSpec {
 public:
  RingSpec() : parts_{Integers{}} {}
  RingSpec(BaseRing r) : parts_{std::move(r)} {}  // NOLINT(google-explicit-constructor)

  static RingSpec product(const std::vector<RingSpec>& factors) {
    RingSpec out;
    out.parts_.clear();
    for (const auto& f : factors) out.parts_.insert(out.parts_.end(), f.parts_.begin(), f.parts_.end());
    if (out.parts_.size() < 2) throw DomainError("a product needs at least two components");
    return out;
  }

  static RingSpec from_parts(std::vector<BaseRing> parts) {
    if (parts.empty()) throw DomainError("ring with no components");
    RingSpec out;
    out.parts_ = std::move(parts);
    return out;
  }

  std::size_t arity() const { return parts_.size(); }
  bool is_product() const { return parts_.size() >= 2; }
  const BaseRing& component(std::size_t i) const { return parts_.at(i); }
  const std::vector<BaseRing>& components() const { return parts_; }
  RingSpec component_ring(std::size_t i) const { return RingSpec(parts_.at(i)); }

  bool is_finite() const {
    for (const auto& p : parts_) {
      if (!idealis::is_finite(p)) return false;
    }
    return true;
  }
  bool is_pid() const {
    return !is_product() && (std::holds_alternative<Integers>(parts_[0]) || std::holds_alternative<PolyRing>(parts_[0]));
  }
  bool is_finite_pir() const { return is_finite(); }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  std::vector<BaseRing> parts_;
};

// ---------------------------------------------------------------------------
// Elements

/// Integers carry a signed value; residues mod n a reduced Natural;
/// polynomial rings and quotients a Poly (reduced mod f in quotients).
using BaseElement = std::variant<std::int64_t, Natural, Poly>;

struct Element {
  std::vector<BaseElement> parts;
  friend bool operator==(const Element&, const Element&) = default;
};

namespace detail {

inline Natural abs_value(std::int64_t v) {
  if (v == INT64_MIN) throw OverflowError("integer magnitude exceeds 2^63 - 1");
  return static_cast<Natural>(v < 0 ? -v : v);
}

inline std::int64_t checked_signed_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out) || out == INT64_MIN) throw OverflowError("integer multiplication overflow");
  return out;
}

inline std::int64_t checked_signed_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out) || out == INT64_MIN) throw OverflowError("integer addition overflow");
  return out;
}

inline void require_arity(const RingSpec& ring, const Element& x) {
  if (x.parts.size() != ring.arity()) {
    throw RingMismatchError("element arity " + std::to_string(x.parts.size()) + " does not match ring arity " +
                            std::to_string(ring.arity()));
  }
}

// Residue of a signed integer modulo n.
inline Natural reduce_signed(std::int64_t v, Natural n) {
  if (v >= 0) return static_cast<Natural>(v) % n;
  const Natural m = abs_value(v) % n;
  return m == 0 ? 0 : n - m;
}

inline BaseElement normalize_element(const BaseRing& r, const BaseElement& e) {
  if (std::holds_alternative<Integers>(r)) {
    if (!std::holds_alternative<std::int64_t>(e)) throw RingMismatchError("expected an integer element");
    return e;
  }
  if (const auto* m = std::get_if<IntegersMod>(&r)) {
    if (const auto* v = std::get_if<Natural>(&e)) return *v % m->modulus;
    if (const auto* v = std::get_if<std::int64_t>(&e)) return reduce_signed(*v, m->modulus);
    throw RingMismatchError("expected an integer residue");
  }
  const auto* f = std::get_if<Poly>(&e);
  if (f == nullptr) throw RingMismatchError("expected a polynomial element");
  if (const auto* pr = std::get_if<PolyRing>(&r)) {
    if (f->characteristic() != pr->characteristic) throw RingMismatchError("characteristic mismatch");
    return *f;
  }
  const auto& q = std::get<PolyQuotient>(r);
  if (f->characteristic() != q.characteristic()) throw RingMismatchError("characteristic mismatch");
  return poly_mod(*f, q.modulus);
}

inline BaseElement base_mul(const BaseRing& r, const BaseElement& a, const BaseElement& b) {
  if (std::holds_alternative<Integers>(r)) return checked_signed_mul(std::get<std::int64_t>(a), std::get<std::int64_t>(b));
  if (const auto* m = std::get_if<IntegersMod>(&r)) {
    return mul_mod(std::get<Natural>(a), std::get<Natural>(b), m->modulus);
  }
  const Poly prod = poly_mul(std::get<Poly>(a), std::get<Poly>(b));
  if (const auto* q = std::get_if<PolyQuotient>(&r)) return poly_mod(prod, q->modulus);
  return prod;
}

inline BaseElement base_add(const BaseRing& r, const BaseElement& a, const BaseElement& b) {
  if (std::holds_alternative<Integers>(r)) return checked_signed_add(std::get<std::int64_t>(a), std::get<std::int64_t>(b));
  if (const auto* m = std::get_if<IntegersMod>(&r)) {
    const Natural x = std::get<Natural>(a);
    const Natural y = std::get<Natural>(b);
    return x >= m->modulus - y ? x - (m->modulus - y) : x + y;
  }
  return poly_add(std::get<Poly>(a), std::get<Poly>(b));
}

inline BaseElement base_one(const BaseRing& r) {
  if (std::holds_alternative<Integers>(r)) return std::int64_t{1};
  if (std::holds_alternative<IntegersMod>(r)) return Natural{1};
  if (const auto* pr = std::get_if<PolyRing>(&r)) return Poly::constant(pr->characteristic, 1);
  return Poly::constant(std::get<PolyQuotient>(r).characteristic(), 1);
}

inline BaseElement base_zero(const BaseRing& r) {
  if (std::holds_alternative<Integers>(r)) return std::int64_t{0};
  if (std::holds_alternative<IntegersMod>(r)) return Natural{0};
  if (const auto* pr = std::get_if<PolyRing>(&r)) return Poly::zero(pr->characteristic);
  return Poly::zero(std::get<PolyQuotient>(r).characteristic());
}

}  // namespace detail

inline Element make_element(const RingSpec& ring, std::vector<BaseElement> parts) {
  Element x{std::move(parts)};
  detail::require_arity(ring, x);
  for (std::size_t i = 0; i < ring.arity(); ++i) x.parts[i] = detail::normalize_element(ring.component(i), x.parts[i]);
  return x;
}

inline Element one(const RingSpec& ring) {
  Element x;
  for (const auto& r : ring.components()) x.parts.push_back(detail::base_one(r));
  return x;
}

inline Element zero(const RingSpec& ring) {
  Element x;
  for (const auto& r : ring.components()) x.parts.push_back(detail::base_zero(r));
  return x;
}

inline Element multiply(const RingSpec& ring, const Element& a, const Element& b) {
  detail::require_arity(ring, a);
  detail::require_arity(ring, b);
  Element out;
  for (std::size_t i = 0; i < ring.arity(); ++i) out.parts.push_back(detail::base_mul(ring.component(i), a.parts[i], b.parts[i]));
  return out;
}

inline Element add(const RingSpec& ring, const Element& a, const Element& b) {
  detail::require_arity(ring, a);
  detail::require_arity(ring, b);
  Element out;
  for (std::size_t i = 0; i < ring.arity(); ++i) out.parts.push_back(detail::base_add(ring.component(i), a.parts[i], b.parts[i]));
  return out;
}

/// Number of elements of a finite ring, or nullopt if it would overflow.
inline std::optional<Natural> element_count(const RingSpec& ring) {
  if (!ring.is_finite()) throw InfiniteRingError("element count of an infinite ring");
  Natural total = 1;
  try {
    for (const auto& r : ring.components()) {
      if (const auto* m = std::get_if<IntegersMod>(&r)) {
        total = checked_mul(total, m->modulus);
      } else {
        const auto& q = std::get<PolyQuotient>(r);
        total = checked_mul(total, checked_pow(q.characteristic(), static_cast<unsigned>(q.modulus.degree())));
      }
    }
  } catch (const OverflowError&) {
    return std::nullopt;
  }
  return total;
}

/// Every element of a finite ring; components vary lexicographically with the
/// first component slowest.
inline std::vector<Element> enumerate_elements(const RingSpec& ring, std::size_t max_elements) {
  const auto count = element_count(ring);
  if (!count || *count > max_elements) {
    throw CapExceededError("ring has more than " + std::to_string(max_elements) + " elements");
  }
  std::vector<std::vector<BaseElement>> per;
  for (const auto& r : ring.components()) {
    std::vector<BaseElement> elems;
    if (const auto* m = std::get_if<IntegersMod>(&r)) {
      for (Natural v = 0; v < m->modulus; ++v) elems.emplace_back(v);
    } else {
      const auto& q = std::get<PolyQuotient>(r);
      const auto p = q.characteristic();
      const auto d = static_cast<unsigned>(q.modulus.degree());
      const Natural size = checked_pow(p, d);
      for (Natural idx = 0; idx < size; ++idx) {
        std::vector<std::uint32_t> c(d);
        Natural v = idx;
        for (unsigned i = 0; i < d; ++i) {
          c[i] = static_cast<std::uint32_t>(v % p);
          v /= p;
        }
        elems.emplace_back(Poly(p, std::move(c)));
      }
    }
    per.push_back(std::move(elems));
  }
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(*count));
  std::vector<std::size_t> pos(per.size(), 0);
  while (true) {
    Element x;
    for (std::size_t i = 0; i < per.size(); ++i) x.parts.push_back(per[i][pos[i]]);
    out.push_back(std::move(x));
    std::size_t i = per.size();
    while (i > 0) {
      --i;
      if (++pos[i] < per[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
  }
}

// ---------------------------------------------------------------------------
// Ideals

/// Canonical generator of one component ideal: Natural for Z and Z/n, Poly
/// for polynomial rings and quotients.
using BaseIdeal = std::variant<Natural, Poly>;

struct Ideal {
  RingSpec ring;
  std::vector<BaseIdeal> parts;
  friend bool operator==(const Ideal&, const Ideal&) = default;
};

namespace detail {

inline void require_same_ring(const Ideal& a, const Ideal& b) {
  if (!(a.ring == b.ring)) throw RingMismatchError("ideals belong to different rings");
}

inline BaseIdeal base_whole(const BaseRing& r) {
  if (std::holds_alternative<Integers>(r) || std::holds_alternative<IntegersMod>(r)) return Natural{1};
  if (const auto* pr = std::get_if<PolyRing>(&r)) return Poly::constant(pr->characteristic, 1);
  return Poly::constant(std::get<PolyQuotient>(r).characteristic(), 1);
}

inline BaseIdeal base_zero_ideal(const BaseRing& r) {
  if (std::holds_alternative<Integers>(r)) return Natural{0};
  if (const auto* m = std::get_if<IntegersMod>(&r)) return m->modulus;
  if (const auto* pr = std::get_if<PolyRing>(&r)) return Poly::zero(pr->characteristic);
  return std::get<PolyQuotient>(r).modulus;
}

inline bool base_is_whole(const BaseIdeal& g) {
  if (const auto* n = std::get_if<Natural>(&g)) return *n == 1;
  return std::get<Poly>(g).is_one();
}

inline BaseIdeal base_principal(const BaseRing& r, const BaseElement& x) {
  if (std::holds_alternative<Integers>(r)) return abs_value(std::get<std::int64_t>(x));
  if (const auto* m = std::get_if<IntegersMod>(&r)) return gcd_int(std::get<Natural>(x), m->modulus);
  if (std::holds_alternative<PolyRing>(r)) return make_monic(std::get<Poly>(x));
  return poly_gcd(std::get<Poly>(x), std::get<PolyQuotient>(r).modulus);
}

inline BaseIdeal base_sum(const BaseRing& r, const BaseIdeal& a, const BaseIdeal& b) {
  if (std::holds_alternative<Integers>(r) || std::holds_alternative<IntegersMod>(r)) {
    return gcd_int(std::get<Natural>(a), std::get<Natural>(b));
  }
  return poly_gcd(std::get<Poly>(a), std::get<Poly>(b));
}

inline BaseIdeal base_intersect(const BaseRing& r, const BaseIdeal& a, const BaseIdeal& b) {
  if (std::holds_alternative<Integers>(r) || std::holds_alternative<IntegersMod>(r)) {
    const Natural x = std::get<Natural>(a);
    const Natural y = std::get<Natural>(b);
    if (x == 0 || y == 0) return Natural{0};
    return lcm_int(x, y);
  }
  return poly_lcm(std::get<Poly>(a), std::get<Poly>(b));
}

inline BaseIdeal base_mul(const BaseRing& r, const BaseIdeal& a, const BaseIdeal& b) {
  if (std::holds_alternative<Integers>(r)) return checked_mul(std::get<Natural>(a), std::get<Natural>(b));
  if (const auto* m = std::get_if<IntegersMod>(&r)) {
    // gcd(d1*d2, n) = d1 * gcd(d2, n/d1) because d1 | n.
    const Natural d1 = std::get<Natural>(a);
    return d1 * gcd_int(std::get<Natural>(b), m->modulus / d1);
  }
  const Poly prod = poly_mul(std::get<Poly>(a), std::get<Poly>(b));
  if (const auto* q = std::get_if<PolyQuotient>(&r)) return poly_gcd(prod, q->modulus);
  return make_monic(prod);
}

inline BaseIdeal base_radical(const BaseRing& r, const BaseIdeal& a) {
  if (std::holds_alternative<Integers>(r) || std::holds_alternative<IntegersMod>(r)) {
    const Natural g = std::get<Natural>(a);
    return g == 0 ? Natural{0} : radical_int(g);
  }
  const Poly& g = std::get<Poly>(a);
  if (g.is_zero()) return g;
  return squarefree_kernel(g);
}

// a <= b as ideals: the generator of b divides the generator of a.
inline bool base_leq(const BaseRing& r, const BaseIdeal& a, const BaseIdeal& b) {
  (void)r;
  if (const auto* x = std::get_if<Natural>(&a)) {
    const Natural y = std::get<Natural>(b);
    if (y == 0) return *x == 0;
    return *x % y == 0;
  }
  return poly_divides(std::get<Poly>(b), std::get<Poly>(a));
}

inline BaseIdeal normalize_generator(const BaseRing& r, const BaseIdeal& g) {
  if (std::holds_alternative<Integers>(r)) {
    if (!std::holds_alternative<Natural>(g)) throw RingMismatchError("expected an integer generator");
    return g;
  }
  if (const auto* m = std::get_if<IntegersMod>(&r)) {
    const auto* n = std::get_if<Natural>(&g);
    if (n == nullptr) throw RingMismatchError("expected an integer divisor");
    if (*n == 0 || m->modulus % *n != 0) throw DomainError("ideal divisor must divide the modulus");
    return g;
  }
  const auto* f = std::get_if<Poly>(&g);
  if (f == nullptr) throw RingMismatchError("expected a polynomial generator");
  if (const auto* pr = std::get_if<PolyRing>(&r)) {
    if (f->characteristic() != pr->characteristic) throw RingMismatchError("characteristic mismatch");
    return make_monic(*f);
  }
  const auto& q = std::get<PolyQuotient>(r);
  if (f->characteristic() != q.characteristic()) throw RingMismatchError("characteristic mismatch");
  if (!f->is_monic() || !poly_divides(*f, q.modulus)) throw DomainError("ideal generator must be a monic divisor of the modulus");
  return g;
}

}  // namespace detail

/// Builds an ideal from canonical component generators, validating them.
inline Ideal make_ideal(const RingSpec& ring, std::vector<BaseIdeal> parts) {
  if (parts.size() != ring.arity()) throw RingMismatchError("ideal arity does not match ring arity");
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = detail::normalize_generator(ring.component(i), parts[i]);
  return Ideal{ring, std::move(parts)};
}

inline Ideal whole_ideal(const RingSpec& ring) {
  Ideal out{ring, {}};
  for (const auto& r : ring.components()) out.parts.push_back(detail::base_whole(r));
  return out;
}

inline Ideal zero_ideal(const RingSpec& ring) {
  Ideal out{ring, {}};
  for (const auto& r : ring.components()) out.parts.push_back(detail::base_zero_ideal(r));
  return out;
}

inline bool is_whole(const Ideal& a) {
  for (const auto& g : a.parts) {
    if (!detail::base_is_whole(g)) return false;
  }
  return true;
}

inline bool is_proper(const Ideal& a) { return !is_whole(a); }

inline bool is_zero(const Ideal& a) { return a == zero_ideal(a.ring); }

/// Component ideal i, as an ideal of the i-th component ring.
inline Ideal component_ideal(const Ideal& a, std::size_t i) {
  return Ideal{a.ring.component_ring(i), {a.parts.at(i)}};
}

/// Indices of components where the ideal is not the whole component ring.
inline std::vector<std::size_t> proper_components(const Ideal& a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    if (!detail::base_is_whole(a.parts[i])) out.push_back(i);
  }
  return out;
}

inline Ideal principal(const RingSpec& ring, const Element& x) {
  detail::require_arity(ring, x);
  Ideal out{ring, {}};
  for (std::size_t i = 0; i < ring.arity(); ++i) out.parts.push_back(detail::base_principal(ring.component(i), x.parts[i]));
  return out;
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  detail::require_same_ring(a, b);
  Ideal out{a.ring, {}};
  for (std::size_t i = 0; i < a.parts.size(); ++i) out.parts.push_back(detail::base_sum(a.ring.component(i), a.parts[i], b.parts[i]));
  return out;
}

inline Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  detail::require_same_ring(a, b);
  Ideal out{a.ring, {}};
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    out.parts.push_back(detail::base_intersect(a.ring.component(i), a.parts[i], b.parts[i]));
  }
  return out;
}

inline Ideal ideal_mul(const Ideal& a, const Ideal& b) {
  detail::require_same_ring(a, b);
  Ideal out{a.ring, {}};
  for (std::size_t i = 0; i < a.parts.size(); ++i) out.parts.push_back(detail::base_mul(a.ring.component(i), a.parts[i], b.parts[i]));
  return out;
}

inline Ideal ideal_radical(const Ideal& a) {
  Ideal out{a.ring, {}};
  for (std::size_t i = 0; i < a.parts.size(); ++i) out.parts.push_back(detail::base_radical(a.ring.component(i), a.parts[i]));
  return out;
}

/// a is contained in b.
inline bool ideal_leq(const Ideal& a, const Ideal& b) {
  detail::require_same_ring(a, b);
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    if (!detail::base_leq(a.ring.component(i), a.parts[i], b.parts[i])) return false;
  }
  return true;
}

inline bool contains(const Ideal& a, const Element& x) { return ideal_leq(principal(a.ring, x), a); }

// ---------------------------------------------------------------------------
// Enumeration over finite rings

namespace detail {

inline std::vector<BaseIdeal> base_ideals(const BaseRing& r) {
  std::vector<BaseIdeal> out;
  if (const auto* m = std::get_if<IntegersMod>(&r)) {
    for (Natural d : divisors(m->modulus)) out.emplace_back(d);
  } else if (const auto* q = std::get_if<PolyQuotient>(&r)) {
    for (auto& g : monic_divisors(q->modulus)) out.emplace_back(std::move(g));
  } else {
    throw InfiniteRingError("ideal enumeration over an infinite ring");
  }
  return out;
}

// Generator of a component ideal read as an element (d mod n, g mod f).
inline BaseElement base_representative(const BaseRing& r, const BaseIdeal& g) {
  if (const auto* m = std::get_if<IntegersMod>(&r)) return std::get<Natural>(g) % m->modulus;
  if (const auto* q = std::get_if<PolyQuotient>(&r)) return poly_mod(std::get<Poly>(g), q->modulus);
  if (std::holds_alternative<Integers>(r)) return static_cast<std::int64_t>(std::get<Natural>(g));
  return std::get<Poly>(g);
}

inline std::size_t base_ideal_count(const BaseRing& r) {
  if (const auto* m = std::get_if<IntegersMod>(&r)) {
    std::size_t c = 1;
    for (const auto& pp : factor_int(m->modulus).factors) c *= pp.exponent + 1;
    return c;
  }
  if (const auto* q = std::get_if<PolyQuotient>(&r)) {
    std::size_t c = 1;
    for (const auto& [g, e] : factor_poly(q->modulus).factors) c *= e + 1;
    return c;
  }
  throw InfiniteRingError("ideal count of an infinite ring");
}

}  // namespace detail

/// Number of ideals of a finite ring: the product of component divisor counts.
inline std::size_t ideal_count(const RingSpec& ring) {
  std::size_t total = 1;
  for (const auto& r : ring.components()) total = checked_mul(total, detail::base_ideal_count(r));
  return total;
}

/// All ideals of a finite ring in divisor order per component, components
/// lexicographic with the first slowest.
inline std::vector<Ideal> enumerate_ideals(const RingSpec& ring, std::size_t max_ideals) {
  if (!ring.is_finite()) throw InfiniteRingError("ideal enumeration over an infinite ring");
  const std::size_t count = ideal_count(ring);
  if (count > max_ideals) {
    throw CapExceededError("ring has " + std::to_string(count) + " ideals, cap is " + std::to_string(max_ideals));
  }
  std::vector<std::vector<BaseIdeal>> per;
  for (const auto& r : ring.components()) per.push_back(detail::base_ideals(r));
  std::vector<Ideal> out;
  out.reserve(count);
  std::vector<std::size_t> pos(per.size(), 0);
  while (true) {
    Ideal a{ring, {}};
    for (std::size_t i = 0; i < per.size(); ++i) a.parts.push_back(per[i][pos[i]]);
    out.push_back(std::move(a));
    std::size_t i = per.size();
    while (i > 0) {
      --i;
      if (++pos[i] < per[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
  }
}

struct PrincipalRep {
  Ideal ideal;
  Element element;
};

/// One generating element per ideal. Every ideal of a supported ring is
/// principal and (a)(b) = (ab), so conditions on products of elements only
/// depend on the ideals the elements generate.
inline std::vector<PrincipalRep> enumerate_principal_reps(const RingSpec& ring, std::size_t max_ideals) {
  std::vector<PrincipalRep> out;
  for (auto& a : enumerate_ideals(ring, max_ideals)) {
    Element x;
    for (std::size_t i = 0; i < ring.arity(); ++i) x.parts.push_back(detail::base_representative(ring.component(i), a.parts[i]));
    out.push_back({std::move(a), std::move(x)});
  }
  return out;
}

/// Generator of an ideal as a ring element (the canonical generator, reduced).
inline Element generator_element(const Ideal& a) {
  Element x;
  for (std::size_t i = 0; i < a.ring.arity(); ++i) x.parts.push_back(detail::base_representative(a.ring.component(i), a.parts[i]));
  return x;
}

// ---------------------------------------------------------------------------
// Quotient maps

/// Surjection R -> R/H onto the canonical model of the quotient.
struct QuotientMap {
  RingSpec domain;
  Ideal kernel;
  RingSpec codomain;
};

/// Every kernel component must be proper; a zero kernel component is only
/// allowed over finite components.
inline QuotientMap quotient_map(const RingSpec& ring, const Ideal& kernel) {
  if (!(kernel.ring == ring)) throw RingMismatchError("kernel is not an ideal of the domain");
  std::vector<BaseRing> parts;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    const auto& r = ring.component(i);
    const auto& h = kernel.parts[i];
    if (detail::base_is_whole(h)) throw NotProperError("quotient kernel component " + std::to_string(i) + " is the whole ring");
    if (std::holds_alternative<Integers>(r)) {
      const Natural d = std::get<Natural>(h);
      if (d == 0) throw DomainError("quotient of Z by the zero ideal is not finite");
      parts.push_back(make_integers_mod(d));
    } else if (std::holds_alternative<IntegersMod>(r)) {
      parts.push_back(make_integers_mod(std::get<Natural>(h)));
    } else {
      const Poly& g = std::get<Poly>(h);
      if (g.is_zero()) throw DomainError("quotient of GF(p)[x] by the zero ideal is not finite");
      parts.push_back(make_poly_quotient(g));
    }
  }
  return QuotientMap{ring, kernel, RingSpec::from_parts(std::move(parts))};
}

/// Image of an ideal: (I + H) / H.
inline Ideal extend(const QuotientMap& map, const Ideal& a) {
  if (!(a.ring == map.domain)) throw RingMismatchError("ideal is not in the quotient domain");
  const Ideal s = ideal_sum(a, map.kernel);
  return Ideal{map.codomain, s.parts};
}

/// Preimage of an ideal of the codomain.
inline Ideal contract(const QuotientMap& map, const Ideal& b) {
  if (!(b.ring == map.codomain)) throw RingMismatchError("ideal is not in the quotient codomain");
  return Ideal{map.domain, b.parts};
}

}  // namespace idealis
