#pragma once

// Brute-force definitional checkers over finite rings.
//
// Every checker quantifies exhaustively over the ideals of the ring (or over
// one generating element per ideal, for element-quantified definitions) and
// reports the first violating tuple in enumeration order. The ideal lattice
// is precomputed into index tables so that the inner loops are lookups.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "idealis/error.hpp"
#include "idealis/parse.hpp"
#include "idealis/ring.hpp"

namespace idealis {

inline constexpr std::size_t kDefaultMaxIdeals = 512;

struct OracleOptions {
  std::size_t max_ideals = kDefaultMaxIdeals;
  unsigned threads = 1;
};

/// The ten classified properties of a proper ideal.
enum class Predicate {
  Prime,
  Primary,
  Radical,
  Irreducible,
  StronglyIrreducible,
  TwoIrreducible,
  StronglyTwoIrreducible,
  SinglyStronglyTwoIrreducible,
  TwoAbsorbing,
  TwoAbsorbingPrimary,
};

inline constexpr std::array<Predicate, 10> kAllPredicates = {
    Predicate::Prime,
    Predicate::Primary,
    Predicate::Radical,
    Predicate::Irreducible,
    Predicate::StronglyIrreducible,
    Predicate::TwoIrreducible,
    Predicate::StronglyTwoIrreducible,
    Predicate::SinglyStronglyTwoIrreducible,
    Predicate::TwoAbsorbing,
    Predicate::TwoAbsorbingPrimary,
};

/// snake_case name used in Classification output.
inline std::string_view field_name(Predicate p) {
  switch (p) {
    case Predicate::Prime: return "prime";
    case Predicate::Primary: return "primary";
    case Predicate::Radical: return "radical";
    case Predicate::Irreducible: return "irreducible";
    case Predicate::StronglyIrreducible: return "strongly_irreducible";
    case Predicate::TwoIrreducible: return "two_irreducible";
    case Predicate::StronglyTwoIrreducible: return "strongly_two_irreducible";
    case Predicate::SinglyStronglyTwoIrreducible: return "singly_strongly_two_irreducible";
    case Predicate::TwoAbsorbing: return "two_absorbing";
    case Predicate::TwoAbsorbingPrimary: return "two_absorbing_primary";
  }
  return "";
}

/// kebab-case alias used on the command line.
inline std::string_view flag_name(Predicate p) {
  switch (p) {
    case Predicate::Prime: return "prime";
    case Predicate::Primary: return "primary";
    case Predicate::Radical: return "radical";
    case Predicate::Irreducible: return "irreducible";
    case Predicate::StronglyIrreducible: return "strongly-irreducible";
    case Predicate::TwoIrreducible: return "2-irreducible";
    case Predicate::StronglyTwoIrreducible: return "strongly-2-irreducible";
    case Predicate::SinglyStronglyTwoIrreducible: return "singly-strongly-2-irreducible";
    case Predicate::TwoAbsorbing: return "2-absorbing";
    case Predicate::TwoAbsorbingPrimary: return "2-absorbing-primary";
  }
  return "";
}

inline std::optional<Predicate> predicate_from_flag(std::string_view name) {
  for (Predicate p : kAllPredicates) {
    if (flag_name(p) == name || field_name(p) == name) return p;
  }
  return std::nullopt;
}

inline std::size_t predicate_index(Predicate p) { return static_cast<std::size_t>(p); }

enum class WitnessKind { Element, ElementPair, ElementTriple, IdealPair, IdealTriple, Exhausted };

inline std::string_view witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::Element: return "element";
    case WitnessKind::ElementPair: return "element-pair";
    case WitnessKind::ElementTriple: return "element-triple";
    case WitnessKind::IdealPair: return "ideal-pair";
    case WitnessKind::IdealTriple: return "ideal-triple";
    case WitnessKind::Exhausted: return "exhausted";
  }
  return "";
}

/// A violating tuple. `condition` names the definition it violates (a
/// predicate flag name, "triple-cover", "arithmetical", "von-neumann-regular"
/// or "n-primary").
struct Witness {
  std::string condition;
  WitnessKind kind = WitnessKind::Exhausted;
  std::vector<Element> elements;
  std::vector<Ideal> ideals;
  std::vector<std::string> failed_disjuncts;
  unsigned parameter = 0;  // n for n-primary
};

struct PredicateResult {
  bool holds = true;
  std::optional<Witness> witness;
  std::uint64_t cases_checked = 0;
};

/// Ideal lattice of a finite ring with meet, join, product and radical
/// precomputed as index tables. Index order is enumerate_ideals order.
class IdealTable {
 public:
  IdealTable(const RingSpec& ring, const OracleOptions& options = {}) : ring_(ring), threads_(std::max(1u, options.threads)) {
    if (!ring.is_finite()) throw InfiniteRingError("oracle requires a finite ring, got " + format_ring(ring));
    reps_ = enumerate_principal_reps(ring, options.max_ideals);
    n_ = reps_.size();
    build();
  }

  const RingSpec& ring() const { return ring_; }
  std::size_t size() const { return n_; }
  unsigned threads() const { return threads_; }
  const Ideal& ideal(std::size_t i) const { return reps_[i].ideal; }
  const Element& rep(std::size_t i) const { return reps_[i].element; }

  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * n_ + j]; }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i * n_ + j]; }
  std::size_t product(std::size_t i, std::size_t j) const { return mul_[i * n_ + j]; }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * n_ + j] != 0; }
  std::size_t radical(std::size_t i) const { return rad_[i]; }
  std::size_t whole() const { return 0; }
  std::size_t zero() const { return n_ - 1; }
  bool is_proper(std::size_t i) const { return i != whole(); }

  std::size_t index_of(const Ideal& a) const {
    if (!(a.ring == ring_)) throw RingMismatchError("ideal is not in the tabulated ring");
    std::size_t idx = 0;
    for (std::size_t c = 0; c < a.parts.size(); ++c) {
      const auto it = component_index_[c].find(a.parts[c]);
      if (it == component_index_[c].end()) throw DomainError("ideal is not canonical for its ring");
      idx = idx * component_size_[c] + it->second;
    }
    return idx;
  }

 private:
  void build() {
    const std::size_t k = ring_.arity();
    std::vector<std::vector<BaseIdeal>> comp(k);
    component_index_.resize(k);
    component_size_.resize(k);
    for (std::size_t c = 0; c < k; ++c) {
      comp[c] = detail::base_ideals(ring_.component(c));
      component_size_[c] = comp[c].size();
      for (std::size_t i = 0; i < comp[c].size(); ++i) component_index_[c].emplace(comp[c][i], i);
    }
    // Per-component tables, then combine by mixed radix.
    struct CompTables {
      std::vector<std::size_t> meet, join, mul, rad;
      std::vector<char> leq;
    };
    std::vector<CompTables> ct(k);
    for (std::size_t c = 0; c < k; ++c) {
      const auto& r = ring_.component(c);
      const std::size_t m = comp[c].size();
      auto idx = [&](const BaseIdeal& g) { return component_index_[c].at(g); };
      ct[c].meet.resize(m * m);
      ct[c].join.resize(m * m);
      ct[c].mul.resize(m * m);
      ct[c].leq.resize(m * m);
      ct[c].rad.resize(m);
      for (std::size_t i = 0; i < m; ++i) {
        ct[c].rad[i] = idx(detail::base_radical(r, comp[c][i]));
        for (std::size_t j = 0; j < m; ++j) {
          ct[c].meet[i * m + j] = idx(detail::base_intersect(r, comp[c][i], comp[c][j]));
          ct[c].join[i * m + j] = idx(detail::base_sum(r, comp[c][i], comp[c][j]));
          ct[c].mul[i * m + j] = idx(detail::base_mul(r, comp[c][i], comp[c][j]));
          ct[c].leq[i * m + j] = detail::base_leq(r, comp[c][i], comp[c][j]) ? 1 : 0;
        }
      }
    }
    auto digits = [&](std::size_t i) {
      std::vector<std::size_t> d(k);
      for (std::size_t c = k; c-- > 0;) {
        d[c] = i % component_size_[c];
        i /= component_size_[c];
      }
      return d;
    };
    std::vector<std::vector<std::size_t>> dig(n_);
    for (std::size_t i = 0; i < n_; ++i) dig[i] = digits(i);
    meet_.resize(n_ * n_);
    join_.resize(n_ * n_);
    mul_.resize(n_ * n_);
    leq_.resize(n_ * n_);
    rad_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      std::size_t r = 0;
      for (std::size_t c = 0; c < k; ++c) r = r * component_size_[c] + ct[c].rad[dig[i][c]];
      rad_[i] = r;
      for (std::size_t j = 0; j < n_; ++j) {
        std::size_t me = 0, jo = 0, mu = 0;
        bool le = true;
        for (std::size_t c = 0; c < k; ++c) {
          const std::size_t m = component_size_[c];
          const std::size_t a = dig[i][c], b = dig[j][c];
          me = me * m + ct[c].meet[a * m + b];
          jo = jo * m + ct[c].join[a * m + b];
          mu = mu * m + ct[c].mul[a * m + b];
          le = le && ct[c].leq[a * m + b] != 0;
        }
        meet_[i * n_ + j] = static_cast<std::uint32_t>(me);
        join_[i * n_ + j] = static_cast<std::uint32_t>(jo);
        mul_[i * n_ + j] = static_cast<std::uint32_t>(mu);
        leq_[i * n_ + j] = le ? 1 : 0;
      }
    }
  }

  RingSpec ring_;
  unsigned threads_;
  std::vector<PrincipalRep> reps_;
  std::size_t n_ = 0;
  std::vector<std::map<BaseIdeal, std::size_t>> component_index_;
  std::vector<std::size_t> component_size_;
  std::vector<std::uint32_t> meet_, join_, mul_;
  std::vector<char> leq_;
  std::vector<std::uint32_t> rad_;
};

namespace detail {

template <std::size_t K>
struct SearchResult {
  std::optional<std::array<std::size_t, K>> hit;
  std::uint64_t cases = 0;
};

template <std::size_t K>
std::array<std::size_t, K> decode_tuple(std::uint64_t t, std::size_t n) {
  std::array<std::size_t, K> out{};
  for (std::size_t i = K; i-- > 0;) {
    out[i] = static_cast<std::size_t>(t % n);
    t /= n;
  }
  return out;
}

inline constexpr std::uint64_t kParallelThreshold = 1u << 15;

// First tuple in lexicographic order over {0..n-1}^K for which `violates`
// is true. The range is split into contiguous chunks, one per thread; the
// lowest chunk holding a hit wins, so the answer is thread-count invariant.
// `cases` is the 1-based position of the hit, or n^K.
template <std::size_t K, class Violates>
SearchResult<K> first_violation(std::size_t n, unsigned threads, const Violates& violates) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < K; ++i) total *= n;
  SearchResult<K> result;
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) -> std::optional<std::uint64_t> {
    for (std::uint64_t t = lo; t < hi; ++t) {
      if (violates(decode_tuple<K>(t, n))) return t;
    }
    return std::nullopt;
  };
  std::optional<std::uint64_t> found;
  if (threads <= 1 || total < kParallelThreshold) {
    found = scan(0, total);
  } else {
    const std::uint64_t chunks = threads;
    std::vector<std::optional<std::uint64_t>> hits(chunks);
    std::vector<std::thread> pool;
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t lo = total * c / chunks;
      const std::uint64_t hi = total * (c + 1) / chunks;
      pool.emplace_back([&, c, lo, hi] { hits[c] = scan(lo, hi); });
    }
    for (auto& t : pool) t.join();
    for (const auto& h : hits) {
      if (h) {
        found = h;
        break;
      }
    }
  }
  if (found) {
    result.hit = decode_tuple<K>(*found, n);
    result.cases = *found + 1;
  } else {
    result.cases = total;
  }
  return result;
}

inline void require_proper(const IdealTable& t, std::size_t i) {
  if (!t.is_proper(i)) throw NotProperError("predicate requires a proper ideal");
}

template <std::size_t K>
PredicateResult element_result(const IdealTable& t, const SearchResult<K>& s, std::string condition, WitnessKind kind,
                               std::vector<std::string> disjuncts) {
  PredicateResult r;
  r.cases_checked = s.cases;
  r.holds = !s.hit.has_value();
  if (s.hit) {
    Witness w;
    w.condition = std::move(condition);
    w.kind = kind;
    for (std::size_t i : *s.hit) w.elements.push_back(t.rep(i));
    w.failed_disjuncts = std::move(disjuncts);
    r.witness = std::move(w);
  }
  return r;
}

template <std::size_t K>
PredicateResult ideal_result(const IdealTable& t, const SearchResult<K>& s, std::string condition, WitnessKind kind,
                             std::vector<std::string> disjuncts) {
  PredicateResult r;
  r.cases_checked = s.cases;
  r.holds = !s.hit.has_value();
  if (s.hit) {
    Witness w;
    w.condition = std::move(condition);
    w.kind = kind;
    for (std::size_t i : *s.hit) w.ideals.push_back(t.ideal(i));
    w.failed_disjuncts = std::move(disjuncts);
    r.witness = std::move(w);
  }
  return r;
}

}  // namespace detail

// Element-quantified checks read "ab in I" as (a)(b) <= I.

/// ab in I => a in I or b in I.
inline PredicateResult is_prime_bf(const IdealTable& t, std::size_t I) {
  detail::require_proper(t, I);
  auto s = detail::first_violation<2>(t.size(), t.threads(), [&](const auto& v) {
    return t.leq(t.product(v[0], v[1]), I) && !t.leq(v[0], I) && !t.leq(v[1], I);
  });
  return detail::element_result(t, s, "prime", WitnessKind::ElementPair, {"a in I", "b in I"});
}

/// ab in I => a in I or b in sqrt(I).
inline PredicateResult is_primary_bf(const IdealTable& t, std::size_t I) {
  detail::require_proper(t, I);
  const std::size_t rad = t.radical(I);
  auto s = detail::first_violation<2>(t.size(), t.threads(), [&](const auto& v) {
    return t.leq(t.product(v[0], v[1]), I) && !t.leq(v[0], I) && !t.leq(v[1], rad);
  });
  return detail::element_result(t, s, "primary", WitnessKind::ElementPair, {"a in I", "b in sqrt(I)"});
}

/// sqrt(I) = I; a witness is an element of sqrt(I) outside I.
inline PredicateResult is_radical_bf(const IdealTable& t, std::size_t I) {
  detail::require_proper(t, I);
  const std::size_t rad = t.radical(I);
  auto s = detail::first_violation<1>(t.size(), t.threads(), [&](const auto& v) { return t.leq(v[0], rad) && !t.leq(v[0], I); });
  return detail::element_result(t, s, "radical", WitnessKind::Element, {"x in I"});
}

/// No J, K with I = J meet K, J != I, K != I.
inline PredicateResult is_irreducible_bf(const IdealTable& t, std::size_t I) {
  detail::require_proper(t, I);
  auto s = detail::first_violation<2>(t.size(), t.threads(), [&](const auto& v) {
    return t.meet(v[0], v[1]) == I && v[0] != I && v[1] != I;
  });
  return detail::ideal_result(t, s, "irreducible", WitnessKind::IdealPair, {"I = J", "I = K"});
}

/// J meet K <= I => J <= I or K <= I.
inline PredicateResult is_strongly_irreducible_bf(const IdealTable& t, std::size_t I) {
  detail::require_proper(t, I);
  auto s = detail::first_violation<2>(t.size(), t.threads(), [&](const auto& v) {
    return t.leq(t.meet(v[0], v[1]), I) && !t.leq(v[0], I) && !t.leq(v[1], I);
  });
  return detail::ideal_result(t, s, "strongly-irreducible", WitnessKind::IdealPair, {"J <= I", "K <= I"});
}

/// I = J meet K meet L => I equals one of the pairwise meets.
inline PredicateResult is_2_irreducible_bf(const IdealTable& t, std::size_t I) {
  detail::require_proper(t, I);
  auto s = detail::first_violation<3>(t.size(), t.threads(), [&](const auto& v) {
    const std::size_t jk = t.meet(v[0], v[1]), jl = t.meet(v[0], v[2]), kl = t.meet(v[1], v[2]);
    return t.meet(jk, v[2]) == I && jk != I && jl != I && kl != I;
  });
  return detail::ideal_result(t, s, "2-irreducible", WitnessKind::IdealTriple,
                              {"I = J meet K", "I = J meet L", "I = K meet L"});
}

namespace detail {

inline bool strongly_2_irreducible_violated(const IdealTable& t, std::size_t I, std::size_t j, std::size_t k, std::size_t l) {
  const std::size_t jk = t.meet(j, k), jl = t.meet(j, l), kl = t.meet(k, l);
  return t.leq(t.meet(jk, l), I) && !t.leq(jk, I) && !t.leq(jl, I) && !t.leq(kl, I);
}

}  // namespace detail

/// J meet K meet L <= I => some pairwise meet <= I.
inline PredicateResult is_strongly_2_irreducible_bf(const IdealTable& t, std::size_t I) {
  detail::require_proper(t, I);
  auto s = detail::first_violation<3>(t.size(), t.threads(), [&](const auto& v) {
    return detail::strongly_2_irreducible_violated(t, I, v[0], v[1], v[2]);
  });
  return detail::ideal_result(t, s, "strongly-2-irreducible", WitnessKind::IdealTriple,
                              {"J meet K <= I", "J meet L <= I", "K meet L <= I"});
}

/// The strongly 2-irreducible condition for principal Rx, Ry, Rz. Each
/// principal ideal is the ideal of its representative, so the loop runs over
/// representatives.
inline PredicateResult is_singly_strongly_2_irreducible_bf(const IdealTable& t, std::size_t I) {
  detail::require_proper(t, I);
  auto s = detail::first_violation<3>(t.size(), t.threads(), [&](const auto& v) {
    return detail::strongly_2_irreducible_violated(t, I, v[0], v[1], v[2]);
  });
  return detail::element_result(t, s, "singly-strongly-2-irreducible", WitnessKind::ElementTriple,
                                {"Rx meet Ry <= I", "Rx meet Rz <= I", "Ry meet Rz <= I"});
}

/// abc in I => ab in I or ac in I or bc in I.
inline PredicateResult is_2_absorbing_bf(const IdealTable& t, std::size_t I) {
  detail::require_proper(t, I);
  auto s = detail::first_violation<3>(t.size(), t.threads(), [&](const auto& v) {
    const std::size_t ab = t.product(v[0], v[1]), ac = t.product(v[0], v[2]), bc = t.product(v[1], v[2]);
    return t.leq(t.product(ab, v[2]), I) && !t.leq(ab, I) && !t.leq(ac, I) && !t.leq(bc, I);
  });
  return detail::element_result(t, s, "2-absorbing", WitnessKind::ElementTriple, {"ab in I", "ac in I", "bc in I"});
}

/// abc in I => ab in I or ac in sqrt(I) or bc in sqrt(I).
inline PredicateResult is_2_absorbing_primary_bf(const IdealTable& t, std::size_t I) {
  detail::require_proper(t, I);
  const std::size_t rad = t.radical(I);
  auto s = detail::first_violation<3>(t.size(), t.threads(), [&](const auto& v) {
    const std::size_t ab = t.product(v[0], v[1]), ac = t.product(v[0], v[2]), bc = t.product(v[1], v[2]);
    return t.leq(t.product(ab, v[2]), I) && !t.leq(ab, I) && !t.leq(ac, rad) && !t.leq(bc, rad);
  });
  return detail::element_result(t, s, "2-absorbing-primary", WitnessKind::ElementTriple,
                                {"ab in I", "ac in sqrt(I)", "bc in sqrt(I)"});
}

/// With A = Rx+Ry, B = Rx+Rz, C = Ry+Rz: A meet B meet C <= I implies some
/// pairwise meet of A, B, C lies in I.
inline PredicateResult triple_cover_condition_bf(const IdealTable& t, std::size_t I) {
  detail::require_proper(t, I);
  auto s = detail::first_violation<3>(t.size(), t.threads(), [&](const auto& v) {
    const std::size_t a = t.join(v[0], v[1]), b = t.join(v[0], v[2]), c = t.join(v[1], v[2]);
    return detail::strongly_2_irreducible_violated(t, I, a, b, c);
  });
  return detail::element_result(t, s, "triple-cover", WitnessKind::ElementTriple,
                                {"A meet B <= I", "A meet C <= I", "B meet C <= I"});
}

/// (I + J) meet K = (I meet K) + (J meet K) for all ideal triples.
inline PredicateResult is_arithmetical_bf(const IdealTable& t) {
  auto s = detail::first_violation<3>(t.size(), t.threads(), [&](const auto& v) {
    return t.meet(t.join(v[0], v[1]), v[2]) != t.join(t.meet(v[0], v[2]), t.meet(v[1], v[2]));
  });
  return detail::ideal_result(t, s, "arithmetical", WitnessKind::IdealTriple, {"(I+J) meet K = (I meet K)+(J meet K)"});
}

/// IJ = I meet J for all ideal pairs.
inline PredicateResult is_von_neumann_regular_bf(const IdealTable& t) {
  auto s = detail::first_violation<2>(t.size(), t.threads(),
                                      [&](const auto& v) { return t.product(v[0], v[1]) != t.meet(v[0], v[1]); });
  return detail::ideal_result(t, s, "von-neumann-regular", WitnessKind::IdealPair, {"IJ = I meet J"});
}

/// Indices of the ideals in `candidates` that satisfy `pred`.
inline std::vector<std::size_t> ideals_where(const IdealTable& t, const std::function<bool(std::size_t)>& pred) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (pred(i)) out.push_back(i);
  }
  return out;
}

/// Smallest-index n primary ideals (with repetition) meeting to I.
inline std::optional<std::vector<std::size_t>> find_primary_decomposition(const IdealTable& t, std::size_t I, unsigned n,
                                                                          std::uint64_t* cases = nullptr) {
  detail::require_proper(t, I);
  if (n == 0) throw DomainError("n-primary requires n >= 1");
  const auto primaries = ideals_where(t, [&](std::size_t j) { return t.is_proper(j) && t.leq(I, j) && is_primary_bf(t, j).holds; });
  std::vector<std::size_t> chosen;
  std::uint64_t count = 0;
  std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t acc) {
    if (chosen.size() == n) {
      ++count;
      return acc == I;
    }
    for (std::size_t k = start; k < primaries.size(); ++k) {
      chosen.push_back(primaries[k]);
      if (search(k, t.meet(acc, primaries[k]))) return true;
      chosen.pop_back();
    }
    return false;
  };
  const bool ok = search(0, t.whole());
  if (cases != nullptr) *cases = count;
  if (!ok) return std::nullopt;
  return chosen;
}

/// I is an intersection of n (not necessarily distinct) primary ideals.
inline PredicateResult is_n_primary_bf(const IdealTable& t, std::size_t I, unsigned n) {
  PredicateResult r;
  const auto found = find_primary_decomposition(t, I, n, &r.cases_checked);
  r.holds = found.has_value();
  if (!r.holds) {
    Witness w;
    w.condition = "n-primary";
    w.kind = WitnessKind::Exhausted;
    w.ideals.push_back(t.ideal(I));
    w.parameter = n;
    w.failed_disjuncts = {"I = Q1 meet ... meet Q" + std::to_string(n) + " with each Qi primary"};
    r.witness = std::move(w);
  }
  return r;
}

/// Irreducible ideals meeting to I, at most `max_parts` (1 or 2) of them.
inline std::optional<std::vector<Ideal>> find_irreducible_decomposition(const IdealTable& t, std::size_t I, unsigned max_parts) {
  detail::require_proper(t, I);
  if (max_parts < 1 || max_parts > 2) throw DomainError("max_parts must be 1 or 2");
  if (is_irreducible_bf(t, I).holds) return std::vector<Ideal>{t.ideal(I)};
  if (max_parts == 1) return std::nullopt;
  const auto irr = ideals_where(t, [&](std::size_t j) { return t.is_proper(j) && t.leq(I, j) && is_irreducible_bf(t, j).holds; });
  for (std::size_t a = 0; a < irr.size(); ++a) {
    for (std::size_t b = a + 1; b < irr.size(); ++b) {
      if (t.meet(irr[a], irr[b]) == I) return std::vector<Ideal>{t.ideal(irr[a]), t.ideal(irr[b])};
    }
  }
  return std::nullopt;
}

inline PredicateResult evaluate_bf(const IdealTable& t, std::size_t I, Predicate p) {
  switch (p) {
    case Predicate::Prime: return is_prime_bf(t, I);
    case Predicate::Primary: return is_primary_bf(t, I);
    case Predicate::Radical: return is_radical_bf(t, I);
    case Predicate::Irreducible: return is_irreducible_bf(t, I);
    case Predicate::StronglyIrreducible: return is_strongly_irreducible_bf(t, I);
    case Predicate::TwoIrreducible: return is_2_irreducible_bf(t, I);
    case Predicate::StronglyTwoIrreducible: return is_strongly_2_irreducible_bf(t, I);
    case Predicate::SinglyStronglyTwoIrreducible: return is_singly_strongly_2_irreducible_bf(t, I);
    case Predicate::TwoAbsorbing: return is_2_absorbing_bf(t, I);
    case Predicate::TwoAbsorbingPrimary: return is_2_absorbing_primary_bf(t, I);
  }
  throw DomainError("unknown predicate");
}

/// Convenience entry point building the table for a single query.
inline PredicateResult evaluate_bf(const RingSpec& ring, const Ideal& I, Predicate p, const OracleOptions& options = {}) {
  const IdealTable t(ring, options);
  return evaluate_bf(t, t.index_of(I), p);
}

// ---------------------------------------------------------------------------
// Independent re-verification of witnesses, using ring operations directly.

namespace detail {

inline constexpr unsigned kMaxNilpotencyProbe = 128;

// x in sqrt(I) by repeated multiplication.
inline bool in_radical_by_powers(const Ideal& I, const Element& x) {
  Element power = x;
  for (unsigned k = 1; k <= kMaxNilpotencyProbe; ++k) {
    if (contains(I, power)) return true;
    power = multiply(I.ring, power, x);
  }
  return false;
}

}  // namespace detail

/// Replays the violated definition at the witness: the premise must hold and
/// every listed conclusion must fail.
inline bool witness_replays(const Ideal& I, const Witness& w) {
  const RingSpec& R = I.ring;
  auto mul = [&](const Element& a, const Element& b) { return multiply(R, a, b); };
  auto in = [&](const Element& x) { return contains(I, x); };
  auto in_rad = [&](const Element& x) { return detail::in_radical_by_powers(I, x); };
  auto meet = [](const Ideal& a, const Ideal& b) { return ideal_intersect(a, b); };
  auto le = [&](const Ideal& a) { return ideal_leq(a, I); };
  const auto& e = w.elements;
  const auto& d = w.ideals;
  const std::string& c = w.condition;
  if (c == "prime" && e.size() == 2) return in(mul(e[0], e[1])) && !in(e[0]) && !in(e[1]);
  if (c == "primary" && e.size() == 2) return in(mul(e[0], e[1])) && !in(e[0]) && !in_rad(e[1]);
  if (c == "radical" && e.size() == 1) return in_rad(e[0]) && !in(e[0]);
  if (c == "irreducible" && d.size() == 2) return meet(d[0], d[1]) == I && !(d[0] == I) && !(d[1] == I);
  if (c == "strongly-irreducible" && d.size() == 2) return le(meet(d[0], d[1])) && !le(d[0]) && !le(d[1]);
  if (c == "2-irreducible" && d.size() == 3) {
    return meet(meet(d[0], d[1]), d[2]) == I && !(meet(d[0], d[1]) == I) && !(meet(d[0], d[2]) == I) &&
           !(meet(d[1], d[2]) == I);
  }
  auto s2i_violated = [&](const Ideal& j, const Ideal& k, const Ideal& l) {
    return le(meet(meet(j, k), l)) && !le(meet(j, k)) && !le(meet(j, l)) && !le(meet(k, l));
  };
  if (c == "strongly-2-irreducible" && d.size() == 3) return s2i_violated(d[0], d[1], d[2]);
  if (c == "singly-strongly-2-irreducible" && e.size() == 3) {
    return s2i_violated(principal(R, e[0]), principal(R, e[1]), principal(R, e[2]));
  }
  if (c == "triple-cover" && e.size() == 3) {
    const Ideal x = principal(R, e[0]), y = principal(R, e[1]), z = principal(R, e[2]);
    return s2i_violated(ideal_sum(x, y), ideal_sum(x, z), ideal_sum(y, z));
  }
  if (c == "2-absorbing" && e.size() == 3) {
    return in(mul(mul(e[0], e[1]), e[2])) && !in(mul(e[0], e[1])) && !in(mul(e[0], e[2])) && !in(mul(e[1], e[2]));
  }
  if (c == "2-absorbing-primary" && e.size() == 3) {
    return in(mul(mul(e[0], e[1]), e[2])) && !in(mul(e[0], e[1])) && !in_rad(mul(e[0], e[2])) &&
           !in_rad(mul(e[1], e[2]));
  }
  if (c == "arithmetical" && d.size() == 3) {
    return !(meet(ideal_sum(d[0], d[1]), d[2]) == ideal_sum(meet(d[0], d[2]), meet(d[1], d[2])));
  }
  if (c == "von-neumann-regular" && d.size() == 2) return !(ideal_mul(d[0], d[1]) == meet(d[0], d[1]));
  if (c == "n-primary" && d.size() == 1) {
    const IdealTable t(R);
    return !find_primary_decomposition(t, t.index_of(d[0]), w.parameter).has_value();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Element-level validation mode: quantify over every ring element instead of
// one representative per ideal. Used to certify the representative reduction
// on small rings.

inline constexpr std::size_t kElementLevelMaxElements = 64;

inline PredicateResult element_level_bf(const Ideal& I, Predicate p, std::size_t max_elements = kElementLevelMaxElements) {
  const RingSpec& R = I.ring;
  if (!is_proper(I)) throw NotProperError("predicate requires a proper ideal");
  const auto elems = enumerate_elements(R, max_elements);
  const std::size_t n = elems.size();
  auto index = [&](const Element& x) {
    for (std::size_t i = 0; i < n; ++i) {
      if (elems[i] == x) return i;
    }
    throw DomainError("element not found in enumeration");
  };
  std::vector<std::size_t> mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = index(multiply(R, elems[i], elems[j]));
  }
  std::vector<char> in(n), in_rad(n);
  for (std::size_t i = 0; i < n; ++i) {
    in[i] = contains(I, elems[i]) ? 1 : 0;
    in_rad[i] = detail::in_radical_by_powers(I, elems[i]) ? 1 : 0;
  }
  auto m = [&](std::size_t a, std::size_t b) { return mul[a * n + b]; };
  const IdealTable t(R);
  const std::size_t Ii = t.index_of(I);
  std::vector<std::size_t> ideal_of(n);
  for (std::size_t i = 0; i < n; ++i) ideal_of[i] = t.index_of(principal(R, elems[i]));

  PredicateResult r;
  auto finish = [&](auto s, WitnessKind kind) {
    r.cases_checked = s.cases;
    r.holds = !s.hit.has_value();
    if (s.hit) {
      Witness w;
      w.condition = std::string(flag_name(p));
      w.kind = kind;
      for (std::size_t i : *s.hit) w.elements.push_back(elems[i]);
      r.witness = std::move(w);
    }
    return r;
  };
  switch (p) {
    case Predicate::Prime:
      return finish(detail::first_violation<2>(n, 1, [&](const auto& v) { return in[m(v[0], v[1])] && !in[v[0]] && !in[v[1]]; }),
                    WitnessKind::ElementPair);
    case Predicate::Primary:
      return finish(
          detail::first_violation<2>(n, 1, [&](const auto& v) { return in[m(v[0], v[1])] && !in[v[0]] && !in_rad[v[1]]; }),
          WitnessKind::ElementPair);
    case Predicate::Radical:
      return finish(detail::first_violation<1>(n, 1, [&](const auto& v) { return in_rad[v[0]] && !in[v[0]]; }),
                    WitnessKind::Element);
    case Predicate::StronglyIrreducible:
      // Rx meet Ry <= I => x in I or y in I.
      return finish(detail::first_violation<2>(n, 1,
                                               [&](const auto& v) {
                                                 return t.leq(t.meet(ideal_of[v[0]], ideal_of[v[1]]), Ii) && !in[v[0]] &&
                                                        !in[v[1]];
                                               }),
                    WitnessKind::ElementPair);
    case Predicate::SinglyStronglyTwoIrreducible:
      return finish(detail::first_violation<3>(n, 1,
                                               [&](const auto& v) {
                                                 return detail::strongly_2_irreducible_violated(t, Ii, ideal_of[v[0]],
                                                                                                ideal_of[v[1]], ideal_of[v[2]]);
                                               }),
                    WitnessKind::ElementTriple);
    case Predicate::TwoAbsorbing:
      return finish(detail::first_violation<3>(n, 1,
                                               [&](const auto& v) {
                                                 const std::size_t ab = m(v[0], v[1]);
                                                 return in[m(ab, v[2])] && !in[ab] && !in[m(v[0], v[2])] && !in[m(v[1], v[2])];
                                               }),
                    WitnessKind::ElementTriple);
    case Predicate::TwoAbsorbingPrimary:
      return finish(detail::first_violation<3>(n, 1,
                                               [&](const auto& v) {
                                                 const std::size_t ab = m(v[0], v[1]);
                                                 return in[m(ab, v[2])] && !in[ab] && !in_rad[m(v[0], v[2])] &&
                                                        !in_rad[m(v[1], v[2])];
                                               }),
                    WitnessKind::ElementTriple);
    default:
      throw DomainError("element-level mode covers element-quantified predicates only");
  }
}

/// Triple-cover condition quantified over every element triple.
inline PredicateResult element_level_triple_cover(const Ideal& I, std::size_t max_elements = kElementLevelMaxElements) {
  const RingSpec& R = I.ring;
  if (!is_proper(I)) throw NotProperError("predicate requires a proper ideal");
  const auto elems = enumerate_elements(R, max_elements);
  const IdealTable t(R);
  const std::size_t Ii = t.index_of(I);
  std::vector<std::size_t> ideal_of(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) ideal_of[i] = t.index_of(principal(R, elems[i]));
  auto s = detail::first_violation<3>(elems.size(), 1, [&](const auto& v) {
    const std::size_t x = ideal_of[v[0]], y = ideal_of[v[1]], z = ideal_of[v[2]];
    return detail::strongly_2_irreducible_violated(t, Ii, t.join(x, y), t.join(x, z), t.join(y, z));
  });
  PredicateResult r;
  r.cases_checked = s.cases;
  r.holds = !s.hit.has_value();
  return r;
}

}  // namespace idealis
