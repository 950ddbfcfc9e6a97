#pragma once

// Dense univariate polynomials over GF(p), p prime and at most 97, with
// squarefree decomposition and Berlekamp factorization.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "idealis/arith.hpp"
#include "idealis/error.hpp"

namespace idealis {

inline constexpr std::uint32_t kMaxCharacteristic = 97;

inline void require_characteristic(std::uint32_t p) {
  if (p > kMaxCharacteristic || !is_prime(p)) {
    throw DomainError("characteristic must be a prime <= 97, got " + std::to_string(p));
  }
}

/// Element of GF(p)[x]. Coefficients are stored low-to-high and reduced;
/// the leading coefficient is nonzero unless the polynomial is zero.
class Poly {
 public:
  Poly() = default;

  Poly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= p_;
    trim();
  }

  static Poly zero(std::uint32_t p) { return Poly(p, {}); }
  static Poly constant(std::uint32_t p, std::uint32_t v) { return Poly(p, {v}); }
  static Poly monomial(std::uint32_t p, std::size_t k, std::uint32_t coeff = 1) {
    std::vector<std::uint32_t> c(k + 1, 0);
    c[k] = coeff;
    return Poly(p, std::move(c));
  }
  static Poly x(std::uint32_t p) { return monomial(p, 1); }

  std::uint32_t characteristic() const { return p_; }
  const std::vector<std::uint32_t>& coefficients() const { return c_; }

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  std::uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
  std::uint32_t coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Degree first, then coefficients compared from the leading term down.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    if (auto c = a.c_.size() <=> b.c_.size(); c != 0) return c;
    for (std::size_t i = a.c_.size(); i-- > 0;) {
      if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> c_;
};

/// value = prod factor^exponent with monic irreducible factors sorted.
struct PolyFactorization {
  Poly value;
  std::vector<std::pair<Poly, unsigned>> factors;

  std::size_t distinct_factors() const { return factors.size(); }
};

namespace detail {

inline void require_same_field(const Poly& f, const Poly& g) {
  if (f.characteristic() != g.characteristic()) {
    throw RingMismatchError("polynomials over different characteristics");
  }
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw DomainError("inverse of zero in GF(" + std::to_string(p) + ")");
  return static_cast<std::uint32_t>(pow_mod(a, p - 2, p));
}

}  // namespace detail

inline Poly poly_add(const Poly& f, const Poly& g) {
  detail::require_same_field(f, g);
  const auto p = f.characteristic();
  std::vector<std::uint32_t> c(std::max(f.coefficients().size(), g.coefficients().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (f.coeff(i) + g.coeff(i)) % p;
  return Poly(p, std::move(c));
}

inline Poly poly_neg(const Poly& f) {
  const auto p = f.characteristic();
  std::vector<std::uint32_t> c = f.coefficients();
  for (auto& v : c) v = (p - v) % p;
  return Poly(p, std::move(c));
}

inline Poly poly_sub(const Poly& f, const Poly& g) { return poly_add(f, poly_neg(g)); }

inline Poly poly_scale(const Poly& f, std::uint32_t s) {
  const auto p = f.characteristic();
  std::vector<std::uint32_t> c = f.coefficients();
  for (auto& v : c) v = static_cast<std::uint32_t>((std::uint64_t{v} * s) % p);
  return Poly(p, std::move(c));
}

inline Poly poly_mul(const Poly& f, const Poly& g) {
  detail::require_same_field(f, g);
  const auto p = f.characteristic();
  if (f.is_zero() || g.is_zero()) return Poly::zero(p);
  const auto& a = f.coefficients();
  const auto& b = g.coefficients();
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  std::vector<std::uint32_t> c(acc.begin(), acc.end());
  return Poly(p, std::move(c));
}

/// Euclidean division: f = q*g + r with deg r < deg g.
inline std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
  detail::require_same_field(f, g);
  if (g.is_zero()) throw DomainError("polynomial division by zero");
  const auto p = f.characteristic();
  std::vector<std::uint32_t> r = f.coefficients();
  const auto& d = g.coefficients();
  const int dg = g.degree();
  if (f.degree() < dg) return {Poly::zero(p), f};
  std::vector<std::uint32_t> q(static_cast<std::size_t>(f.degree() - dg + 1), 0);
  const std::uint32_t lead_inv = detail::inv_mod(g.leading(), p);
  for (int k = f.degree(); k >= dg; --k) {
    const std::uint32_t coef = static_cast<std::uint32_t>((std::uint64_t{r[k]} * lead_inv) % p);
    q[k - dg] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      auto& slot = r[k - dg + j];
      slot = static_cast<std::uint32_t>((slot + std::uint64_t{p - coef} * d[j]) % p);
    }
  }
  r.resize(static_cast<std::size_t>(dg));
  return {Poly(p, std::move(q)), Poly(p, std::move(r))};
}

inline Poly poly_mod(const Poly& f, const Poly& g) { return poly_divmod(f, g).second; }

/// Monic associate; the zero polynomial is returned unchanged.
inline Poly make_monic(const Poly& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return poly_scale(f, detail::inv_mod(f.leading(), f.characteristic()));
}

/// Monic gcd, or zero when both inputs are zero.
inline Poly poly_gcd(Poly f, Poly g) {
  detail::require_same_field(f, g);
  while (!g.is_zero()) {
    Poly r = poly_mod(f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return make_monic(f);
}

/// Monic lcm; zero if either input is zero.
inline Poly poly_lcm(const Poly& f, const Poly& g) {
  detail::require_same_field(f, g);
  if (f.is_zero() || g.is_zero()) return Poly::zero(f.characteristic());
  return make_monic(poly_divmod(poly_mul(f, g), poly_gcd(f, g)).first);
}

inline bool poly_divides(const Poly& d, const Poly& f) {
  if (d.is_zero()) return f.is_zero();
  return poly_mod(f, d).is_zero();
}

inline Poly poly_pow(const Poly& f, unsigned e) {
  Poly result = Poly::constant(f.characteristic(), 1);
  for (unsigned i = 0; i < e; ++i) result = poly_mul(result, f);
  return result;
}

inline Poly poly_mulmod(const Poly& f, const Poly& g, const Poly& m) { return poly_mod(poly_mul(f, g), m); }

inline Poly poly_derivative(const Poly& f) {
  const auto p = f.characteristic();
  const auto& c = f.coefficients();
  if (c.size() <= 1) return Poly::zero(p);
  std::vector<std::uint32_t> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = static_cast<std::uint32_t>((std::uint64_t{c[i]} * (i % p)) % p);
  return Poly(p, std::move(d));
}

namespace detail {

// f' = 0 means f(x) = g(x^p); over GF(p) the p-th root is g.
inline Poly pth_root(const Poly& f) {
  const auto p = f.characteristic();
  const auto& c = f.coefficients();
  std::vector<std::uint32_t> r;
  for (std::size_t i = 0; i < c.size(); i += p) r.push_back(c[i]);
  return Poly(p, std::move(r));
}

// Yun's algorithm adapted to characteristic p. Output pairs are squarefree,
// pairwise coprime, monic and nonconstant.
inline void squarefree_parts(const Poly& f, unsigned multiplicity, std::vector<std::pair<Poly, unsigned>>& out) {
  const Poly df = poly_derivative(f);
  if (df.is_zero()) {
    squarefree_parts(pth_root(f), multiplicity * f.characteristic(), out);
    return;
  }
  Poly c = poly_gcd(f, df);
  Poly w = poly_divmod(f, c).first;
  unsigned i = 1;
  while (!w.is_constant()) {
    Poly y = poly_gcd(w, c);
    Poly z = poly_divmod(w, y).first;
    if (!z.is_constant()) out.emplace_back(make_monic(z), i * multiplicity);
    ++i;
    w = std::move(y);
    c = poly_divmod(c, w).first;
  }
  if (!c.is_constant()) squarefree_parts(pth_root(make_monic(c)), multiplicity * f.characteristic(), out);
}

// Null space basis of a square matrix over GF(p), one vector per free column.
inline std::vector<std::vector<std::uint32_t>> null_space(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p) {
  const std::size_t n = m.size();
  std::vector<int> pivot_col_of_row;
  std::vector<int> row_of_col(n, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t sel = row;
    while (sel < n && m[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(m[sel], m[row]);
    const std::uint32_t inv = inv_mod(m[row][col], p);
    for (auto& v : m[row]) v = static_cast<std::uint32_t>((std::uint64_t{v} * inv) % p);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const std::uint32_t factor = m[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] = static_cast<std::uint32_t>((m[r][k] + std::uint64_t{p - factor} * m[row][k]) % p);
      }
    }
    row_of_col[col] = static_cast<int>(row);
    ++row;
  }
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (row_of_col[free] >= 0) continue;
    std::vector<std::uint32_t> v(n, 0);
    v[free] = 1;
    for (std::size_t col = 0; col < n; ++col) {
      if (row_of_col[col] < 0) continue;
      v[col] = (p - m[static_cast<std::size_t>(row_of_col[col])][free]) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Berlekamp splitting of a monic squarefree polynomial into irreducibles.
inline std::vector<Poly> berlekamp(const Poly& f) {
  const auto p = f.characteristic();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (n <= 1) return {f};
  // Row j holds x^(j*p) mod f; we need vectors a with a*Q = a.
  std::vector<std::vector<std::uint32_t>> q(n, std::vector<std::uint32_t>(n, 0));
  const Poly xp = poly_mod(Poly::monomial(p, p), f);
  Poly power = Poly::constant(p, 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) q[j][k] = power.coeff(k);
    power = poly_mulmod(power, xp, f);
  }
  std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) m[k][j] = (q[j][k] + (j == k ? p - 1 : 0)) % p;
  }
  const auto basis = null_space(std::move(m), p);
  const std::size_t target = basis.size();
  std::vector<Poly> factors{f};
  for (const auto& vec : basis) {
    if (factors.size() == target) break;
    const Poly v(p, vec);
    if (v.is_constant()) continue;
    std::vector<Poly> next;
    for (const auto& u : factors) {
      Poly rest = u;
      for (std::uint32_t s = 0; s < p && rest.degree() > 1; ++s) {
        const Poly g = poly_gcd(rest, poly_sub(v, Poly::constant(p, s)));
        if (g.degree() >= 1 && g.degree() < rest.degree()) {
          next.push_back(g);
          rest = make_monic(poly_divmod(rest, g).first);
        }
      }
      next.push_back(rest);
    }
    factors = std::move(next);
  }
  return factors;
}

}  // namespace detail

/// Factor a monic nonconstant polynomial into monic irreducibles, sorted by
/// degree then coefficients.
inline PolyFactorization factor_poly(const Poly& f) {
  if (!f.is_monic()) throw DomainError("factor_poly: input must be monic");
  if (f.degree() < 1) throw DomainError("factor_poly: input must be nonconstant");
  std::vector<std::pair<Poly, unsigned>> parts;
  detail::squarefree_parts(f, 1, parts);
  std::vector<std::pair<Poly, unsigned>> factors;
  for (const auto& [part, mult] : parts) {
    for (auto& irr : detail::berlekamp(part)) factors.emplace_back(make_monic(irr), mult);
  }
  std::sort(factors.begin(), factors.end());
  // Pieces from different squarefree parts are coprime, so no merging is needed.
  return PolyFactorization{f, std::move(factors)};
}

inline bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  const auto fac = factor_poly(make_monic(f));
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

inline Poly multiply_out(const PolyFactorization& f) {
  Poly r = Poly::constant(f.value.characteristic(), 1);
  for (const auto& [g, e] : f.factors) r = poly_mul(r, poly_pow(g, e));
  return r;
}

/// Product of the distinct irreducible factors; 1 for constants.
inline Poly squarefree_kernel(const Poly& f) {
  const auto p = f.characteristic();
  if (f.degree() < 1) return Poly::constant(p, 1);
  Poly r = Poly::constant(p, 1);
  for (const auto& [g, e] : factor_poly(make_monic(f)).factors) r = poly_mul(r, g);
  return r;
}

/// All monic divisors, sorted by degree then coefficients.
inline std::vector<Poly> monic_divisors(const Poly& f) {
  if (!f.is_monic()) throw DomainError("monic_divisors: input must be monic");
  const auto p = f.characteristic();
  std::vector<Poly> out{Poly::constant(p, 1)};
  if (f.degree() >= 1) {
    for (const auto& [g, e] : factor_poly(f).factors) {
      const std::size_t base = out.size();
      Poly power = Poly::constant(p, 1);
      for (unsigned k = 1; k <= e; ++k) {
        power = poly_mul(power, g);
        for (std::size_t i = 0; i < base; ++i) out.push_back(poly_mul(out[i], power));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every monic polynomial of the given degree, in canonical order.
inline std::vector<Poly> monic_polys_of_degree(std::uint32_t p, unsigned degree) {
  std::vector<Poly> out;
  std::vector<std::uint32_t> c(degree + 1, 0);
  c[degree] = 1;
  std::size_t count = 1;
  for (unsigned i = 0; i < degree; ++i) count = checked_mul(count, p);
  out.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t v = idx;
    for (unsigned i = 0; i < degree; ++i) {
      c[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    out.emplace_back(p, c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace idealis
