#pragma once

// Text syntax for rings, elements and ideals.
//
//   ring    := atom { 'x' atom }                       products are flattened
//   atom    := 'Z' | 'Z/' n | 'GF(' p ')[x]' | 'GF(' p ')[x]/(' poly ')'
//   poly    := term { ('+' | '-') term }, term := c | c*x^k | x^k | c*x | x
//   element := integer | poly | '[' element { ',' element } ']'   (products)
//   ideal   := '(' gen { ',' gen } ')'
//
// Ideal generators are gcd-reduced. In a product ring an ideal is written
// with one bracketed generator list per component, e.g. "([2],[3])" in
// Z/4 x Z/9; a list of full product elements is also accepted when the
// number of brackets differs from the arity. The formatters emit canonical
// text that parses back to the same value.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "idealis/error.hpp"
#include "idealis/poly.hpp"
#include "idealis/ring.hpp"

namespace idealis {

inline constexpr unsigned kMaxParsedExponent = 4096;

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Natural natural() {
    skip_ws();
    if (!peek_digit()) fail("expected a number");
    Natural v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const Natural digit = static_cast<Natural>(text_[pos_] - '0');
      if (v > (kNaturalLimit - 1 - digit) / 10) fail("number exceeds 2^63 - 1");
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  std::size_t position() const { return pos_; }
  void seek(std::size_t pos) { pos_ = pos; }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Poly parse_poly_at(Cursor& in, std::uint32_t p) {
  std::vector<std::uint32_t> coeffs;
  auto add_term = [&](bool negative, std::uint32_t coef, unsigned power) {
    if (coeffs.size() <= power) coeffs.resize(power + 1, 0);
    const std::uint32_t c = negative ? (p - coef) % p : coef;
    coeffs[power] = (coeffs[power] + c) % p;
  };
  bool negative = in.accept('-');
  while (true) {
    std::uint32_t coef = 1;
    unsigned power = 0;
    bool have_coef = false;
    if (in.peek_digit()) {
      coef = static_cast<std::uint32_t>(in.natural() % p);
      have_coef = true;
      in.accept('*');
    }
    if (in.accept('x')) {
      power = 1;
      if (in.accept('^')) {
        const Natural e = in.natural();
        if (e > kMaxParsedExponent) in.fail("exponent too large");
        power = static_cast<unsigned>(e);
      }
    } else if (!have_coef) {
      in.fail("expected a polynomial term");
    }
    add_term(negative, coef, power);
    if (in.accept('+')) {
      negative = false;
    } else if (in.accept('-')) {
      negative = true;
    } else {
      break;
    }
  }
  return Poly(p, std::move(coeffs));
}

inline BaseRing parse_atom(Cursor& in) {
  const std::size_t start = in.position();
  if (in.accept("GF")) {
    in.expect('(');
    const Natural p = in.natural();
    in.expect(')');
    if (p > kMaxCharacteristic || !is_prime(p)) {
      throw ParseError("GF modulus must be a prime <= 97, got " + std::to_string(p), start);
    }
    in.expect('[');
    if (!in.accept('x')) in.fail("expected 'x'");
    in.expect(']');
    const std::size_t slash = in.position();
    if (in.accept('/')) {
      in.expect('(');
      const Poly f = parse_poly_at(in, static_cast<std::uint32_t>(p));
      in.expect(')');
      if (f.degree() < 1) throw ParseError("quotient modulus must have degree >= 1", slash);
      return make_poly_quotient(f);
    }
    return make_poly_ring(static_cast<std::uint32_t>(p));
  }
  if (in.accept('Z')) {
    if (in.accept('/')) {
      const std::size_t at = in.position();
      const Natural n = in.natural();
      if (n < 2) throw ParseError("Z/n requires n >= 2", at);
      return make_integers_mod(n);
    }
    return Integers{};
  }
  in.fail("expected a ring ('Z', 'Z/n', 'GF(p)[x]' or 'GF(p)[x]/(f)')");
}

inline BaseElement parse_base_element(Cursor& in, const BaseRing& r) {
  if (std::holds_alternative<Integers>(r) || std::holds_alternative<IntegersMod>(r)) {
    const bool negative = in.accept('-');
    const Natural v = in.natural();
    const auto s = static_cast<std::int64_t>(v);
    return normalize_element(r, negative ? -s : s);
  }
  const std::uint32_t p = std::holds_alternative<PolyRing>(r) ? std::get<PolyRing>(r).characteristic
                                                               : std::get<PolyQuotient>(r).characteristic();
  return normalize_element(r, parse_poly_at(in, p));
}

inline Element parse_element_at(Cursor& in, const RingSpec& ring) {
  Element x;
  if (!ring.is_product()) {
    x.parts.push_back(parse_base_element(in, ring.component(0)));
    return x;
  }
  in.expect('[');
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    if (i > 0) in.expect(',');
    x.parts.push_back(parse_base_element(in, ring.component(i)));
  }
  if (in.peek() == ',') in.fail("element has more components than the ring arity " + std::to_string(ring.arity()));
  in.expect(']');
  return x;
}

inline std::string format_natural(Natural v) { return std::to_string(v); }

}  // namespace detail

inline Poly parse_poly(std::string_view text, std::uint32_t p) {
  require_characteristic(p);
  detail::Cursor in(text);
  Poly f = detail::parse_poly_at(in, p);
  in.expect_end();
  return f;
}

/// Highest degree first, e.g. "x^3+2*x+1"; the zero polynomial is "0".
inline std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& c = f.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += std::to_string(c[k]);
      continue;
    }
    if (c[k] != 1) out += std::to_string(c[k]) + "*";
    out += 'x';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

inline RingSpec parse_ring(std::string_view text) {
  detail::Cursor in(text);
  std::vector<BaseRing> parts{detail::parse_atom(in)};
  while (in.accept('x')) parts.push_back(detail::parse_atom(in));
  in.expect_end();
  return RingSpec::from_parts(std::move(parts));
}

inline std::string format_base_ring(const BaseRing& r) {
  if (std::holds_alternative<Integers>(r)) return "Z";
  if (const auto* m = std::get_if<IntegersMod>(&r)) return "Z/" + std::to_string(m->modulus);
  if (const auto* pr = std::get_if<PolyRing>(&r)) return "GF(" + std::to_string(pr->characteristic) + ")[x]";
  const auto& q = std::get<PolyQuotient>(r);
  return "GF(" + std::to_string(q.characteristic()) + ")[x]/(" + format_poly(q.modulus) + ")";
}

inline std::string format_ring(const RingSpec& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    if (i > 0) out += " x ";
    out += format_base_ring(ring.component(i));
  }
  return out;
}

inline Element parse_element(const RingSpec& ring, std::string_view text) {
  detail::Cursor in(text);
  Element x = detail::parse_element_at(in, ring);
  in.expect_end();
  return x;
}

inline std::string format_base_element(const BaseElement& e) {
  if (const auto* v = std::get_if<std::int64_t>(&e)) return std::to_string(*v);
  if (const auto* v = std::get_if<Natural>(&e)) return std::to_string(*v);
  return format_poly(std::get<Poly>(e));
}

inline std::string format_element(const RingSpec& ring, const Element& x) {
  if (!ring.is_product()) return format_base_element(x.parts.at(0));
  std::string out = "[";
  for (std::size_t i = 0; i < x.parts.size(); ++i) {
    if (i > 0) out += ',';
    out += format_base_element(x.parts[i]);
  }
  return out + "]";
}

/// Parses "(g1, g2, ...)" and returns the ideal the generators span.
inline Ideal parse_ideal(const RingSpec& ring, std::string_view text) {
  detail::Cursor in(text);
  in.expect('(');
  Ideal result = zero_ideal(ring);
  if (!ring.is_product()) {
    do {
      Element x{{detail::parse_base_element(in, ring.component(0))}};
      result = ideal_sum(result, principal(ring, x));
    } while (in.accept(','));
    in.expect(')');
    in.expect_end();
    return result;
  }
  // Each bracket holds either the generators of one component ideal or a
  // full product element; decide once the bracket count is known. Base
  // elements contain no brackets or commas, so entries split on ','.
  std::vector<std::vector<std::string>> items;
  std::vector<std::size_t> item_pos;
  const std::string_view source = text;
  do {
    in.expect('[');
    item_pos.push_back(in.position());
    const std::size_t close = source.find(']', in.position());
    if (close == std::string_view::npos) in.fail("unterminated '['");
    std::vector<std::string> entries;
    std::size_t begin = in.position();
    for (std::size_t i = begin; i <= close; ++i) {
      if (source[i] == ',' || i == close) {
        entries.emplace_back(source.substr(begin, i - begin));
        begin = i + 1;
      }
    }
    items.push_back(std::move(entries));
    in.seek(close + 1);
  } while (in.accept(','));
  in.expect(')');
  in.expect_end();

  auto parse_piece = [&](const std::string& piece, const BaseRing& r, std::size_t offset) {
    try {
      detail::Cursor sub(piece);
      BaseElement e = detail::parse_base_element(sub, r);
      sub.expect_end();
      return e;
    } catch (const ParseError& err) {
      throw ParseError("invalid generator '" + piece + "'", offset + err.position());
    }
  };

  if (items.size() == ring.arity()) {
    for (std::size_t c = 0; c < ring.arity(); ++c) {
      const BaseRing& r = ring.component(c);
      BaseIdeal g = detail::base_zero_ideal(r);
      for (const auto& piece : items[c]) {
        g = detail::base_sum(r, g, detail::base_principal(r, parse_piece(piece, r, item_pos[c])));
      }
      result.parts[c] = g;
    }
    return result;
  }
  for (std::size_t k = 0; k < items.size(); ++k) {
    const auto& entries = items[k];
    if (entries.size() != ring.arity()) {
      throw ParseError("product ideal needs " + std::to_string(ring.arity()) +
                           " component generator lists or generators of arity " + std::to_string(ring.arity()),
                       item_pos[k]);
    }
    Element x;
    for (std::size_t c = 0; c < ring.arity(); ++c) x.parts.push_back(parse_piece(entries[c], ring.component(c), item_pos[k]));
    result = ideal_sum(result, principal(ring, x));
  }
  return result;
}

/// "(g)" for base rings, "([g1],[g2],...)" for products.
inline std::string format_ideal(const Ideal& a) {
  const Element g = generator_element(a);
  if (!a.ring.is_product()) return "(" + format_base_element(g.parts.at(0)) + ")";
  std::string out = "(";
  for (std::size_t i = 0; i < g.parts.size(); ++i) {
    if (i > 0) out += ',';
    out += "[" + format_base_element(g.parts[i]) + "]";
  }
  return out + ")";
}

}  // namespace idealis
