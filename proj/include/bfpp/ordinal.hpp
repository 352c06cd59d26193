#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bfpp/rational.hpp"

namespace bfpp {

struct OrdinalTerm;

/*
 * Ordinals below epsilon_0 in Cantor normal form:
 *
 *     w^e1 * c1 + w^e2 * c2 + ... + w^ek * ck,   e1 > e2 > ... > ek,  ci >= 1
 *
 * with each exponent itself an Ordinal. The empty sum is 0. Every constructor
 * either produces normal form or throws, so structural equality is ordinal
 * equality.
 */
class Ordinal {
public:
  using Coefficient = std::uint64_t;

  /// Zero.
  Ordinal() = default;

  static Ordinal natural(Coefficient n);
  static Ordinal omega();
  /// w^exponent * coefficient; coefficient must be positive.
  static Ordinal omega_power(Ordinal exponent, Coefficient coefficient = 1);
  /// Validates normal form (strictly decreasing exponents, positive coefficients).
  static Ordinal from_terms(std::vector<OrdinalTerm> terms);

  std::vector<OrdinalTerm> const& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_natural() const noexcept;
  /// The value of a finite ordinal. Throws std::domain_error on infinite ones.
  Coefficient to_natural() const;

  friend bool operator==(Ordinal const&, Ordinal const&);
  friend std::strong_ordering operator<=>(Ordinal const&, Ordinal const&);

private:
  std::vector<OrdinalTerm> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  Ordinal::Coefficient coefficient = 1;

  friend bool operator==(OrdinalTerm const&, OrdinalTerm const&) = default;
};

enum class OrdinalKind { Zero, Successor, Limit };

struct FiniteSplit {
  Ordinal limit_part;
  Ordinal::Coefficient finite_part = 0;

  friend bool operator==(FiniteSplit const&, FiniteSplit const&) = default;
};

// ---------------------------------------------------------------------------

namespace detail {

inline Ordinal::Coefficient checked_add(Ordinal::Coefficient a, Ordinal::Coefficient b) {
  if (a > std::numeric_limits<Ordinal::Coefficient>::max() - b)
    throw std::overflow_error("ordinal coefficient overflow");
  return a + b;
}

} // namespace detail

inline Ordinal Ordinal::natural(Coefficient n) {
  Ordinal r;
  if (n > 0)
    r.terms_.push_back(OrdinalTerm{Ordinal{}, n});
  return r;
}

inline Ordinal Ordinal::omega() { return omega_power(natural(1)); }

inline Ordinal Ordinal::omega_power(Ordinal exponent, Coefficient coefficient) {
  if (coefficient == 0)
    throw std::invalid_argument("ordinal term coefficient must be positive");
  Ordinal r;
  r.terms_.push_back(OrdinalTerm{std::move(exponent), coefficient});
  return r;
}

inline Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0)
      throw std::invalid_argument("ordinal term coefficient must be positive");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw std::invalid_argument("ordinal exponents must be strictly decreasing");
  }
  Ordinal r;
  r.terms_ = std::move(terms);
  return r;
}

inline bool Ordinal::is_natural() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

inline Ordinal::Coefficient Ordinal::to_natural() const {
  if (!is_natural())
    throw std::domain_error("ordinal is not finite");
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

inline bool operator==(Ordinal const& a, Ordinal const& b) { return a.terms_ == b.terms_; }

inline std::strong_ordering operator<=>(Ordinal const& a, Ordinal const& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto const& x = a.terms_[i];
    auto const& y = b.terms_[i];
    if (auto c = x.exponent <=> y.exponent; c != 0)
      return c;
    if (auto c = x.coefficient <=> y.coefficient; c != 0)
      return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

/// Total order on ordinals.
inline std::strong_ordering compare(Ordinal const& a, Ordinal const& b) { return a <=> b; }

/// Ordinal (non-commutative) addition. Terms of `a` below the leading exponent
/// of `b` are absorbed.
inline Ordinal add(Ordinal const& a, Ordinal const& b) {
  if (b.is_zero())
    return a;
  auto const& lead = b.terms().front();
  std::vector<OrdinalTerm> out;
  out.reserve(a.terms().size() + b.terms().size());
  auto bt = b.terms().begin();
  for (auto const& t : a.terms()) {
    auto c = t.exponent <=> lead.exponent;
    if (c > 0) {
      out.push_back(t);
    } else {
      if (c == 0) {
        out.push_back(OrdinalTerm{t.exponent, detail::checked_add(t.coefficient, lead.coefficient)});
        ++bt;
      }
      break;
    }
  }
  out.insert(out.end(), bt, b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

inline Ordinal operator+(Ordinal const& a, Ordinal const& b) { return add(a, b); }

inline Ordinal operator+(Ordinal const& a, Ordinal::Coefficient n) {
  return add(a, Ordinal::natural(n));
}

inline OrdinalKind classify(Ordinal const& a) {
  if (a.is_zero())
    return OrdinalKind::Zero;
  return a.terms().back().exponent.is_zero() ? OrdinalKind::Successor : OrdinalKind::Limit;
}

inline bool is_limit(Ordinal const& a) { return classify(a) == OrdinalKind::Limit; }

/// a = limit_part + finite_part with limit_part zero or a limit.
inline FiniteSplit split_finite(Ordinal const& a) {
  if (classify(a) != OrdinalKind::Successor)
    return {a, 0};
  std::vector<OrdinalTerm> head(a.terms().begin(), a.terms().end() - 1);
  return {Ordinal::from_terms(std::move(head)), a.terms().back().coefficient};
}

/// Supremum of a nonempty finite set, i.e. its maximum.
inline Ordinal sup_finite(std::span<Ordinal const> set) {
  if (set.empty())
    throw std::invalid_argument("sup_finite of an empty set");
  Ordinal const* best = &set.front();
  for (auto const& x : set)
    if (*best < x)
      best = &x;
  return *best;
}

// --- text form --------------------------------------------------------------
//
//   ordinal := "0" | term ("+" term)*
//   term    := "w" ["^" ordexp] ["*" nat] | nat
//   ordexp  := nat | "(" ordinal ")"

namespace detail {

inline Ordinal parse_ordinal(Cursor& in);

inline OrdinalTerm parse_term(Cursor& in) {
  if (in.consume('w')) {
    Ordinal exponent = Ordinal::natural(1);
    if (in.consume('^')) {
      if (in.consume('(')) {
        exponent = parse_ordinal(in);
        in.expect(')');
      } else {
        exponent = Ordinal::natural(in.natural());
      }
    }
    Ordinal::Coefficient c = 1;
    if (in.consume('*')) {
      std::size_t at = in.position();
      c = in.natural();
      if (c == 0)
        throw ParseError("zero coefficient is not normal form", at);
    }
    return OrdinalTerm{std::move(exponent), c};
  }
  std::size_t at = in.position();
  Ordinal::Coefficient n = in.natural();
  if (n == 0)
    throw ParseError("zero term is not normal form", at);
  return OrdinalTerm{Ordinal{}, n};
}

inline Ordinal parse_ordinal(Cursor& in) {
  std::vector<OrdinalTerm> terms;
  std::vector<std::size_t> positions;
  if (in.peek() == '0') {
    std::size_t at = in.position();
    Ordinal::Coefficient n = in.natural();
    if (n == 0)
      return Ordinal{};
    positions.push_back(at);
    terms.push_back(OrdinalTerm{Ordinal{}, n});
    if (!in.consume('+'))
      return Ordinal::from_terms(std::move(terms));
  }
  do {
    positions.push_back(in.position());
    terms.push_back(parse_term(in));
  } while (in.consume('+'));
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (!(terms[i].exponent < terms[i - 1].exponent))
      throw ParseError("exponents must be strictly decreasing (not normal form)", positions[i]);
  return Ordinal::from_terms(std::move(terms));
}

} // namespace detail

inline Ordinal parse_ordinal(std::string_view text) {
  detail::Cursor in(text);
  Ordinal a = detail::parse_ordinal(in);
  in.expect_end();
  return a;
}

inline std::string to_string(Ordinal const& a) {
  if (a.is_zero())
    return "0";
  std::string out;
  for (auto const& t : a.terms()) {
    if (!out.empty())
      out += '+';
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent.is_natural()) {
      if (t.exponent.to_natural() != 1)
        out += '^' + std::to_string(t.exponent.to_natural());
    } else {
      out += "^(" + to_string(t.exponent) + ')';
    }
    if (t.coefficient != 1)
      out += '*' + std::to_string(t.coefficient);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, Ordinal const& a) { return os << to_string(a); }

} // namespace bfpp
