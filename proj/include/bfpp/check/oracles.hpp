#pragma once

// Reference models used only by the property checks. Nothing here calls the
// code path it is compared against.

#include <compare>
#include <cstdint>
#include <vector>

#include "bfpp/dynamics.hpp"
#include "bfpp/ordinal.hpp"
#include "bfpp/stepfn.hpp"

namespace bfpp::check {

/// w^2*i + w*j + k, with ordinal arithmetic done directly on the triple.
struct Triple {
  std::uint64_t i = 0, j = 0, k = 0;

  friend auto operator<=>(Triple const&, Triple const&) = default;
};

inline Triple triple_add(Triple a, Triple b) {
  if (b.i > 0)
    return {a.i + b.i, b.j, b.k};
  if (b.j > 0)
    return {a.i, a.j + b.j, b.k};
  return {a.i, a.j, a.k + b.k};
}

inline OrdinalKind triple_classify(Triple t) {
  if (t.i == 0 && t.j == 0 && t.k == 0)
    return OrdinalKind::Zero;
  return t.k > 0 ? OrdinalKind::Successor : OrdinalKind::Limit;
}

inline Ordinal to_ordinal(Triple t) {
  std::vector<OrdinalTerm> terms;
  if (t.i)
    terms.push_back({Ordinal::natural(2), t.i});
  if (t.j)
    terms.push_back({Ordinal::natural(1), t.j});
  if (t.k)
    terms.push_back({Ordinal{}, t.k});
  return Ordinal::from_terms(std::move(terms));
}

/*
 * The two-position shift evaluated clause by clause at a single point:
 * 0 -> 1, 1 -> -1, a+2 -> f(a), limit -> inf-sup, limit+1 -> sup-inf, with the
 * limit clauses computed by the literal cut enumeration.
 */
inline Rational double_shift_by_clauses(StepFn const& f, Ordinal const& at) {
  auto [base, n] = split_finite(at);
  if (base.is_zero() && n == 0)
    return Rational(1);
  if (base.is_zero() && n == 1)
    return Rational(-1);
  if (n >= 2)
    return f(base + (n - 2));
  if (n == 0)
    return limit_value_oracle(f, base, LimitFormula::InfSup);
  return limit_value_oracle(f, base, LimitFormula::SupInf);
}

/// Same for the one-position shift.
inline Rational single_shift_by_clauses(StepFn const& f, Ordinal const& at) {
  auto [base, n] = split_finite(at);
  if (base.is_zero() && n == 0)
    return Rational(1);
  if (n >= 1)
    return f(base + (n - 1));
  return limit_value_oracle(f, base, LimitFormula::InfSup);
}

} // namespace bfpp::check
