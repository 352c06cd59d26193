#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bfpp/ordinal.hpp"
#include "bfpp/stepfn.hpp"

namespace bfpp {

/// A self-map of step functions together with the ball it is meant to act on.
/// Evaluation is total; membership in `domain` is checked by the harness.
struct OperatorDescriptor {
  std::string name;
  Ball domain = Ball::unit();
  std::function<StepFn(StepFn const&)> evaluate;
  std::string metadata;

  StepFn operator()(StepFn const& f) const { return evaluate(f); }
};

// --- the shifts ------------------------------------------------------------------

/*
 * Transfinite two-position shift:
 *
 *   Tf(0) = 1, Tf(1) = -1, Tf(a+2) = f(a),
 *   Tf(b)   = inf_{a<b} sup_{a<c<b} f(c)   (b limit),
 *   Tf(b+1) = sup_{a<b} inf_{a<c<b} f(c)   (b limit).
 *
 * For finitely many deviations f is constant on a final segment below every
 * limit, so both limit clauses evaluate to tail(f). What remains is a relabeling
 * of the deviation keys.
 */
inline StepFn double_shift(StepFn const& f) {
  StepFn::Deviations out;
  out.emplace(Ordinal::natural(0), Rational(1));
  out.emplace(Ordinal::natural(1), Rational(-1));
  for (auto const& [at, v] : f.deviations())
    out.emplace(at + 2, v);
  return StepFn(f.tail(), std::move(out));
}

/// One-position variant: Sf(0) = 1, Sf(a+1) = f(a), limits take the inf-sup of
/// the preceding values (again tail(f)). Fixed point free only when tail(f) = 0.
inline StepFn single_shift(StepFn const& f) {
  StepFn::Deviations out;
  out.emplace(Ordinal::natural(0), Rational(1));
  for (auto const& [at, v] : f.deviations())
    out.emplace(at + 1, v);
  return StepFn(f.tail(), std::move(out));
}

enum class LimitFormula { InfSup, SupInf };

/// Evaluates inf_{a<b} sup_{a<c<b} f(c) (or its dual) literally. The cut
/// points a only matter when they cross a deviation key, so it suffices to try
/// a = 0 and a = k+1 for each key k < b.
inline Rational limit_value_oracle(StepFn const& f, Ordinal const& beta, LimitFormula which) {
  if (!is_limit(beta))
    throw PreconditionError("limit_value_oracle needs a limit ordinal, got " + to_string(beta));
  std::vector<Ordinal> cuts{Ordinal{}};
  for (auto const& [k, v] : f.deviations())
    if (k < beta)
      cuts.push_back(k + 1);

  bool const inf_sup = which == LimitFormula::InfSup;
  std::optional<Rational> outer;
  for (auto const& cut : cuts) {
    // (cut, beta) is infinite, so it always contains tail points.
    Rational inner = f.tail();
    for (auto const& [k, v] : f.deviations()) {
      if (!(cut < k) || !(k < beta))
        continue;
      if (inf_sup ? inner < v : v < inner)
        inner = v;
    }
    if (!outer || (inf_sup ? inner < *outer : *outer < inner))
      outer = inner;
  }
  return *outer;
}

// --- descriptors ------------------------------------------------------------------

inline OperatorDescriptor double_shift_operator() {
  return {"double-shift", Ball::unit(), double_shift,
          "two-position transfinite shift with limsup/liminf at limit pairs"};
}

inline OperatorDescriptor single_shift_operator() {
  return {"single-shift", Ball::unit(), single_shift,
          "one-position transfinite shift; fixed point free on tail-0 functions"};
}

// --- harness checks ---------------------------------------------------------------

struct NonexpansiveViolation {
  StepFn f;
  StepFn g;
  Ordinal witness;
  Rational input_distance;
  Rational output_gap;
};

struct BallViolation {
  StepFn input;
  StepFn output;
  Ordinal witness;
};

namespace detail {

inline void require_in_domain(OperatorDescriptor const& op, StepFn const& f) {
  if (!in_ball(f, op.domain))
    throw PreconditionError(op.name + ": input " + to_string(f) + " is outside " +
                            to_string(op.domain));
}

} // namespace detail

/// nullopt when dist(op f, op g) <= dist(f, g).
inline std::optional<NonexpansiveViolation> check_nonexpansive(OperatorDescriptor const& op,
                                                               StepFn const& f, StepFn const& g) {
  detail::require_in_domain(op, f);
  detail::require_in_domain(op, g);
  StepFn tf = op(f);
  StepFn tg = op(g);
  Rational d = dist(f, g);
  StepFn const* outs[] = {&tf, &tg};
  for (auto const& at : probe_points(outs)) {
    Rational gap = abs(Rational(tf(at) - tg(at)));
    if (d < gap)
      return NonexpansiveViolation{f, g, at, d, gap};
  }
  return std::nullopt;
}

/// nullopt when op(f) stays in op.domain.
inline std::optional<BallViolation> check_ball_invariance(OperatorDescriptor const& op,
                                                          StepFn const& f) {
  detail::require_in_domain(op, f);
  StepFn out = op(f);
  if (in_ball(out, op.domain))
    return std::nullopt;
  StepFn const* fs[] = {&out, &op.domain.center()};
  for (auto const& at : probe_points(fs))
    if (op.domain.radius() < abs(Rational(out(at) - op.domain.center()(at))))
      return BallViolation{f, out, at};
  throw std::logic_error("ball violation without a witness point");
}

/// Least ordinal where op(f) and f differ. The search set (keys of both, 0, 1
/// and one fresh ordinal) is complete for step functions.
inline Ordinal discrepancy_witness(OperatorDescriptor const& op, StepFn const& f) {
  detail::require_in_domain(op, f);
  StepFn tf = op(f);
  StepFn const* fs[] = {&f, &tf};
  std::vector<Ordinal> points = probe_points(fs);
  points.push_back(Ordinal::natural(0));
  points.push_back(Ordinal::natural(1));
  std::sort(points.begin(), points.end());
  for (auto const& at : points)
    if (tf(at) != f(at))
      return at;
  throw UnexpectedFixedPoint(op.name + " fixes " + to_string(f));
}

/// Least limit ordinal mu with (f(mu), f(mu+1)) != (1, -1). Limits above every
/// key see (tail, tail), which never matches, so the scan w, w*2, ... stops.
inline Ordinal minimal_bad_limit(StepFn const& f) {
  Ordinal mu = Ordinal::omega();
  while (f(mu) == 1 && f(mu + 1) == -1)
    mu = mu + Ordinal::omega();
  return mu;
}

// --- gap maps ---------------------------------------------------------------------

/// (1 - |g|) f + g. Nonexpansive with pointwise factor 1 - |g|.
inline StepFn gap_map(StepFn const& g, StepFn const& f) {
  if (Rational(1) < sup_norm(g))
    throw PreconditionError("gap_map requires ||g|| <= 1");
  StepFn one = StepFn::constant(1);
  return (one - abs(g)) * f + g;
}

inline OperatorDescriptor gap_operator(StepFn g) {
  if (Rational(1) < sup_norm(g))
    throw PreconditionError("gap_map requires ||g|| <= 1");
  return {"gap", Ball::unit(), [g = std::move(g)](StepFn const& f) { return gap_map(g, f); },
          "(1-|g|)f + g; fixed points are exactly the continuous signs of g"};
}

/// The fixed point of gap_map(g, .) given by the pointwise sign. Verifies both
/// identities and throws std::logic_error if either fails.
inline StepFn gap_fixed_point(StepFn const& g) {
  StepFn s = sign(g);
  if (gap_map(g, s) != s)
    throw std::logic_error("gap_fixed_point: sign(g) is not fixed by the gap map");
  if (g * s != abs(g) || s * abs(g) != g)
    throw std::logic_error("gap_fixed_point: sign identity g*s = |g| fails");
  return s;
}

struct ForcedSigns {
  std::vector<std::pair<std::string, int>> values;
  /// The forced nonzero signs keep changing at the end of the sample, so no
  /// limit value at the accumulation point is consistent with them.
  bool obstruction = false;
};

/// Any f with g = f|g| must equal sign(g(x)) wherever g(x) != 0; zeros leave f
/// free and are reported as 0.
inline ForcedSigns forced_sign_values(std::span<std::pair<std::string, Rational> const> samples) {
  ForcedSigns out;
  std::vector<int> nonzero;
  for (auto const& [label, value] : samples) {
    int s = sign(value);
    out.values.emplace_back(label, s);
    if (s != 0)
      nonzero.push_back(s);
  }
  std::size_t n = nonzero.size();
  out.obstruction = n >= 2 && nonzero[n - 1] != nonzero[n - 2];
  return out;
}

/// g(x_n) = (-1)^n / n for n = 1..count, labelled x1, x2, ...
inline std::vector<std::pair<std::string, Rational>> alternating_samples(std::size_t count) {
  std::vector<std::pair<std::string, Rational>> out;
  for (std::size_t n = 1; n <= count; ++n)
    out.emplace_back("x" + std::to_string(n), Rational(n % 2 ? -1 : 1, static_cast<long long>(n)));
  return out;
}

namespace detail {

inline void require_unit_interval(StepFn const& g) {
  StepFn const* fs[] = {&g};
  for (auto const& at : probe_points(fs))
    if (g(at) < 0 || 1 < g(at))
      throw PreconditionError("ppoint map requires 0 <= g <= 1");
}

} // namespace detail

/// (1 - g) f + g for 0 <= g <= 1.
inline StepFn ppoint_map(StepFn const& g, StepFn const& f) {
  detail::require_unit_interval(g);
  return (StepFn::constant(1) - g) * f + g;
}

inline OperatorDescriptor ppoint_operator(StepFn g) {
  detail::require_unit_interval(g);
  return {"ppoint", Ball::unit(), [g = std::move(g)](StepFn const& f) { return ppoint_map(g, f); },
          "(1-g)f + g with 0 <= g <= 1"};
}

/// For g vanishing at the tail point: the indicator of g's support, which is
/// fixed by ppoint_map(g, .) and satisfies g (1 - f) = 0.
inline StepFn ppoint_fixed_point(StepFn const& g) {
  detail::require_unit_interval(g);
  if (g.tail() != 0)
    throw PreconditionError("ppoint_fixed_point requires tail(g) = 0");
  StepFn::Deviations support;
  for (auto const& [at, v] : g.deviations())
    support.emplace_hint(support.end(), at, Rational(1));
  StepFn f(Rational(0), std::move(support));
  if (ppoint_map(g, f) != f)
    throw std::logic_error("ppoint_fixed_point: indicator is not fixed");
  if (g * (StepFn::constant(1) - f) != StepFn{})
    throw std::logic_error("ppoint_fixed_point: g(1-f) != 0");
  return f;
}

// --- fixed point transfer along a retraction ------------------------------------------

/*
 * Given nonexpansive E : Big -> Small and R : Small -> Big with E(R(y)) = y,
 * and g in Big fixed by R o T o E, the point E(g) is fixed by T:
 *
 *   T(Eg) = E R T(Eg) = E g.
 *
 * The E o R identity is the caller's responsibility; the conclusion is
 * re-verified and a failure raises UnexpectedFixedPoint.
 */
template <class Big, class Embed, class Retract, class Map>
auto transfer_fixed_point(Embed const& E, Retract const& R, Map const& T, Big const& g) {
  auto f = E(g);
  if (!(R(T(f)) == g))
    throw UnexpectedFixedPoint("transfer_fixed_point: g is not fixed by R o T o E");
  if (!(T(f) == f))
    throw UnexpectedFixedPoint("transfer_fixed_point: T(E g) != E g; E o R is not the identity");
  return f;
}

} // namespace bfpp
