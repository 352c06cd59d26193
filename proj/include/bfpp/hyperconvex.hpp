#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bfpp/errors.hpp"
#include "bfpp/stepfn.hpp"

namespace bfpp {

// In a sup-norm lattice the ball B(f, r) is the order interval [f - r, f + r].
// Two such intervals meet iff dist(f, g) <= r + s, and a pairwise meeting
// family is pierced by sup_i (f_i - r_i).

/// Indices of the first pair of balls that do not meet.
using DisjointPair = std::pair<std::size_t, std::size_t>;

/// nullopt when every pair satisfies dist(c_i, c_j) <= r_i + r_j.
inline std::optional<DisjointPair> pairwise_intersect(std::span<Ball const> balls) {
  for (std::size_t i = 0; i < balls.size(); ++i)
    for (std::size_t j = i + 1; j < balls.size(); ++j)
      if (balls[i].radius() + balls[j].radius() < dist(balls[i].center(), balls[j].center()))
        return DisjointPair{i, j};
  return std::nullopt;
}

namespace detail {

inline std::vector<StepFn> shifted_centers(std::span<Ball const> balls, int direction) {
  std::vector<StepFn> out;
  out.reserve(balls.size());
  for (auto const& b : balls)
    out.push_back(add(b.center(), StepFn::constant(Rational(direction) * b.radius())));
  return out;
}

} // namespace detail

struct IntervalHull {
  StepFn lower;
  StepFn upper;
  bool nonempty = false;
};

/// lower = sup_i (c_i - r_i), upper = inf_i (c_i + r_i). Everything between
/// them lies in every ball.
inline IntervalHull interval_hull(std::span<Ball const> balls) {
  if (balls.empty())
    throw std::invalid_argument("interval_hull of an empty family");
  IntervalHull h;
  h.lower = family_sup(detail::shifted_centers(balls, -1));
  h.upper = family_inf(detail::shifted_centers(balls, +1));
  h.nonempty = pointwise_leq(h.lower, h.upper);
  return h;
}

/// The common point sup_i (c_i - r_i) of a pairwise intersecting family.
/// Throws PreconditionError if some pair is disjoint.
inline StepFn helly_witness(std::span<Ball const> balls) {
  if (balls.empty())
    throw std::invalid_argument("helly_witness of an empty family");
  if (auto bad = pairwise_intersect(balls))
    throw PreconditionError("balls " + std::to_string(bad->first) + " and " +
                            std::to_string(bad->second) + " do not intersect");
  StepFn w = family_sup(detail::shifted_centers(balls, -1));
  for (auto const& b : balls)
    if (!in_ball(w, b))
      throw std::logic_error("helly witness " + to_string(w) + " misses " + to_string(b));
  return w;
}

} // namespace bfpp
