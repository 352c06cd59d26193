#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bfpp/ordinal.hpp"
#include "bfpp/pl.hpp"
#include "bfpp/stepfn.hpp"

namespace bfpp::check {

/// splitmix64; used both as the per-trial generator and to derive trial seeds
/// from the master seed, so results do not depend on scheduling.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi]. The modulo bias is irrelevant at these ranges.
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  bool chance(int percent) { return between(0, 99) < percent; }

  static Rng for_trial(std::uint64_t master, std::uint64_t trial) {
    Rng mix(master ^ (trial * 0xD1B54A32D192ED03ULL));
    return Rng(mix.next());
  }

private:
  std::uint64_t state_;
};

struct StepFnShape {
  std::size_t max_keys = 12;
  bool unit_ball = true;
  bool zero_tail = false;
  bool nonnegative = false;
  /// Draw some keys from well above w^3 (w^w, w^(w+1), ...).
  bool wide_pool = false;
};

/// w^2*i + w*j + k with small components; covers finite, w-scale and w^2-scale
/// limits and their successors.
inline Ordinal random_ordinal_below_w3(Rng& rng, std::int64_t max_component = 3) {
  std::vector<OrdinalTerm> terms;
  auto i = rng.between(0, max_component);
  auto j = rng.between(0, max_component);
  auto k = rng.between(0, max_component + 2);
  if (i)
    terms.push_back({Ordinal::natural(2), static_cast<Ordinal::Coefficient>(i)});
  if (j)
    terms.push_back({Ordinal::natural(1), static_cast<Ordinal::Coefficient>(j)});
  if (k)
    terms.push_back({Ordinal{}, static_cast<Ordinal::Coefficient>(k)});
  return Ordinal::from_terms(std::move(terms));
}

inline Ordinal random_ordinal(Rng& rng, bool wide) {
  Ordinal low = random_ordinal_below_w3(rng);
  if (!wide || rng.chance(60))
    return low;
  Ordinal high_exp = rng.chance(50) ? Ordinal::omega() : Ordinal::omega() + 1;
  return Ordinal::omega_power(high_exp, static_cast<Ordinal::Coefficient>(rng.between(1, 2))) + low;
}

/// Rational p/q with 1 <= q <= max_den and value in [lo, hi].
inline Rational random_rational(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_den = 4) {
  auto q = rng.between(1, max_den);
  auto p = rng.between(lo * q, hi * q);
  return Rational(p, q);
}

inline Rational random_value(Rng& rng, StepFnShape const& shape) {
  if (shape.nonnegative)
    return random_rational(rng, 0, 1);
  if (shape.unit_ball)
    return random_rational(rng, -1, 1);
  return random_rational(rng, -3, 3);
}

inline StepFn random_stepfn(Rng& rng, StepFnShape const& shape = {}) {
  Rational tail = shape.zero_tail ? Rational(0) : random_value(rng, shape);
  auto count = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(shape.max_keys)));
  StepFn::Deviations devs;
  for (std::size_t n = 0; n < count; ++n)
    devs.insert_or_assign(random_ordinal(rng, shape.wide_pool), random_value(rng, shape));
  return StepFn(std::move(tail), std::move(devs));
}

/// A unit-ball PL function on [-1, 1] with up to `max_inner` interior breakpoints.
inline PLFunction random_pl_unit(Rng& rng, std::size_t max_inner = 6) {
  std::vector<Rational> xs{Rational(-1), Rational(1)};
  auto inner = rng.between(0, static_cast<std::int64_t>(max_inner));
  for (std::int64_t n = 0; n < inner; ++n) {
    Rational x = random_rational(rng, -1, 1, 8);
    if (abs(x) != 1)
      xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Breakpoint> pts;
  for (auto& x : xs)
    pts.push_back({x, random_rational(rng, -1, 1)});
  return PLFunction(PLDomain::symmetric_unit(), std::move(pts));
}

/// A PL function on [0, inf) with breakpoints at random rationals in [0, 8].
inline PLFunction random_pl_half_line(Rng& rng, std::size_t max_points = 6) {
  std::vector<Rational> xs{Rational(0)};
  auto extra = rng.between(0, static_cast<std::int64_t>(max_points));
  for (std::int64_t n = 0; n < extra; ++n)
    xs.push_back(random_rational(rng, 0, 8, 3));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Breakpoint> pts;
  for (auto& x : xs)
    pts.push_back({x, random_rational(rng, -2, 2)});
  return PLFunction(PLDomain::half_line(), std::move(pts));
}

inline SeqRep random_seqrep(Rng& rng, std::size_t max_len = 8) {
  auto len = rng.between(0, static_cast<std::int64_t>(max_len));
  std::vector<Rational> prefix;
  for (std::int64_t n = 0; n < len; ++n)
    prefix.push_back(random_rational(rng, -2, 2));
  return SeqRep(std::move(prefix), random_rational(rng, -2, 2));
}

/// Random centers and radii, then every radius grown by half the worst pairwise
/// deficit. The worst pair ends up exactly tangent.
inline std::vector<Ball> random_intersecting_family(Rng& rng, std::size_t size) {
  StepFnShape shape{.max_keys = 6, .unit_ball = false};
  std::vector<StepFn> centers;
  std::vector<Rational> radii;
  for (std::size_t n = 0; n < size; ++n) {
    centers.push_back(random_stepfn(rng, shape));
    radii.push_back(random_rational(rng, 0, 2));
  }
  Rational deficit(0);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      deficit = std::max(deficit, Rational(dist(centers[i], centers[j]) - radii[i] - radii[j]));
  std::vector<Ball> out;
  for (std::size_t n = 0; n < size; ++n)
    out.emplace_back(centers[n], radii[n] + deficit / 2);
  return out;
}

/// `family` plus one ball pushed out of reach of the first one.
inline std::vector<Ball> disjoint_family(Rng& rng, std::vector<Ball> family) {
  Ball const& anchor = family.front();
  Rational reach = sup_norm(anchor.center()) + anchor.radius() + 1;
  Rational r = random_rational(rng, 0, 1);
  family.emplace_back(StepFn::constant(reach + r + random_rational(rng, 1, 2)), r);
  return family;
}

} // namespace bfpp::check
