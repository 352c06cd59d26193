#pragma once

#include <functional>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bfpp/ordinal.hpp"
#include "bfpp/rational.hpp"

namespace bfpp {

/*
 * An eventually-constant function from ordinals to rationals: value `tail`
 * everywhere except at finitely many deviation points.
 *
 * The representation is normalized on construction (no deviation equals the
 * tail), so two StepFns are equal as functions iff they compare equal.
 * With tail 0 this is an element of the "null off a small set" subspace.
 */
class StepFn {
public:
  using Deviations = std::map<Ordinal, Rational>;

  StepFn() = default;
  explicit StepFn(Rational tail, Deviations deviations = {})
      : tail_(std::move(tail)), deviations_(std::move(deviations)) {
    std::erase_if(deviations_, [&](auto const& kv) { return kv.second == tail_; });
  }

  static StepFn constant(Rational c) { return StepFn(std::move(c)); }

  Rational const& tail() const noexcept { return tail_; }
  Deviations const& deviations() const noexcept { return deviations_; }

  Rational const& operator()(Ordinal const& at) const {
    auto it = deviations_.find(at);
    return it == deviations_.end() ? tail_ : it->second;
  }

  friend bool operator==(StepFn const&, StepFn const&) = default;

private:
  Rational tail_{0};
  Deviations deviations_;
};

/// Closed sup-norm ball.
class Ball {
public:
  Ball(StepFn center, Rational radius) : center_(std::move(center)), radius_(std::move(radius)) {
    if (radius_ < 0)
      throw std::invalid_argument("ball radius must be nonnegative");
  }

  static Ball unit() { return Ball(StepFn{}, Rational(1)); }

  StepFn const& center() const noexcept { return center_; }
  Rational const& radius() const noexcept { return radius_; }

  friend bool operator==(Ball const&, Ball const&) = default;

private:
  StepFn center_;
  Rational radius_;
};

inline Rational const& eval(StepFn const& f, Ordinal const& at) { return f(at); }

// --- pointwise algebra ------------------------------------------------------

/// Applies `op` pointwise; the new tail is op applied to the tails.
template <class Op>
StepFn transform(StepFn const& f, Op op) {
  StepFn::Deviations out;
  for (auto const& [k, v] : f.deviations())
    out.emplace_hint(out.end(), k, op(v));
  return StepFn(op(f.tail()), std::move(out));
}

/// Applies `op` pointwise to two functions over the merged key set.
template <class Op>
StepFn combine(StepFn const& f, StepFn const& g, Op op) {
  StepFn::Deviations out;
  auto a = f.deviations().begin(), ae = f.deviations().end();
  auto b = g.deviations().begin(), be = g.deviations().end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.emplace_hint(out.end(), a->first, op(a->second, g.tail()));
      ++a;
    } else if (a == ae || b->first < a->first) {
      out.emplace_hint(out.end(), b->first, op(f.tail(), b->second));
      ++b;
    } else {
      out.emplace_hint(out.end(), a->first, op(a->second, b->second));
      ++a;
      ++b;
    }
  }
  return StepFn(op(f.tail(), g.tail()), std::move(out));
}

inline StepFn add(StepFn const& f, StepFn const& g) { return combine(f, g, std::plus<>{}); }
inline StepFn sub(StepFn const& f, StepFn const& g) { return combine(f, g, std::minus<>{}); }
inline StepFn mul(StepFn const& f, StepFn const& g) { return combine(f, g, std::multiplies<>{}); }

inline StepFn scale(Rational const& q, StepFn const& f) {
  return transform(f, [&](Rational const& v) { return Rational(q * v); });
}

inline StepFn abs(StepFn const& f) {
  return transform(f, [](Rational const& v) { return abs(v); });
}

inline StepFn min(StepFn const& f, StepFn const& g) {
  return combine(f, g, [](Rational const& x, Rational const& y) { return x < y ? x : y; });
}

inline StepFn max(StepFn const& f, StepFn const& g) {
  return combine(f, g, [](Rational const& x, Rational const& y) { return x < y ? y : x; });
}

inline StepFn clamp(StepFn const& f, Rational const& lo, Rational const& hi) {
  if (hi < lo)
    throw PreconditionError("clamp requires lo <= hi");
  return transform(f, [&](Rational const& v) { return v < lo ? lo : (hi < v ? hi : v); });
}

inline StepFn operator+(StepFn const& f, StepFn const& g) { return add(f, g); }
inline StepFn operator-(StepFn const& f, StepFn const& g) { return sub(f, g); }
inline StepFn operator*(StepFn const& f, StepFn const& g) { return mul(f, g); }
inline StepFn operator-(StepFn const& f) { return scale(Rational(-1), f); }

/// Pointwise sign in {-1, 0, 1}; sign(g) * |g| == g.
inline StepFn sign(StepFn const& g) {
  return transform(g, [](Rational const& v) { return Rational(bfpp::sign(v)); });
}

// --- norms and order ----------------------------------------------------------

inline Rational sup_norm(StepFn const& f) {
  Rational m = abs(f.tail());
  for (auto const& [k, v] : f.deviations())
    if (auto a = abs(v); m < a)
      m = a;
  return m;
}

inline Rational dist(StepFn const& f, StepFn const& g) { return sup_norm(sub(f, g)); }

/// f <= g everywhere.
inline bool pointwise_leq(StepFn const& f, StepFn const& g) {
  StepFn d = sub(g, f);
  if (d.tail() < 0)
    return false;
  for (auto const& [k, v] : d.deviations())
    if (v < 0)
      return false;
  return true;
}

inline bool in_ball(StepFn const& f, Ball const& b) { return dist(f, b.center()) <= b.radius(); }

/// An ordinal outside every deviation set of `fs`: (largest key) + w.
inline Ordinal fresh_ordinal(std::span<StepFn const* const> fs) {
  Ordinal top;
  for (auto const* f : fs)
    if (!f->deviations().empty() && top < f->deviations().rbegin()->first)
      top = f->deviations().rbegin()->first;
  return top + Ordinal::omega();
}

inline Ordinal fresh_ordinal(StepFn const& f) {
  StepFn const* fs[] = {&f};
  return fresh_ordinal(fs);
}

inline Ordinal fresh_ordinal(StepFn const& f, StepFn const& g) {
  StepFn const* fs[] = {&f, &g};
  return fresh_ordinal(fs);
}

/// Union of the deviation keys plus one fresh ordinal, ascending. Two of the
/// given functions agree everywhere iff they agree on these points.
inline std::vector<Ordinal> probe_points(std::span<StepFn const* const> fs) {
  std::map<Ordinal, bool> keys;
  for (auto const* f : fs)
    for (auto const& [k, v] : f->deviations())
      keys.emplace(k, true);
  std::vector<Ordinal> out;
  out.reserve(keys.size() + 1);
  for (auto& [k, unused] : keys)
    out.push_back(k);
  out.push_back(fresh_ordinal(fs));
  return out;
}

// --- families -----------------------------------------------------------------

namespace detail {

template <class Pick>
StepFn fold_family(std::span<StepFn const> fs, Pick pick, char const* name) {
  if (fs.empty())
    throw std::invalid_argument(std::string(name) + " of an empty family");
  StepFn acc = fs.front();
  for (auto const& f : fs.subspan(1))
    acc = pick(acc, f);
  return acc;
}

} // namespace detail

/// Pointwise supremum of a nonempty finite family; the tail is the sup of tails.
inline StepFn family_sup(std::span<StepFn const> fs) {
  return detail::fold_family(fs, [](StepFn const& a, StepFn const& b) { return max(a, b); },
                             "family_sup");
}

inline StepFn family_inf(std::span<StepFn const> fs) {
  return detail::fold_family(fs, [](StepFn const& a, StepFn const& b) { return min(a, b); },
                             "family_inf");
}

// --- text form ------------------------------------------------------------------
//
//   tail=<rational>; [<ordinal>:<rational>, ...]

namespace detail {

inline StepFn parse_stepfn(Cursor& in) {
  in.expect("tail");
  in.expect('=');
  Rational tail = parse_rational(in);
  in.expect(';');
  in.expect('[');
  StepFn::Deviations devs;
  if (!in.consume(']')) {
    do {
      std::size_t at = in.position();
      Ordinal key = parse_ordinal(in);
      in.expect(':');
      Rational value = parse_rational(in);
      if (!devs.emplace(std::move(key), std::move(value)).second)
        throw ParseError("duplicate deviation key", at);
    } while (in.consume(','));
    in.expect(']');
  }
  return StepFn(std::move(tail), std::move(devs));
}

inline Ball parse_ball(Cursor& in) {
  in.expect("center");
  in.expect('=');
  StepFn center = parse_stepfn(in);
  in.expect(';');
  in.expect('r');
  in.expect('=');
  std::size_t at = in.position();
  Rational r = parse_rational(in);
  if (r < 0)
    throw ParseError("negative radius", at);
  return Ball(std::move(center), std::move(r));
}

} // namespace detail

inline StepFn parse_stepfn(std::string_view text) {
  detail::Cursor in(text);
  StepFn f = detail::parse_stepfn(in);
  in.expect_end();
  return f;
}

inline Ball parse_ball(std::string_view text) {
  detail::Cursor in(text);
  Ball b = detail::parse_ball(in);
  in.expect_end();
  return b;
}

inline std::string to_string(StepFn const& f) {
  std::string out = "tail=" + format_rational(f.tail()) + "; [";
  bool first = true;
  for (auto const& [k, v] : f.deviations()) {
    if (!first)
      out += ", ";
    first = false;
    out += to_string(k) + ':' + format_rational(v);
  }
  return out + ']';
}

inline std::string to_string(Ball const& b) {
  return "center=" + to_string(b.center()) + "; r=" + format_rational(b.radius());
}

inline std::ostream& operator<<(std::ostream& os, StepFn const& f) { return os << to_string(f); }
inline std::ostream& operator<<(std::ostream& os, Ball const& b) { return os << to_string(b); }

} // namespace bfpp
