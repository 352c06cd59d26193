#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bfpp/errors.hpp"
#include "bfpp/rational.hpp"

namespace bfpp {

/// Either a closed interval [lo, hi] or the half-line [0, inf).
struct PLDomain {
  enum class Kind { Interval, HalfLine };

  Kind kind = Kind::Interval;
  Rational lo{0};
  Rational hi{0};

  static PLDomain interval(Rational lo, Rational hi) {
    if (hi < lo)
      throw std::invalid_argument("interval endpoints out of order");
    return {Kind::Interval, std::move(lo), std::move(hi)};
  }
  static PLDomain half_line() { return {Kind::HalfLine, Rational(0), Rational(0)}; }
  static PLDomain symmetric_unit() { return interval(Rational(-1), Rational(1)); }

  bool is_half_line() const noexcept { return kind == Kind::HalfLine; }
  bool contains(Rational const& t) const {
    return !(t < lo) && (is_half_line() || !(hi < t));
  }

  friend bool operator==(PLDomain const&, PLDomain const&) = default;
};

struct Breakpoint {
  Rational x;
  Rational y;

  friend bool operator==(Breakpoint const&, Breakpoint const&) = default;
};

/*
 * Continuous piecewise-linear function with rational breakpoints.
 *
 * On an interval the first and last breakpoints sit on the endpoints. On the
 * half-line the first breakpoint is at 0 and the function is constant (the
 * tail value) after the last one.
 */
class PLFunction {
public:
  PLFunction(PLDomain domain, std::vector<Breakpoint> points)
      : domain_(std::move(domain)), points_(std::move(points)) {
    if (points_.empty())
      throw std::invalid_argument("PL function needs at least one breakpoint");
    for (std::size_t i = 1; i < points_.size(); ++i)
      if (!(points_[i - 1].x < points_[i].x))
        throw std::invalid_argument("PL breakpoints must be strictly increasing");
    if (points_.front().x != domain_.lo)
      throw std::invalid_argument("first breakpoint must sit at the left end of the domain");
    if (!domain_.is_half_line() && points_.back().x != domain_.hi)
      throw std::invalid_argument("last breakpoint must sit at the right end of the interval");
  }

  static PLFunction constant(PLDomain domain, Rational c) {
    std::vector<Breakpoint> pts{{domain.lo, c}};
    if (!domain.is_half_line() && domain.lo != domain.hi)
      pts.push_back({domain.hi, c});
    return PLFunction(std::move(domain), std::move(pts));
  }

  PLDomain const& domain() const noexcept { return domain_; }
  std::vector<Breakpoint> const& points() const noexcept { return points_; }
  /// Value after the last breakpoint (meaningful on the half-line).
  Rational const& tail() const noexcept { return points_.back().y; }

  Rational operator()(Rational const& t) const {
    if (!domain_.contains(t))
      throw PreconditionError("PL evaluation at " + t.str() + " outside the domain");
    if (!(points_.back().x > t))
      return points_.back().y;
    auto it = std::upper_bound(points_.begin(), points_.end(), t,
                               [](Rational const& v, Breakpoint const& p) { return v < p.x; });
    auto const& right = *it;
    auto const& left = *(it - 1);
    return left.y + (right.y - left.y) * (t - left.x) / (right.x - left.x);
  }

private:
  PLDomain domain_;
  std::vector<Breakpoint> points_;
};

inline Rational pl_eval(PLFunction const& f, Rational const& t) { return f(t); }

/// t -> f(t) + p t + q. A nonzero slope is rejected on the half-line, where
/// the result would not be eventually constant.
inline PLFunction pl_add_affine(PLFunction const& f, Rational const& p, Rational const& q) {
  if (f.domain().is_half_line() && p != 0)
    throw PreconditionError("pl_add_affine: nonzero slope on the half-line");
  std::vector<Breakpoint> pts = f.points();
  for (auto& b : pts)
    b.y += p * b.x + q;
  return PLFunction(f.domain(), std::move(pts));
}

/// min(hi, max(lo, f)), with the crossing abscissae inserted as breakpoints.
inline PLFunction pl_clamp(PLFunction const& f, Rational const& lo, Rational const& hi) {
  if (hi < lo)
    throw PreconditionError("pl_clamp requires lo <= hi");
  auto const& in = f.points();
  std::vector<Breakpoint> out;
  out.reserve(in.size() * 2);
  auto clip = [&](Rational const& y) { return y < lo ? lo : (hi < y ? hi : y); };
  out.push_back({in[0].x, clip(in[0].y)});
  for (std::size_t i = 1; i < in.size(); ++i) {
    auto const& a = in[i - 1];
    auto const& b = in[i];
    std::vector<Rational> cross;
    for (Rational const* level : {&lo, &hi}) {
      Rational da = a.y - *level;
      Rational db = b.y - *level;
      if (da * db < 0)
        cross.push_back(a.x + (*level - a.y) * (b.x - a.x) / (b.y - a.y));
    }
    std::sort(cross.begin(), cross.end());
    for (auto& x : cross)
      if (x != out.back().x)
        out.push_back({x, clip(f(x))});
    out.push_back({b.x, clip(b.y)});
  }
  return PLFunction(f.domain(), std::move(out));
}

namespace detail {

inline void require_same_domain(PLFunction const& f, PLFunction const& g) {
  if (f.domain() != g.domain())
    throw PreconditionError("PL functions live on different domains");
}

/// Sorted union of both breakpoint sets; f - g is linear between neighbours.
inline std::vector<Rational> refinement(PLFunction const& f, PLFunction const& g) {
  std::vector<Rational> xs;
  xs.reserve(f.points().size() + g.points().size());
  for (auto const& b : f.points())
    xs.push_back(b.x);
  for (auto const& b : g.points())
    xs.push_back(b.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

} // namespace detail

inline Rational pl_sup_norm(PLFunction const& f) {
  Rational m(0);
  for (auto const& b : f.points())
    m = std::max(m, abs(b.y));
  return m;
}

/// Exact sup |f - g|, attained on the merged refinement.
inline Rational pl_dist(PLFunction const& f, PLFunction const& g) {
  detail::require_same_domain(f, g);
  Rational m(0);
  for (auto const& x : detail::refinement(f, g))
    m = std::max(m, abs(Rational(f(x) - g(x))));
  return m;
}

inline bool pl_equal(PLFunction const& f, PLFunction const& g) {
  detail::require_same_domain(f, g);
  for (auto const& x : detail::refinement(f, g))
    if (f(x) != g(x))
      return false;
  return true;
}

/// Semantic equality; false (not an error) across domains.
inline bool operator==(PLFunction const& f, PLFunction const& g) {
  return f.domain() == g.domain() && pl_equal(f, g);
}

namespace detail {

inline void require_unit_ball_on_symmetric_interval(PLFunction const& f, char const* who) {
  if (f.domain() != PLDomain::symmetric_unit())
    throw PreconditionError(std::string(who) + " needs a function on [-1,1]");
  if (Rational(1) < pl_sup_norm(f))
    throw PreconditionError(std::string(who) + " needs ||f|| <= 1");
}

} // namespace detail

/// T f = min(1, max(-1, f + 2t)) on [-1, 1]; nonexpansive and fixed point free.
inline PLFunction clamp_shift(PLFunction const& f) {
  detail::require_unit_ball_on_symmetric_interval(f, "clamp_shift");
  return pl_clamp(pl_add_affine(f, Rational(2), Rational(0)), Rational(-1), Rational(1));
}

/*
 * A point where clamp_shift(f) differs from f. A fixed point would have to be
 * 1 on (0,1] and -1 on [-1,0), which no continuous function is, so one exists;
 * it is found on the merged refinement, scanned from the right end.
 */
inline Rational pl_discrepancy(PLFunction const& f) {
  PLFunction tf = clamp_shift(f);
  auto xs = detail::refinement(f, tf);
  for (auto it = xs.rbegin(); it != xs.rend(); ++it)
    if (tf(*it) != f(*it))
      return *it;
  throw UnexpectedFixedPoint("clamp_shift fixes a PL function");
}

// --- eventually constant sequences ----------------------------------------------------

/// a_1, a_2, ... given by a finite prefix and then a constant. Trailing prefix
/// entries equal to the tail are dropped. a_0 is not stored (it is 0 by
/// convention wherever it matters).
class SeqRep {
public:
  SeqRep() = default;
  explicit SeqRep(std::vector<Rational> prefix, Rational tail = Rational(0))
      : prefix_(std::move(prefix)), tail_(std::move(tail)) {
    while (!prefix_.empty() && prefix_.back() == tail_)
      prefix_.pop_back();
  }

  std::vector<Rational> const& prefix() const noexcept { return prefix_; }
  Rational const& tail() const noexcept { return tail_; }

  /// a_n for n >= 1.
  Rational const& operator[](std::size_t n) const {
    if (n == 0)
      throw PreconditionError("SeqRep is indexed from 1");
    return n <= prefix_.size() ? prefix_[n - 1] : tail_;
  }

  friend bool operator==(SeqRep const&, SeqRep const&) = default;

private:
  std::vector<Rational> prefix_;
  Rational tail_{0};
};

/// sup_n |a_n - b_n|.
inline Rational seq_dist(SeqRep const& a, SeqRep const& b) {
  std::size_t n = std::max(a.prefix().size(), b.prefix().size()) + 1;
  Rational m(0);
  for (std::size_t i = 1; i <= n; ++i)
    m = std::max(m, abs(Rational(a[i] - b[i])));
  return m;
}

/// Equal modulo null sequences: the tails agree.
inline bool quotient_equal(SeqRep const& a, SeqRep const& b) { return a.tail() == b.tail(); }

/// limsup |a_n|.
inline Rational quotient_seminorm(SeqRep const& a) { return abs(a.tail()); }

/// Integer sampling f -> (f(1), f(2), ...).
inline SeqRep sample_E(PLFunction const& f) {
  if (!f.domain().is_half_line())
    throw PreconditionError("sample_E needs a half-line function");
  Rational const& last = f.points().back().x;
  Integer n = numerator(last) / denominator(last);
  if (n * denominator(last) != numerator(last))
    ++n;
  std::vector<Rational> prefix;
  for (Integer i = 1; i <= n; ++i)
    prefix.push_back(f(Rational(i)));
  return SeqRep(std::move(prefix), f.tail());
}

/// Linear interpolation of (a_0 := 0, a_1, a_2, ...) at the integers:
///   (ceil x - x) a_floor(x) + (x - floor x) a_ceil(x).
inline PLFunction interpolate_R(SeqRep const& a) {
  std::vector<Breakpoint> pts{{Rational(0), Rational(0)}};
  std::size_t n = a.prefix().size();
  for (std::size_t i = 1; i <= n + 1; ++i)
    pts.push_back({Rational(static_cast<long long>(i)), a[i]});
  return PLFunction(PLDomain::half_line(), std::move(pts));
}

// --- text forms ---------------------------------------------------------------------
//
//   domain=[a,b]|halfline; points=(x1,y1),(x2,y2),...; tail=<rational>
//   prefix=[q1,...]; tail=<rational>

inline PLFunction parse_pl(std::string_view text) {
  detail::Cursor in(text);
  in.expect("domain");
  in.expect('=');
  PLDomain domain;
  if (in.consume("halfline")) {
    domain = PLDomain::half_line();
  } else {
    std::size_t at = in.position();
    in.expect('[');
    Rational a = detail::parse_rational(in);
    in.expect(',');
    Rational b = detail::parse_rational(in);
    in.expect(']');
    if (b < a)
      throw ParseError("interval endpoints out of order", at);
    domain = PLDomain::interval(a, b);
  }
  in.expect(';');
  in.expect("points");
  in.expect('=');
  std::size_t points_at = in.position();
  std::vector<Breakpoint> pts;
  do {
    in.expect('(');
    Rational x = detail::parse_rational(in);
    in.expect(',');
    Rational y = detail::parse_rational(in);
    in.expect(')');
    pts.push_back({std::move(x), std::move(y)});
  } while (in.consume(','));
  bool has_tail = false;
  Rational tail;
  std::size_t tail_at = 0;
  if (in.consume(';')) {
    in.expect("tail");
    in.expect('=');
    tail_at = in.position();
    tail = detail::parse_rational(in);
    has_tail = true;
  }
  in.expect_end();
  if (domain.is_half_line() && !has_tail)
    throw ParseError("half-line function needs 'tail='", text.size());
  if (has_tail && tail != pts.back().y)
    throw ParseError("tail must equal the last breakpoint value", tail_at);
  try {
    return PLFunction(std::move(domain), std::move(pts));
  } catch (std::invalid_argument const& e) {
    throw ParseError(e.what(), points_at);
  }
}

inline std::string to_string(PLFunction const& f) {
  std::string out = "domain=";
  if (f.domain().is_half_line())
    out += "halfline";
  else
    out += '[' + f.domain().lo.str() + ',' + f.domain().hi.str() + ']';
  out += "; points=";
  for (std::size_t i = 0; i < f.points().size(); ++i) {
    if (i)
      out += ',';
    out += '(' + f.points()[i].x.str() + ',' + f.points()[i].y.str() + ')';
  }
  if (f.domain().is_half_line())
    out += "; tail=" + f.tail().str();
  return out;
}

inline SeqRep parse_seq(std::string_view text) {
  detail::Cursor in(text);
  in.expect("prefix");
  in.expect('=');
  in.expect('[');
  std::vector<Rational> prefix;
  if (!in.consume(']')) {
    do
      prefix.push_back(detail::parse_rational(in));
    while (in.consume(','));
    in.expect(']');
  }
  in.expect(';');
  in.expect("tail");
  in.expect('=');
  Rational tail = detail::parse_rational(in);
  in.expect_end();
  return SeqRep(std::move(prefix), std::move(tail));
}

inline std::string to_string(SeqRep const& a) {
  std::string out = "prefix=[";
  for (std::size_t i = 0; i < a.prefix().size(); ++i) {
    if (i)
      out += ',';
    out += a.prefix()[i].str();
  }
  return out + "]; tail=" + a.tail().str();
}

inline std::ostream& operator<<(std::ostream& os, PLFunction const& f) { return os << to_string(f); }
inline std::ostream& operator<<(std::ostream& os, SeqRep const& a) { return os << to_string(a); }

} // namespace bfpp
