#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bfpp/check/oracles.hpp"
#include "bfpp/check/random.hpp"
#include "bfpp/check/report.hpp"
#include "bfpp/dynamics.hpp"
#include "bfpp/hyperconvex.hpp"
#include "bfpp/ordinal.hpp"
#include "bfpp/pl.hpp"
#include "bfpp/stepfn.hpp"

namespace bfpp::check {

struct SuiteOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  /// Draw StepFn keys from beyond w^3 as well.
  bool wide_pool = false;
  /// Fixed g for the gap / ppoint maps; random per trial when absent.
  std::optional<StepFn> g;
};

inline constexpr std::string_view nonexpansive_ops[] = {"double-shift", "single-shift", "gap",
                                                        "ppoint", "clamp-shift"};
inline constexpr std::string_view no_fixed_point_ops[] = {"double-shift", "single-shift0",
                                                          "clamp-shift"};
inline constexpr std::string_view fixed_point_ops[] = {"gap", "ppoint"};

namespace detail {

inline std::string to_string(std::strong_ordering c) {
  return c < 0 ? "Less" : (c > 0 ? "Greater" : "Equal");
}

inline std::string to_string(OrdinalKind k) {
  switch (k) {
  case OrdinalKind::Zero:
    return "Zero";
  case OrdinalKind::Successor:
    return "Successor";
  case OrdinalKind::Limit:
    return "Limit";
  }
  return "?";
}

inline Triple random_triple(Rng& rng) {
  auto c = [&] { return static_cast<std::uint64_t>(rng.between(0, 4)); };
  Triple t;
  t.i = c();
  t.j = c();
  t.k = c();
  return t;
}

inline std::string show(Triple t) { return bfpp::to_string(to_ordinal(t)); }

inline StepFnShape unit_shape(SuiteOptions const& o) { return {.wide_pool = o.wide_pool}; }

inline StepFn pick_gap_g(Rng& rng, SuiteOptions const& o) {
  return o.g ? *o.g : random_stepfn(rng, unit_shape(o));
}

inline StepFn pick_ppoint_g(Rng& rng, SuiteOptions const& o, bool zero_tail) {
  if (o.g)
    return *o.g;
  StepFnShape s = unit_shape(o);
  s.nonnegative = true;
  s.zero_tail = zero_tail;
  return random_stepfn(rng, s);
}

inline void check_operator(OperatorDescriptor const& op, StepFn const& f, StepFn const& h,
                           std::vector<Failure>& out) {
  if (auto v = check_nonexpansive(op, f, h))
    out.push_back({{bfpp::to_string(v->f), bfpp::to_string(v->g)},
                   bfpp::to_string(v->witness),
                   "|Tf - Tg| <= " + v->input_distance.str(),
                   v->output_gap.str()});
  for (StepFn const* x : {&f, &h})
    if (auto v = check_ball_invariance(op, *x))
      out.push_back({{bfpp::to_string(v->input)}, bfpp::to_string(v->witness),
                     "output in " + bfpp::to_string(op.domain), bfpp::to_string(v->output)});
}

} // namespace detail

// --- ordinal arithmetic -----------------------------------------------------------------

inline Report check_ordinal_laws(SuiteOptions const& o) {
  return run_trials("ordinal-laws", o.trials, o.seed, o.jobs, [&](Rng& rng, std::vector<Failure>& out) {
    using detail::show;
    Triple ta = detail::random_triple(rng), tb = detail::random_triple(rng), tc = detail::random_triple(rng);
    Ordinal a = to_ordinal(ta), b = to_ordinal(tb), c = to_ordinal(tc);
    auto fail = [&](std::vector<std::string> in, std::string law, std::string expected, std::string actual) {
      out.push_back({std::move(in), std::move(law), std::move(expected), std::move(actual)});
    };

    // Against the triple model.
    if (auto got = compare(a, b); got != (ta <=> tb))
      fail({show(ta), show(tb)}, "cmp", detail::to_string(ta <=> tb), detail::to_string(got));
    if (auto got = add(a, b); got != to_ordinal(triple_add(ta, tb)))
      fail({show(ta), show(tb)}, "add", show(triple_add(ta, tb)), to_string(got));
    if (auto got = classify(a); got != triple_classify(ta))
      fail({show(ta)}, "classify", detail::to_string(triple_classify(ta)), detail::to_string(got));

    // Algebraic laws, on the triple pool and on the wide pool.
    Ordinal wide[] = {random_ordinal(rng, true), random_ordinal(rng, true), random_ordinal(rng, true)};
    for (auto const& xs : {std::vector<Ordinal>{a, b, c}, std::vector<Ordinal>(wide, wide + 3)}) {
      Ordinal const &x = xs[0], &y = xs[1], &z = xs[2];
      std::vector<std::string> in{to_string(x), to_string(y), to_string(z)};
      if ((x + y) + z != x + (y + z))
        fail(in, "associativity", to_string(x + (y + z)), to_string((x + y) + z));
      if (x + Ordinal{} != x || Ordinal{} + x != x)
        fail(in, "identity", to_string(x), to_string(Ordinal{} + x));
      if (y != z) {
        Ordinal const& lo = y < z ? y : z;
        Ordinal const& hi = y < z ? z : y;
        if (!(x + lo < x + hi))
          fail(in, "right strict monotonicity", to_string(x + lo) + " < " + to_string(x + hi),
               detail::to_string(compare(x + lo, x + hi)));
      }
      if (compare(x, y) != (0 <=> compare(y, x)))
        fail(in, "antisymmetry", detail::to_string(0 <=> compare(y, x)), detail::to_string(compare(x, y)));
      if (x <= y && y <= z && !(x <= z))
        fail(in, "transitivity", "x <= z", detail::to_string(compare(x, z)));
      auto [base, n] = split_finite(x);
      if (base + n != x || classify(base) == OrdinalKind::Successor)
        fail(in, "split_finite", to_string(x), to_string(base) + " + " + std::to_string(n));
      if (parse_ordinal(to_string(x)) != x)
        fail(in, "parse/format round trip", to_string(x), to_string(parse_ordinal(to_string(x))));
    }
  });
}

// --- nonexpansive maps --------------------------------------------------------------------

inline Report check_nonexpansive(std::string_view op, SuiteOptions const& o) {
  std::string suite = "nonexpansive/" + std::string(op);
  if (op == "clamp-shift")
    return run_trials(suite, o.trials, o.seed, o.jobs, [&](Rng& rng, std::vector<Failure>& out) {
      PLFunction f = random_pl_unit(rng), g = random_pl_unit(rng);
      PLFunction tf = clamp_shift(f), tg = clamp_shift(g);
      Rational d = pl_dist(f, g), e = pl_dist(tf, tg);
      if (d < e)
        out.push_back({{to_string(f), to_string(g)}, "", "dist(Tf,Tg) <= " + d.str(), e.str()});
      for (auto const* t : {&tf, &tg})
        if (Rational(1) < pl_sup_norm(*t))
          out.push_back({{to_string(f), to_string(g)}, "", "||T.|| <= 1", to_string(*t)});
    });

  if (op != "double-shift" && op != "single-shift" && op != "gap" && op != "ppoint")
    throw std::invalid_argument("unknown operator '" + std::string(op) + "'");
  return run_trials(suite, o.trials, o.seed, o.jobs, [&](Rng& rng, std::vector<Failure>& out) {
    OperatorDescriptor desc = op == "double-shift" ? double_shift_operator()
                              : op == "single-shift" ? single_shift_operator()
                              : op == "gap"          ? gap_operator(detail::pick_gap_g(rng, o))
                                                     : ppoint_operator(detail::pick_ppoint_g(rng, o, false));
    StepFn f = random_stepfn(rng, detail::unit_shape(o));
    StepFn h = random_stepfn(rng, detail::unit_shape(o));
    detail::check_operator(desc, f, h, out);
  });
}

// --- fixed point freeness ---------------------------------------------------------------------

inline Report check_no_fixed_point(std::string_view op, SuiteOptions const& o) {
  std::string suite = "no-fixed-point/" + std::string(op);
  if (op == "clamp-shift")
    return run_trials(suite, o.trials, o.seed, o.jobs, [&](Rng& rng, std::vector<Failure>& out) {
      PLFunction f = random_pl_unit(rng);
      Rational t = pl_discrepancy(f);
      PLFunction tf = clamp_shift(f);
      if (tf(t) == f(t))
        out.push_back({{to_string(f)}, t.str(), "Tf(t) != f(t)", tf(t).str()});
    });

  bool const two = op == "double-shift";
  if (!two && op != "single-shift0")
    throw std::invalid_argument("unknown operator '" + std::string(op) + "'");
  return run_trials(suite, o.trials, o.seed, o.jobs, [&](Rng& rng, std::vector<Failure>& out) {
    StepFnShape shape = detail::unit_shape(o);
    shape.zero_tail = !two;
    StepFn f = random_stepfn(rng, shape);
    OperatorDescriptor desc = two ? double_shift_operator() : single_shift_operator();
    Ordinal w = discrepancy_witness(desc, f);
    StepFn tf = desc(f);
    if (tf(w) == f(w))
      out.push_back({{to_string(f)}, to_string(w), "Tf(w) != f(w)", tf(w).str()});
    if (two) {
      // No finite-deviation f can copy its own shift below a limit.
      Ordinal mu = minimal_bad_limit(f);
      if (!(w < mu))
        out.push_back({{to_string(f)}, to_string(w), "witness below " + to_string(mu), to_string(w)});
    }
  });
}

// --- limit clauses ------------------------------------------------------------------------------

inline std::vector<Ordinal> oracle_limits() {
  Ordinal w = Ordinal::omega();
  Ordinal w2 = Ordinal::omega_power(Ordinal::natural(2));
  return {w, w + w, w2, w2 + w};
}

/// Closed-form shifts against the literal clause evaluation, at the four
/// reference limits, their successors, and every point either function moves.
inline Report check_limit_oracle(SuiteOptions const& o) {
  return run_trials("limit-oracle", o.trials, o.seed, o.jobs, [&](Rng& rng, std::vector<Failure>& out) {
    StepFn f = random_stepfn(rng, detail::unit_shape(o));
    StepFn tf = double_shift(f);
    for (auto const& beta : oracle_limits()) {
      Rational inf_sup = limit_value_oracle(f, beta, LimitFormula::InfSup);
      Rational sup_inf = limit_value_oracle(f, beta, LimitFormula::SupInf);
      if (tf(beta) != inf_sup)
        out.push_back({{to_string(f)}, to_string(beta), inf_sup.str(), tf(beta).str()});
      if (tf(beta + 1) != sup_inf)
        out.push_back({{to_string(f)}, to_string(beta + 1), sup_inf.str(), tf(beta + 1).str()});
    }
    StepFn sf = single_shift(f);
    StepFn const* all[] = {&f, &tf, &sf};
    std::vector<Ordinal> points = probe_points(all);
    for (auto const& beta : oracle_limits()) {
      points.push_back(beta);
      points.push_back(beta + 1);
    }
    points.push_back(Ordinal::natural(0));
    points.push_back(Ordinal::natural(1));
    for (auto const& at : points) {
      if (auto want = double_shift_by_clauses(f, at); tf(at) != want)
        out.push_back({{to_string(f)}, "double-shift at " + to_string(at), want.str(), tf(at).str()});
      if (auto want = single_shift_by_clauses(f, at); sf(at) != want)
        out.push_back({{to_string(f)}, "single-shift at " + to_string(at), want.str(), sf(at).str()});
    }
  });
}

// --- positive direction: gap and P-point maps -------------------------------------------------------

inline Report check_fixed_point(std::string_view op, SuiteOptions const& o) {
  std::string suite = "fixed-point/" + std::string(op);
  if (op == "gap")
    return run_trials(suite, o.trials, o.seed, o.jobs, [&](Rng& rng, std::vector<Failure>& out) {
      StepFn g = detail::pick_gap_g(rng, o);
      OperatorDescriptor desc = gap_operator(g);
      detail::check_operator(desc, random_stepfn(rng, detail::unit_shape(o)),
                             random_stepfn(rng, detail::unit_shape(o)), out);
      StepFn s = gap_fixed_point(g);
      if (gap_map(g, s) != s)
        out.push_back({{to_string(g)}, to_string(s), to_string(s), to_string(gap_map(g, s))});
      if (s * abs(g) != g)
        out.push_back({{to_string(g)}, to_string(s), to_string(g), to_string(s * abs(g))});
    });
  if (op == "ppoint")
    return run_trials(suite, o.trials, o.seed, o.jobs, [&](Rng& rng, std::vector<Failure>& out) {
      StepFn g = detail::pick_ppoint_g(rng, o, true);
      StepFn f = ppoint_fixed_point(g);
      if (ppoint_map(g, f) != f)
        out.push_back({{to_string(g)}, to_string(f), to_string(f), to_string(ppoint_map(g, f))});
      if (g * (StepFn::constant(1) - f) != StepFn{})
        out.push_back({{to_string(g)}, to_string(f), "g(1-f) = 0",
                       to_string(g * (StepFn::constant(1) - f))});
    });
  throw std::invalid_argument("unknown operator '" + std::string(op) + "'");
}

// --- ball intersections -----------------------------------------------------------------------------

inline Report check_helly(SuiteOptions const& o) {
  return run_trials("helly", o.trials, o.seed, o.jobs, [&](Rng& rng, std::vector<Failure>& out) {
    auto size = static_cast<std::size_t>(rng.between(2, 8));
    std::vector<Ball> family = random_intersecting_family(rng, size);
    std::vector<std::string> in;
    for (auto const& b : family)
      in.push_back(to_string(b));

    if (auto bad = pairwise_intersect(family)) {
      out.push_back({in, std::to_string(bad->first) + "," + std::to_string(bad->second),
                     "pairwise intersecting", "disjoint pair"});
      return;
    }
    StepFn w = helly_witness(family);
    for (std::size_t i = 0; i < family.size(); ++i)
      if (!in_ball(w, family[i]))
        out.push_back({in, to_string(w), "witness in ball " + std::to_string(i),
                       "distance " + dist(w, family[i].center()).str()});
    IntervalHull hull = interval_hull(family);
    if (!hull.nonempty || hull.lower != w)
      out.push_back({in, to_string(w), "hull lower bound = witness, nonempty",
                     to_string(hull.lower) + (hull.nonempty ? "" : " (empty)")});

    // Dropping a ball can only loosen the hull.
    std::vector<Ball> fewer(family.begin(), family.end() - 1);
    IntervalHull loose = interval_hull(fewer);
    if (!pointwise_leq(loose.lower, hull.lower) || !pointwise_leq(hull.upper, loose.upper))
      out.push_back({in, "", "hull monotone in the family", "looser hull after adding a ball"});

    std::vector<Ball> apart = disjoint_family(rng, family);
    if (!pairwise_intersect(apart))
      out.push_back({{to_string(apart.back())}, "", "disjoint pair detected", "Ok"});
    if (interval_hull(apart).nonempty)
      out.push_back({{to_string(apart.back())}, "", "empty hull", "nonempty"});
    try {
      helly_witness(apart);
      out.push_back({{to_string(apart.back())}, "", "precondition violation", "witness returned"});
    } catch (PreconditionError const&) {
    }
  });
}

// --- retraction pair ------------------------------------------------------------------------------------

inline Report check_retraction(SuiteOptions const& o) {
  return run_trials("retraction", o.trials, o.seed, o.jobs, [&](Rng& rng, std::vector<Failure>& out) {
    SeqRep a = random_seqrep(rng), b = random_seqrep(rng);
    PLFunction ra = interpolate_R(a), rb = interpolate_R(b);
    if (sample_E(ra) != a)
      out.push_back({{to_string(a)}, "", to_string(a), to_string(sample_E(ra))});
    if (seq_dist(a, b) < pl_dist(ra, rb))
      out.push_back({{to_string(a), to_string(b)}, "", "dist(Ra,Rb) <= " + seq_dist(a, b).str(),
                     pl_dist(ra, rb).str()});

    PLFunction f = random_pl_half_line(rng), g = random_pl_half_line(rng);
    if (pl_dist(f, g) < seq_dist(sample_E(f), sample_E(g)))
      out.push_back({{to_string(f), to_string(g)}, "", "dist(Ef,Eg) <= " + pl_dist(f, g).str(),
                     seq_dist(sample_E(f), sample_E(g)).str()});

    auto identity = [](SeqRep const& y) { return y; };
    SeqRep back = transfer_fixed_point(sample_E, interpolate_R, identity, ra);
    if (back != a)
      out.push_back({{to_string(a)}, "", to_string(a), to_string(back)});
  });
}

// --- everything ----------------------------------------------------------------------------------------

inline std::vector<Report> run_full_suite(SuiteOptions const& o) {
  std::vector<Report> out;
  out.push_back(check_ordinal_laws(o));
  for (auto op : nonexpansive_ops)
    out.push_back(check_nonexpansive(op, o));
  for (auto op : no_fixed_point_ops)
    out.push_back(check_no_fixed_point(op, o));
  out.push_back(check_limit_oracle(o));
  for (auto op : fixed_point_ops)
    out.push_back(check_fixed_point(op, o));
  out.push_back(check_helly(o));
  out.push_back(check_retraction(o));
  return out;
}

} // namespace bfpp::check
