// bfpp: command-line driver for the property suites and demos.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bfpp/check/suites.hpp"
#include "bfpp/dynamics.hpp"
#include "bfpp/stepfn.hpp"

namespace {

using namespace bfpp;
using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

constexpr char const* kSeedEnv = "BFPP_SEED";

std::uint64_t default_seed() {
  if (char const* s = std::getenv(kSeedEnv)) {
    try {
      return std::stoull(s);
    } catch (std::exception const&) {
      std::cerr << "warning: ignoring unparsable " << kSeedEnv << "='" << s << "'\n";
    }
  }
  return 0;
}

json stepfn_json(StepFn const& f) {
  json devs = json::array();
  for (auto const& [at, v] : f.deviations())
    devs.push_back({{"at", to_string(at)}, {"value", v.str()}});
  return {{"tail", f.tail().str()}, {"deviations", std::move(devs)}};
}

struct Options {
  std::string format = "text";
  std::size_t trials = 1000;
  std::uint64_t seed = default_seed();
  unsigned jobs = 1;
  bool wide = false;
  std::string op;
  std::string g_text;
  std::string input;
  std::size_t steps = 1;
  std::size_t n = 10;
};

check::SuiteOptions suite_options(Options const& o) {
  check::SuiteOptions s;
  s.trials = o.trials;
  s.seed = o.seed;
  s.jobs = o.jobs;
  s.wide_pool = o.wide;
  if (!o.g_text.empty())
    s.g = parse_stepfn(o.g_text);
  return s;
}

int emit(std::vector<check::Report> const& reports, Options const& o, bool as_array) {
  bool ok = true;
  for (auto const& r : reports)
    ok = ok && r.passed();
  if (o.format == "json") {
    if (as_array) {
      json all = json::array();
      for (auto const& r : reports)
        all.push_back(check::to_json(r));
      std::cout << all.dump(2) << "\n";
    } else {
      std::cout << check::to_json(reports.front()).dump(2) << "\n";
    }
  } else {
    for (auto const& r : reports)
      std::cout << check::to_text(r);
    if (as_array)
      std::cout << (ok ? "all suites passed\n" : "some suites FAILED\n");
  }
  return ok ? kOk : kViolation;
}

int demo_shift(Options const& o) {
  StepFn f = parse_stepfn(o.input);
  OperatorDescriptor op = o.op == "single-shift" ? single_shift_operator() : double_shift_operator();
  json orbit = json::array();
  StepFn x = f;
  for (std::size_t k = 0; k <= o.steps; ++k) {
    json step = {{"step", k}, {"f", stepfn_json(x)}, {"text", to_string(x)}};
    std::string witness_text;
    if (k < o.steps) {
      if (in_ball(x, op.domain)) {
        Ordinal w = discrepancy_witness(op, x);
        StepFn next = op(x);
        step["witness"] = to_string(w);
        witness_text = "witness " + to_string(w) + ": T(f)=" + next(w).str() + " f=" + x(w).str();
      } else {
        witness_text = "outside the unit ball, no witness search";
      }
    }
    if (o.format == "json") {
      orbit.push_back(std::move(step));
    } else {
      std::cout << (k == 0 ? "f" : "T^" + std::to_string(k) + " f") << " = " << to_string(x);
      if (!witness_text.empty())
        std::cout << "    [" << witness_text << "]";
      std::cout << "\n";
    }
    x = op(x);
  }
  if (o.format == "json")
    std::cout << json{{"operator", op.name}, {"orbit", std::move(orbit)}}.dump(2) << "\n";
  return kOk;
}

int demo_sign(Options const& o) {
  StepFn g = parse_stepfn(o.g_text);
  StepFn s = sign(g);
  StepFn back = s * abs(g);
  bool identity = back == g;
  bool gap_fixed = sup_norm(g) <= 1 && gap_map(g, s) == s;
  if (o.format == "json") {
    std::cout << json{{"g", stepfn_json(g)},
                      {"sign", stepfn_json(s)},
                      {"signTimesAbs", stepfn_json(back)},
                      {"identityHolds", identity},
                      {"gapFixedPoint", sup_norm(g) <= 1 ? json(gap_fixed) : json(nullptr)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "g              = " << g << "\n"
              << "sign(g)        = " << s << "\n"
              << "sign(g) * |g|  = " << back << "\n"
              << "g = sign(g)|g| : " << (identity ? "holds" : "FAILS") << "\n";
    if (sup_norm(g) <= 1)
      std::cout << "gap map fixes sign(g): " << (gap_fixed ? "yes" : "NO") << "\n";
    else
      std::cout << "gap map: ||g|| > 1, not applicable\n";
  }
  return identity && (sup_norm(g) > 1 || gap_fixed) ? kOk : kViolation;
}

int demo_obstruction(Options const& o) {
  auto samples = alternating_samples(o.n);
  ForcedSigns forced = forced_sign_values(samples);
  if (o.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < samples.size(); ++i)
      rows.push_back({{"label", samples[i].first},
                      {"g", samples[i].second.str()},
                      {"forcedSign", forced.values[i].second}});
    std::cout << json{{"samples", std::move(rows)}, {"obstruction", forced.obstruction}}.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < samples.size(); ++i)
      std::cout << samples[i].first << ": g = " << samples[i].second.str()
                << "  forced sign = " << forced.values[i].second << "\n";
    std::cout << (forced.obstruction ? "obstruction: forced values have no limit\n"
                                     : "no obstruction\n");
  }
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact property checks for nonexpansive maps on step-function and PL function spaces"};
  app.footer(std::string("Environment: ") + kSeedEnv +
             " sets the default --seed (otherwise 0).\n"
             "Exit status: 0 all properties held, 1 a property was violated, 2 usage or parse error.");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  auto add_run_flags = [&](CLI::App* cmd) {
    cmd->add_option("--trials", o.trials, "Number of random trials");
    cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--jobs", o.jobs, "Worker threads (results do not depend on it)")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--wide", o.wide, "Draw ordinals from beyond w^3 as well");
  };

  std::vector<std::string> ne_ops(std::begin(check::nonexpansive_ops), std::end(check::nonexpansive_ops));
  std::vector<std::string> nf_ops(std::begin(check::no_fixed_point_ops), std::end(check::no_fixed_point_ops));
  std::vector<std::string> fp_ops(std::begin(check::fixed_point_ops), std::end(check::fixed_point_ops));

  auto* check_cmd = app.add_subcommand("check", "Run one property suite");
  check_cmd->require_subcommand(1);
  auto* c_ne = check_cmd->add_subcommand("nonexpansive", "Nonexpansiveness and ball invariance");
  c_ne->add_option("--op", o.op)->required()->check(CLI::IsMember(ne_ops));
  c_ne->add_option("--g", o.g_text, "Fixed g for --op gap|ppoint (step function text)");
  add_run_flags(c_ne);
  auto* c_nf = check_cmd->add_subcommand("no-fixed-point", "Discrepancy witness on every trial");
  c_nf->add_option("--op", o.op)->required()->check(CLI::IsMember(nf_ops));
  add_run_flags(c_nf);
  auto* c_fp = check_cmd->add_subcommand("fixed-point", "Exact fixed points of the gap / P-point maps");
  c_fp->add_option("--op", o.op)->required()->check(CLI::IsMember(fp_ops));
  c_fp->add_option("--g", o.g_text, "Fixed g (step function text)");
  add_run_flags(c_fp);
  auto* c_helly = check_cmd->add_subcommand("helly", "Helly witness for pairwise intersecting balls");
  add_run_flags(c_helly);
  auto* c_ret = check_cmd->add_subcommand("retraction", "Sampling / interpolation retraction pair");
  add_run_flags(c_ret);
  auto* c_ord = check_cmd->add_subcommand("ordinal-laws", "Ordinal arithmetic laws and triple oracle");
  add_run_flags(c_ord);
  auto* c_lim = check_cmd->add_subcommand("limit-oracle", "Closed-form shifts against the limit formulas");
  add_run_flags(c_lim);

  auto* report_cmd = app.add_subcommand("report", "Run every suite");
  add_run_flags(report_cmd);

  auto* demo_cmd = app.add_subcommand("demo", "Worked examples");
  demo_cmd->require_subcommand(1);
  auto* d_shift = demo_cmd->add_subcommand("shift", "Orbit of the shift with discrepancy witnesses");
  d_shift->add_option("--input", o.input, "Step function text, e.g. \"tail=0; []\"")->required();
  d_shift->add_option("--steps", o.steps, "Number of applications");
  d_shift->add_option("--op", o.op, "double-shift (default) or single-shift")
      ->check(CLI::IsMember({"double-shift", "single-shift"}));
  auto* d_sign = demo_cmd->add_subcommand("sign", "Continuous sign of g and the gap map fixed point");
  d_sign->add_option("--g", o.g_text, "Step function text")->required();
  auto* d_obs = demo_cmd->add_subcommand("obstruction", "Forced signs for g(x_n) = (-1)^n/n");
  d_obs->add_option("--n", o.n, "Number of sample points")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (c_ne->parsed()) {
      auto s = suite_options(o);
      if (s.g && o.op == "gap")
        (void)gap_operator(*s.g);
      if (s.g && o.op == "ppoint")
        (void)ppoint_operator(*s.g);
      return emit({check::check_nonexpansive(o.op, s)}, o, false);
    }
    if (c_nf->parsed())
      return emit({check::check_no_fixed_point(o.op, suite_options(o))}, o, false);
    if (c_fp->parsed()) {
      auto s = suite_options(o);
      if (s.g && o.op == "gap")
        (void)gap_operator(*s.g);
      if (s.g && o.op == "ppoint" && s.g->tail() != 0)
        throw PreconditionError("--g for the P-point map needs tail 0");
      if (s.g && o.op == "ppoint")
        (void)ppoint_operator(*s.g);
      return emit({check::check_fixed_point(o.op, s)}, o, false);
    }
    if (c_helly->parsed())
      return emit({check::check_helly(suite_options(o))}, o, false);
    if (c_ret->parsed())
      return emit({check::check_retraction(suite_options(o))}, o, false);
    if (c_ord->parsed())
      return emit({check::check_ordinal_laws(suite_options(o))}, o, false);
    if (c_lim->parsed())
      return emit({check::check_limit_oracle(suite_options(o))}, o, false);
    if (report_cmd->parsed())
      return emit(check::run_full_suite(suite_options(o)), o, true);
    if (d_shift->parsed())
      return demo_shift(o);
    if (d_sign->parsed())
      return demo_sign(o);
    if (d_obs->parsed())
      return demo_obstruction(o);
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (PreconditionError const& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (std::invalid_argument const& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
