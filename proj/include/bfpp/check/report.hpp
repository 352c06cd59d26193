#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "bfpp/check/random.hpp"

namespace bfpp::check {

/// One counterexample, every field in the library's text grammars.
struct Failure {
  std::vector<std::string> inputs;
  std::string witness;
  std::string expected;
  std::string actual;

  friend bool operator==(Failure const&, Failure const&) = default;
};

struct Report {
  std::string suite;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<Failure> failures;
  std::int64_t elapsed_millis = 0;

  bool passed() const noexcept { return failures.empty(); }
};

inline nlohmann::ordered_json to_json(Failure const& f) {
  return {{"inputs", f.inputs}, {"witness", f.witness}, {"expected", f.expected}, {"actual", f.actual}};
}

inline nlohmann::ordered_json to_json(Report const& r) {
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (auto const& f : r.failures)
    failures.push_back(to_json(f));
  return {{"suite", r.suite},
          {"trials", r.trials},
          {"seed", r.seed},
          {"failures", std::move(failures)},
          {"elapsedMillis", r.elapsed_millis}};
}

inline std::string to_text(Report const& r) {
  std::ostringstream os;
  os << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.trials << " trials, seed "
     << r.seed << ", " << r.failures.size() << " failures, " << r.elapsed_millis << " ms)\n";
  for (auto const& f : r.failures) {
    os << "  counterexample:";
    for (auto const& in : f.inputs)
      os << " [" << in << "]";
    os << "\n    witness:  " << f.witness << "\n    expected: " << f.expected
       << "\n    actual:   " << f.actual << "\n";
  }
  return os.str();
}

/// Per-trial body: gets its own generator (derived from the master seed and
/// the trial index) and appends any counterexamples it finds.
template <class Body>
Report run_trials(std::string suite, std::size_t trials, std::uint64_t seed, unsigned jobs, Body body) {
  auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<Failure>> per_trial(trials);

  auto run_one = [&](std::size_t t) {
    Rng rng = Rng::for_trial(seed, t);
    try {
      body(rng, per_trial[t]);
    } catch (std::exception const& e) {
      per_trial[t].push_back({{"trial " + std::to_string(t)}, "", "no exception", e.what()});
    }
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(trials, 1))));
  if (jobs == 1) {
    for (std::size_t t = 0; t < trials; ++t)
      run_one(t);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] {
        for (std::size_t t = w; t < trials; t += jobs)
          run_one(t);
      });
  }

  Report r{std::move(suite), trials, seed, {}, 0};
  for (auto& fs : per_trial)
    for (auto& f : fs)
      r.failures.push_back(std::move(f));
  r.elapsed_millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return r;
}

} // namespace bfpp::check
