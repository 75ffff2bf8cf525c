// One line per acceptance criterion: PASS/FAIL, cases, wall time.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "largeness/suites.hpp"

using namespace largeness;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::uint64_t min_cases;
  std::function<SuiteReport()> run;
};

bool run_criterion(const Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  std::uint64_t cases = 0;
  try {
    const SuiteReport r = c.run();
    cases = r.cases();
    ok = r.passed() && cases >= c.min_cases;
    if (!r.passed()) detail = std::to_string(r.failures()) + " failures, first: " + r.counterexample().value_or("?");
    else if (cases < c.min_cases) detail = "only " + std::to_string(cases) + " cases";
    for (const auto& n : r.notes()) detail += (detail.empty() ? "" : "; ") + n;
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= c.limit_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over the time limit");
  }
  std::ostringstream line;
  line << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title << "  cases=" << cases
       << "  time=" << std::fixed << std::setprecision(2) << secs << "s/" << std::setprecision(0) << c.limit_seconds
       << "s";
  if (!detail.empty()) line << "  (" << detail << ")";
  std::cout << line.str() << std::endl;
  return ok;
}

}  // namespace

int main() {
  const SuiteOptions opt;
  const std::vector<Criterion> criteria{
      {1, "worked example", 1, 5, [&] { return suites::worked_example(opt); }},
      {2, "Hardy bridge", 60, 1, [&] { return suites::hardy_bridge(opt); }},
      {3, "union bound", 300, 10'000, [&] { return suites::union_bound(opt); }},
      {4, "optimal growth", 300, 1, [&] { return suites::optimal_growth(opt); }},
      {5, "arrow and fundamental-sequence lemmas", 120, 1, [&] { return suites::arrows(opt); }},
      {6, "blocks below w^w", 120, 1, [&] { return suites::blocks(opt); }},
      {7, "splitting and pigeonhole",
       120, 1,
       [&] {
         SuiteReport both("splitting+pigeonhole", opt);
         for (const auto& r : {suites::splitting(opt), suites::pigeonhole(opt)}) {
           both.count(r.cases());
           both.check(r.passed(), [&] { return r.name() + ": " + r.counterexample().value_or("?"); });
         }
         return both;
       }},
      {8, "Ramsey micro-quantitative", 30, (1u << 10) + (1u << 15), [&] { return suites::rt_micro(opt); }},
      {9, "grouping at n = 0", 600, opt.samples, [&] { return suites::grouping_micro(opt); }},
      {10, "fallow implies transitive", 60, 1, [&] { return suites::fallow_transitive(opt); }},
      {11, "pipeline drivers", 600, 1, [&] { return suites::pipelines(opt); }},
  };
  int failed = 0;
  for (const auto& c : criteria) failed += !run_criterion(c);
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failed ? 1 : 0;
}
