#include "carries/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

using namespace carries;

namespace {

constexpr long kMonteCarloSamples = 1'000'000;

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> first_failures;

  void add(const SuiteReport& report, const std::function<bool(const CaseResult&)>& keep = {}) {
    for (const CaseResult& c : report.cases) {
      if (keep && !keep(c)) continue;
      ++cases;
      if (!c.passed) {
        ++failures;
        if (first_failures.size() < 3) first_failures.push_back(c.key + ": " + c.detail + " [" + c.reproduce + "]");
      }
    }
  }
  bool passed() const { return cases > 0 && failures == 0; }
};

SuiteReport suite(const std::string& name) {
  SuiteOptions options;
  options.samples = kMonteCarloSamples;
  return run_suite(name, options);
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

struct Criterion {
  int id;
  std::string title;
  std::string tolerance;
  std::function<Tally()> run;
};

}  // namespace

int main() {
  const SuiteReport golden = suite("examples-golden");

  const std::vector<Criterion> criteria = {
      {1, "scaled right eigenvector matrices at n = 3", "exact",
       [&] {
         Tally t;
         t.add(golden, [](const CaseResult& c) { return starts_with(c.key, "scaled R"); });
         return t;
       }},
      {2, "R L = I, P = R D L, eigenvalues (+-1/b)^k", "exact",
       [] {
         Tally t;
         t.add(suite("eigen"));
         return t;
       }},
      {3, "transition formula equals exhaustive enumeration", "exact",
       [] {
         Tally t;
         t.add(suite("transition"));
         return t;
       }},
      {4, "carry sets and p equal brute-force enumeration", "exact",
       [] {
         Tally t;
         t.add(suite("carry-sets"));
         return t;
       }},
      {5, "Stirling-Frobenius numbers", "exact",
       [] {
         Tally t;
         t.add(suite("sf-numbers"));
         return t;
       }},
      {6, "descent statistics equal enumeration over G_{p,n}", "exact",
       [] {
         Tally t;
         t.add(suite("descent-stats"));
         return t;
       }},
      {7, "moment closed forms equal matrix powers", "exact",
       [] {
         Tally t;
         t.add(suite("moments"));
         return t;
       }},
      {8, "worked shuffle pipelines and tables", "exact",
       [&] {
         Tally t;
         t.add(golden, [](const CaseResult& c) { return !starts_with(c.key, "scaled R"); });
         return t;
       }},
      {9, "carries and shuffle statistics share a law", "exact; Monte Carlo TV < 0.02 at 10^6 samples",
       [] {
         Tally t;
         t.add(suite("bijection-plus"));
         t.add(suite("bijection-minus"));
         return t;
       }},
      {10, "shuffle probabilities and the generating identity", "exact; cutoff (3,3)",
       [] {
         Tally t;
         t.add(suite("shuffle-prob"));
         t.add(suite("gessel"));
         return t;
       }},
      {11, "reflection symmetries of the transition matrices", "exact",
       [] {
         Tally t;
         const SuiteReport report = suite("symmetry");
         t.add(report);
         std::set<std::string> clauses;
         for (const CaseResult& c : report.cases) clauses.insert(c.key.substr(0, 3));
         if (clauses.size() != 4) {
           ++t.failures;
           t.first_failures.push_back("only " + std::to_string(clauses.size()) + " of 4 clauses exercised");
         }
         return t;
       }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      t.failures = 1;
      t.first_failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %s  %s  (%zu/%zu cases, tolerance: %s, %.2f s)\n", c.id, t.passed() ? "PASS" : "FAIL",
                c.title.c_str(), t.cases - t.failures, t.cases, c.tolerance.c_str(), seconds);
    for (const std::string& f : t.first_failures) std::printf("    %s\n", f.c_str());
    if (!t.passed()) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
