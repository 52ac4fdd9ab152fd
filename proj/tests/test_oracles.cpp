#include "carries/oracles.hpp"
#include "carries/verify.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace carries;

TEST_CASE("reachable carries by enumeration") {
  const oracle::ReachableCarries r = oracle::reachable_carries(Sign::plus, 10, 0, 3);
  CHECK(r.min_carry == 0);
  CHECK(r.max_carry == 2);
  CHECK(r.count == 3);
  const oracle::ReachableCarries m = oracle::reachable_carries(Sign::minus, 3, 0, 2);
  CHECK(m.min_carry == -1);
  CHECK(m.max_carry == 1);
}

TEST_CASE("counting oracles") {
  CHECK(oracle::cycle_counts(4) == std::vector<long>{0, 6, 11, 6, 1});
  CHECK(oracle::descent_table(3, 2, DescentVariant::standard) == std::vector<long>{1, 23, 23, 1});
  long tuples = 0;
  oracle::for_each_tuple(3, 4, [&](const std::vector<Digit>&) { ++tuples; });
  CHECK(tuples == 81);
}

TEST_CASE("sequence laws") {
  const ProcessParams params = make_process(Sign::plus, 3, 2, 2);
  const RationalMatrix P = transition_matrix(params);
  const oracle::SequenceLaw law = oracle::chain_law(P, 2);
  Rational total = 0;
  for (const auto& [seq, prob] : law) total += prob;
  CHECK(total == 1);
  const oracle::SequenceCounts counts = oracle::carries_sequence_counts(params, 2);
  CHECK(oracle::same_law(counts, law));
  CHECK(oracle::total_variation(counts, law) == doctest::Approx(0.0));
  CHECK(counts == oracle::shuffle_sequence_counts(3, 2, 2, 2, ShuffleConstruction::plus));
}

TEST_CASE("bijections are exhaustive") {
  CHECK(oracle::bijection_exhaustive(3, 2, 1, 2, Sign::plus).holds());
  CHECK(oracle::bijection_exhaustive(2, 2, 1, 2, Sign::minus).holds());
  CHECK(oracle::gsr_preimage_count(ColoredPermutation::identity(2, 1), 3) == 6);
}

TEST_CASE("verification suites") {
  CHECK(suite_names().size() == 14);
  CHECK_THROWS_AS(run_suite("nosuch", {}), std::invalid_argument);
  SuiteOptions options;
  options.b = 3;
  options.n = 2;
  options.p = 1;
  options.steps = 2;
  const SuiteReport report = run_suite("bijection-plus", options);
  CHECK(report.passed());
  CHECK(report.cases.front().detail == "81/81 exhaustive matches");
  for (const CaseResult& c : report.cases) CHECK(c.reproduce.find("verify bijection-plus --b 3") != std::string::npos);
  const SuiteReport golden = run_suite("examples-golden", {});
  CHECK(golden.passed());
  CHECK(std::is_sorted(golden.cases.begin(), golden.cases.end(),
                       [](const CaseResult& a, const CaseResult& b) { return a.key < b.key; }));
}
