#pragma once

#include "carries/params.hpp"
#include "carries/serialize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace carries {

struct CaseResult {
  std::string key;        // parameter key; cases are sorted by it
  bool passed = false;
  std::string detail;     // summary or first mismatch
  std::string reproduce;  // command line reproducing this case
};

struct SuiteReport {
  std::string suite;
  std::string grid;
  std::vector<CaseResult> cases;

  bool passed() const;
  std::size_t failures() const;
};

/// Grid overrides; an unset field means the suite's default grid.
struct SuiteOptions {
  std::optional<Sign> sign;
  std::optional<int> b;
  std::optional<int> n;
  std::optional<Rational> p;
  std::optional<int> d;
  std::optional<int> steps;   // N
  std::optional<int> cutoff;
  long samples = 1'000'000;
  std::uint64_t seed = Rng::kDefaultSeed;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

Json suite_json(const SuiteReport& report);

}  // namespace carries
