#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace carries {

/// An identity that must hold by construction failed: an implementation bug,
/// never bad user input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Outcome of an entrywise identity check.
struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string label) : name(std::move(label)) {}

  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> mismatches;  // at most kMaxMismatches kept

  static constexpr std::size_t kMaxMismatches = 8;

  bool holds() const { return mismatches.empty() && failures_ == 0; }
  std::size_t failures() const { return failures_; }

  void record(bool ok, const std::string& detail) {
    ++checked;
    if (ok) return;
    ++failures_;
    if (mismatches.size() < kMaxMismatches) mismatches.push_back(detail);
  }

 private:
  std::size_t failures_ = 0;
};

}  // namespace carries
