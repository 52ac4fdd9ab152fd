#pragma once

#include "carries/random.hpp"
#include "carries/rational.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace carries {

using Digit = std::int64_t;

enum class Sign { plus, minus };

char sign_char(Sign s);
Sign parse_sign(std::string_view text);

/// A word over D(base) = {0, ..., base-1}: one column of summand digits or
/// one GSR label word.
struct DigitWord {
  Digit base = 2;
  std::vector<Digit> digits;

  DigitWord() = default;
  DigitWord(Digit base_, std::vector<Digit> digits_);

  std::size_t size() const { return digits.size(); }
  Digit operator[](std::size_t i) const { return digits[i]; }
  friend bool operator==(const DigitWord&, const DigitWord&) = default;
};

/// Carry set C(±b, n) in original (unnormalized) coordinates.
struct CarrySet {
  long min_carry = 0;
  long max_carry = 0;

  long size() const { return max_carry - min_carry + 1; }
  bool contains(long carry) const { return carry >= min_carry && carry <= max_carry; }
  long to_original(long kappa) const { return kappa + min_carry; }
  long to_normalized(long carry) const { return carry - min_carry; }
};

/// Throws std::domain_error unless b >= 2, 1-b <= d <= 0, n >= 1.
void check_digit_set(int b, int d, int n);

CarrySet derive_carry_set(Sign sign, int b, int d, int n);
Rational derive_p(Sign sign, int b, int d, int n);

/// One (±b, n, p)-carries process: the normalized chain on C_p(n).
class ProcessParams {
 public:
  /// Validates b >= 2, n >= 1, p >= 1 and integrality of (b -/+ 1)/p.
  /// Throws std::invalid_argument with the reason otherwise.
  ProcessParams(Sign sign, int b, int n, Rational p);

  /// The process induced by adding n numbers written with digits D_d.
  static ProcessParams from_digit_set(Sign sign, int b, int d, int n);

  Sign sign() const { return sign_; }
  int base() const { return b_; }
  int summands() const { return n_; }
  const Rational& p() const { return p_; }
  std::optional<int> digit_offset() const { return d_; }

  bool p_is_one() const { return p_ == 1; }

  /// A_+(b) = (b-1)/p* or A_-(b) = (b+1)/p - 1.
  long shift() const { return shift_; }
  /// A_±(b)' = b - 1 - A_±(b).
  long shift_complement() const { return b_ - 1 - shift_; }

  /// |C_p(n)|: n when p = 1, else n + 1.
  int state_count() const { return p_is_one() ? n_ : n_ + 1; }

  /// The signed base ±b.
  Rational signed_base() const { return sign_ == Sign::plus ? Rational(b_) : Rational(-b_); }

  friend bool operator==(const ProcessParams& a, const ProcessParams& b) {
    return a.sign_ == b.sign_ && a.b_ == b.b_ && a.n_ == b.n_ && a.p_ == b.p_ && a.d_ == b.d_;
  }

 private:
  Sign sign_;
  int b_;
  int n_;
  Rational p_;
  std::optional<int> d_;
  long shift_ = 0;
};

ProcessParams make_process(Sign sign, int b, int n, const Rational& p);

/// Every p >= 1 for which (±b, n, p) is a valid process, ascending.
std::vector<Rational> valid_p_values(Sign sign, int b);

struct StepResult {
  long kappa;
  Digit remainder;
};

/// One step of the normalized carry recursion. Throws std::invalid_argument on out-of-range input.
StepResult step_carry(const ProcessParams& params, long kappa, const DigitWord& digits);

struct CarriesTrace {
  ProcessParams params;
  std::vector<long> kappas;        // kappa_0 .. kappa_N
  std::vector<Digit> remainders;   // s_1 .. s_N
  std::vector<DigitWord> columns;  // summand digits at places 1 .. N
};

/// Runs the chain from kappa_0 = 0 over the given digit columns (place 1 first).
CarriesTrace run_trace(const ProcessParams& params, std::vector<DigitWord> columns);

/// Draws N columns of n uniform digits (column-major: place 1 summand 1 first).
CarriesTrace simulate_trace(const ProcessParams& params, int steps, Rng& rng);
CarriesTrace simulate_trace(const ProcessParams& params, int steps, std::uint64_t seed);

/// Digits a_0, a_1, ... in D_d with x = sum a_k (±b)^k, lowest place first.
/// Throws std::domain_error if x has no representation (e.g. +b with d = 1-b).
std::vector<long> digit_expansion(const Integer& x, Sign sign, int b, int d);

Integer evaluate_expansion(const std::vector<long>& digits, Sign sign, int b);

}  // namespace carries
