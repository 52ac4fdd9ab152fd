#include "carries/params.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace carries;

TEST_CASE("rationals are canonical and round-trip through text") {
  CHECK(make_rational(6, -4) == Rational(-3, 2));
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(to_string(make_rational(-3, 6)) == "-1/2");
  CHECK(parse_rational("3/2") == make_rational(3, 2));
  CHECK(parse_rational("4") == 4);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(floor(make_rational(-1, 2)) == -1);
  CHECK(ceil(make_rational(-1, 2)) == 0);
  CHECK(fractional_part(make_rational(-1, 3)) == make_rational(2, 3));
  CHECK_THROWS_AS(binomial(-1, 2), std::domain_error);
  CHECK(binomial(5, 2) == 10);
}

TEST_CASE("process validation") {
  CHECK_NOTHROW(make_process(Sign::plus, 7, 4, 3));
  CHECK_NOTHROW(make_process(Sign::minus, 8, 3, 3));
  CHECK_NOTHROW(make_process(Sign::minus, 2, 2, make_rational(3, 2)));
  CHECK_THROWS_AS(make_process(Sign::plus, 4, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_process(Sign::plus, 1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_process(Sign::plus, 3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_process(Sign::plus, 3, 2, make_rational(1, 2)), std::invalid_argument);
  CHECK(make_process(Sign::plus, 7, 4, 1).state_count() == 4);
  CHECK(make_process(Sign::plus, 7, 4, 3).state_count() == 5);
  CHECK(make_process(Sign::plus, 7, 4, 3).shift() == 4);
  CHECK(make_process(Sign::minus, 8, 4, 3).shift() == 2);
  CHECK(parse_sign("-") == Sign::minus);
  CHECK_THROWS_AS(parse_sign("*"), std::invalid_argument);
}

TEST_CASE("valid p values") {
  CHECK(valid_p_values(Sign::plus, 7) == std::vector<Rational>{1, make_rational(6, 5), make_rational(3, 2), 2, 3, 6});
  CHECK(valid_p_values(Sign::minus, 2) == std::vector<Rational>{1, make_rational(3, 2), 3});
}

TEST_CASE("carry sets and derived p") {
  // Ordinary digits {0..b-1}: carries 0..n-1 and p = 1.
  const CarrySet classical = derive_carry_set(Sign::plus, 10, 0, 3);
  CHECK(classical.min_carry == 0);
  CHECK(classical.max_carry == 2);
  CHECK(derive_p(Sign::plus, 10, 0, 3) == 1);
  CHECK(derive_p(Sign::plus, 3, -1, 2) == 2);
  CHECK_THROWS_AS(derive_carry_set(Sign::plus, 3, 1, 2), std::domain_error);
  CHECK_THROWS_AS(derive_carry_set(Sign::plus, 3, -3, 2), std::domain_error);
  for (int b = 2; b <= 6; ++b) {
    for (int d = 1 - b; d <= 0; ++d) {
      for (int n = 1; n <= 4; ++n) {
        for (Sign sign : {Sign::plus, Sign::minus}) {
          const ProcessParams params = ProcessParams::from_digit_set(sign, b, d, n);
          CHECK(derive_carry_set(sign, b, d, n).size() == params.state_count());
          CHECK(params.digit_offset() == d);
        }
      }
    }
  }
}

TEST_CASE("step_carry stays in the state space") {
  for (Sign sign : {Sign::plus, Sign::minus}) {
    for (int b = 2; b <= 5; ++b) {
      for (const Rational& p : valid_p_values(sign, b)) {
        for (int n = 1; n <= 3; ++n) {
          const ProcessParams params = make_process(sign, b, n, p);
          std::vector<Digit> digits(static_cast<std::size_t>(n), 0);
          while (true) {
            for (long k = 0; k < params.state_count(); ++k) {
              const StepResult step = step_carry(params, k, DigitWord(b, digits));
              CHECK(step.kappa >= 0);
              CHECK(step.kappa < params.state_count());
              CHECK(step.remainder >= 0);
              CHECK(step.remainder < b);
            }
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == b) digits[pos++] = 0;
            if (pos == digits.size()) break;
          }
        }
      }
    }
  }
  const ProcessParams params = make_process(Sign::plus, 3, 2, 1);
  CHECK_THROWS_AS(step_carry(params, 2, DigitWord(3, {0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(step_carry(params, 0, DigitWord(3, {0})), std::invalid_argument);
  CHECK_THROWS_AS(DigitWord(3, {3, 0}), std::invalid_argument);
}

TEST_CASE("traces over the worked summands") {
  const ProcessParams plus = make_process(Sign::plus, 7, 4, 3);
  const CarriesTrace a = run_trace(plus, {DigitWord(7, {4, 5, 6, 2}), DigitWord(7, {5, 2, 4, 3}), DigitWord(7, {3, 0, 4, 0})});
  CHECK(a.kappas == std::vector<long>{0, 3, 3, 2});

  const ProcessParams minus = make_process(Sign::minus, 8, 4, 3);
  const CarriesTrace b = run_trace(minus, {DigitWord(8, {4, 3, 1, 2}), DigitWord(8, {7, 5, 4, 6}),
                                           DigitWord(8, {4, 2, 5, 3}), DigitWord(8, {0, 1, 2, 0})});
  CHECK(b.kappas == std::vector<long>{0, 3, 1, 2, 4});
}

TEST_CASE("simulation is deterministic for a seed") {
  const ProcessParams params = make_process(Sign::minus, 5, 3, 2);
  const CarriesTrace a = simulate_trace(params, 20, 42);
  const CarriesTrace b = simulate_trace(params, 20, 42);
  CHECK(a.kappas == b.kappas);
  CHECK(a.columns == b.columns);
  CHECK(a.kappas.size() == 21);
  CHECK(a.kappas.front() == 0);
  // Replaying the drawn columns reproduces the chain.
  CHECK(run_trace(params, a.columns).kappas == a.kappas);
}

TEST_CASE("digit expansion round-trips") {
  for (Sign sign : {Sign::plus, Sign::minus}) {
    for (int b = 2; b <= 6; ++b) {
      for (int d = 1 - b; d <= 0; ++d) {
        if (sign == Sign::plus && d == 1 - b) continue;
        for (long x = 0; x <= 10'000; ++x) {
          const std::vector<long> digits = digit_expansion(Integer(x), sign, b, d);
          for (long a : digits) {
            CHECK_FALSE((a < d || a > d + b - 1));
          }
          if (digits.size() > 1) CHECK(digits.back() != 0);
          CHECK(evaluate_expansion(digits, sign, b) == x);
        }
      }
    }
  }
  CHECK(digit_expansion(Integer(10), Sign::minus, 10, 0) == std::vector<long>{0, 9, 1});
  CHECK_THROWS_AS(digit_expansion(Integer(5), Sign::plus, 10, -9), std::domain_error);
  CHECK_THROWS_AS(digit_expansion(Integer(-1), Sign::plus, 10, 0), std::domain_error);
}
