#include "carries/params.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace carries {

namespace {

Rational level(Sign sign, int b, int d) {
  return sign == Sign::plus ? make_rational(d, b - 1) : make_rational(-(b + d), b + 1);
}

std::string describe(Sign sign, int b, int n, const Rational& p) {
  return std::string("(") + sign_char(sign) + std::to_string(b) + ", n=" + std::to_string(n) +
         ", p=" + to_string(p) + ")";
}

}  // namespace

char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

Sign parse_sign(std::string_view text) {
  if (text == "+" || text == "plus") return Sign::plus;
  if (text == "-" || text == "minus") return Sign::minus;
  throw std::invalid_argument("sign must be '+' or '-', got '" + std::string(text) + "'");
}

DigitWord::DigitWord(Digit base_, std::vector<Digit> digits_) : base(base_), digits(std::move(digits_)) {
  if (base < 1) {
    throw std::invalid_argument("digit word base must be positive");
  }
  for (Digit x : digits) {
    if (x < 0 || x >= base) {
      throw std::invalid_argument("digit " + std::to_string(x) + " outside D(" + std::to_string(base) + ")");
    }
  }
}

void check_digit_set(int b, int d, int n) {
  if (b < 2) throw std::domain_error("base must be at least 2");
  if (n < 1) throw std::domain_error("need at least one summand");
  if (d < 1 - b || d > 0) {
    throw std::domain_error("digit offset d=" + std::to_string(d) + " outside [1-b, 0]");
  }
}

CarrySet derive_carry_set(Sign sign, int b, int d, int n) {
  check_digit_set(b, d, n);
  const Rational l = level(sign, b, d);
  const Rational m(n - 1);
  CarrySet set;
  set.min_carry = floor(m * l).get_si();
  set.max_carry = ceil(m * (l + 1)).get_si();
  return set;
}

Rational derive_p(Sign sign, int b, int d, int n) {
  check_digit_set(b, d, n);
  const Rational frac = fractional_part(Rational(n - 1) * level(sign, b, d));
  return Rational(1) / (Rational(1) - frac);
}

ProcessParams::ProcessParams(Sign sign, int b, int n, Rational p)
    : sign_(sign), b_(b), n_(n), p_(std::move(p)) {
  p_.canonicalize();
  if (b_ < 2) throw std::invalid_argument("base must be at least 2");
  if (n_ < 1) throw std::invalid_argument("need at least one summand");
  if (p_ < 1) throw std::invalid_argument("p must be at least 1, got " + to_string(p_));
  if (sign_ == Sign::plus) {
    // A_+(b) = (b-1)(1 - 1/p); integral iff (b-1)/p is.
    const Rational q = Rational(b_ - 1) / p_;
    if (!is_integer(q)) {
      throw std::invalid_argument("process " + describe(sign_, b_, n_, p_) + " undefined: (b-1)/p = " +
                                  to_string(q) + " is not an integer");
    }
    shift_ = (b_ - 1) - to_long(q);
  } else {
    const Rational q = Rational(b_ + 1) / p_;
    if (!is_integer(q)) {
      throw std::invalid_argument("process " + describe(sign_, b_, n_, p_) + " undefined: (b+1)/p = " +
                                  to_string(q) + " is not an integer");
    }
    shift_ = to_long(q) - 1;
  }
}

ProcessParams ProcessParams::from_digit_set(Sign sign, int b, int d, int n) {
  ProcessParams params(sign, b, n, derive_p(sign, b, d, n));
  params.d_ = d;
  return params;
}

ProcessParams make_process(Sign sign, int b, int n, const Rational& p) { return ProcessParams(sign, b, n, p); }

std::vector<Rational> valid_p_values(Sign sign, int b) {
  // p = (b -/+ 1)/m for positive integers m with p >= 1, listed by decreasing m.
  const int top = sign == Sign::plus ? b - 1 : b + 1;
  std::vector<Rational> out;
  for (int m = top; m >= 1; --m) {
    out.push_back(make_rational(top, m));
  }
  return out;
}

StepResult step_carry(const ProcessParams& params, long kappa, const DigitWord& digits) {
  const int b = params.base();
  const int n = params.summands();
  if (kappa < 0 || kappa >= params.state_count()) {
    throw std::invalid_argument("state " + std::to_string(kappa) + " outside C_p(n)");
  }
  if (digits.base != b || static_cast<int>(digits.size()) != n) {
    throw std::invalid_argument("digit column must hold n digits of D(b)");
  }
  long total = kappa + params.shift();
  for (Digit y : digits.digits) total += y;
  const long quotient = total / b;
  const Digit remainder = total % b;
  const long next = params.sign() == Sign::plus ? quotient : n - quotient;
  return {next, remainder};
}

CarriesTrace run_trace(const ProcessParams& params, std::vector<DigitWord> columns) {
  CarriesTrace trace{params, {0}, {}, std::move(columns)};
  trace.kappas.reserve(trace.columns.size() + 1);
  trace.remainders.reserve(trace.columns.size());
  for (const DigitWord& column : trace.columns) {
    const StepResult step = step_carry(params, trace.kappas.back(), column);
    trace.kappas.push_back(step.kappa);
    trace.remainders.push_back(step.remainder);
  }
  return trace;
}

CarriesTrace simulate_trace(const ProcessParams& params, int steps, Rng& rng) {
  if (steps < 0) throw std::invalid_argument("number of steps must be nonnegative");
  const auto b = static_cast<std::uint64_t>(params.base());
  std::vector<DigitWord> columns;
  columns.reserve(static_cast<std::size_t>(steps));
  for (int r = 0; r < steps; ++r) {
    std::vector<Digit> digits(static_cast<std::size_t>(params.summands()));
    for (Digit& y : digits) y = static_cast<Digit>(rng.uniform(b));
    columns.emplace_back(params.base(), std::move(digits));
  }
  return run_trace(params, std::move(columns));
}

CarriesTrace simulate_trace(const ProcessParams& params, int steps, std::uint64_t seed) {
  Rng rng(seed);
  return simulate_trace(params, steps, rng);
}

std::vector<long> digit_expansion(const Integer& x, Sign sign, int b, int d) {
  check_digit_set(b, d, 1);
  if (x < 0) throw std::domain_error("digit_expansion expects a nonnegative integer");
  if (x == 0) return {0};
  const Integer base = sign == Sign::plus ? Integer(b) : Integer(-b);
  std::vector<long> digits;
  std::set<Integer> seen;
  Integer rest = x;
  while (rest != 0) {
    // Once |rest| < b the orbit is confined to a finite set; a repeat means no
    // finite representation exists.
    if (abs(rest) < b && !seen.insert(rest).second) {
      throw std::domain_error("x = " + x.get_str() + " has no representation in base " +
                              std::string(1, sign_char(sign)) + std::to_string(b) + " with digits D_" +
                              std::to_string(d));
    }
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), Integer(rest - d).get_mpz_t(), static_cast<unsigned long>(b));
    const long digit = r.get_si() + d;
    digits.push_back(digit);
    rest = (rest - digit) / base;  // exact division
  }
  return digits;
}

Integer evaluate_expansion(const std::vector<long>& digits, Sign sign, int b) {
  const Integer base = sign == Sign::plus ? Integer(b) : Integer(-b);
  Integer value = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    value = value * base + *it;
  }
  return value;
}

}  // namespace carries
