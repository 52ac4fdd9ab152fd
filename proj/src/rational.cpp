#include "carries/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace carries {

Rational make_rational(long num, long den) {
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational fractional_part(const Rational& x) { return x - Rational(floor(x)); }

bool is_integer(const Rational& x) { return x.get_den() == 1; }

long to_long(const Rational& x) {
  if (!is_integer(x) || !x.get_num().fits_slong_p()) {
    throw std::domain_error("expected a machine-size integer, got " + to_string(x));
  }
  return x.get_num().get_si();
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), base.get_den_mpz_t(), exponent);
  return r;
}

Integer binomial(const Integer& a, unsigned long k) {
  if (a < 0) {
    throw std::domain_error("binomial coefficient with negative upper index");
  }
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), k);
  return r;
}

Integer binomial(long a, unsigned long k) { return binomial(Integer(a), k); }

Integer factorial(unsigned long k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) {
      s.remove_prefix(1);
    }
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
  std::string num_str(num);
  if (num_str.front() == '+') num_str.erase(0, 1);
  Rational r{Integer(num_str), Integer(std::string(den))};
  if (r.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  r.canonicalize();
  return r;
}

std::string to_decimal(const Rational& x, int digits) {
  if (digits < 0) digits = 0;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // Round half away from zero on the scaled value.
  Rational scaled = abs(x) * Rational(scale);
  Integer rounded = floor(scaled + Rational(1, 2));
  Integer whole = rounded / scale;
  Integer frac = rounded % scale;
  std::string out = (x < 0 && rounded != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += '.';
    out += std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

}  // namespace carries
