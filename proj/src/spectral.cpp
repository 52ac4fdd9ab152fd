#include "carries/spectral.hpp"

#include <stdexcept>
#include <string>

namespace carries {

namespace {

std::string cell(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

int full_dim(int n, const Rational& p) { return p == 1 ? n : n + 1; }

// B_p^±(i, j): the value X_1 + ... + X_n + Y must take to move from i to j.
long transition_target(const ProcessParams& params, long i, long j) {
  const Rational inv_p = Rational(1) / params.p();
  const Rational b(params.base());
  Rational target;
  if (params.sign() == Sign::plus) {
    target = (Rational(j) + inv_p) * b - (Rational(i) + inv_p);
  } else {
    target = (Rational(-j + 1) - inv_p) * b - (Rational(i) + inv_p) + Rational(params.summands()) * b;
  }
  if (!is_integer(target)) {
    throw ConsistencyError("B_p(" + std::to_string(i) + "," + std::to_string(j) + ") = " + to_string(target) +
                           " is not an integer");
  }
  return to_long(target);
}

std::vector<std::vector<Integer>> stirling_table(unsigned kmax) {
  std::vector<std::vector<Integer>> s(kmax + 1, std::vector<Integer>(kmax + 1, 0));
  s[0][0] = 1;
  for (unsigned k = 1; k <= kmax; ++k) {
    for (unsigned l = 1; l <= k; ++l) {
      s[k][l] = s[k - 1][l - 1] - Integer(k - 1) * s[k - 1][l];
    }
  }
  return s;
}

void require_natural(const Rational& p) {
  if (!is_integer(p) || p < 1) {
    throw std::invalid_argument("descent statistics need a positive integer p, got " + to_string(p));
  }
}

}  // namespace

RationalMatrix transition_matrix(const ProcessParams& params) {
  const int dim = params.state_count();
  const int n = params.summands();
  const long b = params.base();
  const Rational scale = Rational(1) / pow(Rational(b), static_cast<unsigned long>(n));
  RationalMatrix P(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const long target = transition_target(params, i, j);
      Integer count = 0;
      for (long r = 0; r <= n + 1 && target - b * r >= 0; ++r) {
        const Integer term = binomial(n + 1, static_cast<unsigned long>(r)) *
                             binomial(n + target - b * r, static_cast<unsigned long>(n));
        count += (r % 2 == 0) ? term : Integer(-term);
      }
      P(i, j) = Rational(count) * scale;
    }
  }
  return P;
}

RationalMatrix transition_oracle(const ProcessParams& params) {
  const int n = params.summands();
  const int b = params.base();
  long tuples = 1;
  for (int k = 0; k < n; ++k) {
    tuples *= b;
    if (tuples > kOracleTupleLimit) {
      throw std::length_error("transition oracle would enumerate more than 10^7 digit tuples");
    }
  }
  const int dim = params.state_count();
  std::vector<std::vector<long>> counts(dim, std::vector<long>(dim, 0));
  DigitWord word(b, std::vector<Digit>(static_cast<std::size_t>(n), 0));
  for (long t = 0; t < tuples; ++t) {
    for (int i = 0; i < dim; ++i) {
      ++counts[i][step_carry(params, i, word).kappa];
    }
    for (auto& y : word.digits) {  // odometer increment
      if (++y < b) break;
      y = 0;
    }
  }
  RationalMatrix P(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) P(i, j) = Rational(counts[i][j], tuples);
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) P(i, j).canonicalize();
  }
  return P;
}

Integer stirling_first(unsigned k, unsigned l) {
  if (l > k) return 0;
  return stirling_table(k)[k][l];
}

RationalMatrix left_eigen_matrix(int n, const Rational& p, int dim) {
  if (dim < 1 || dim > n + 1) throw std::invalid_argument("eigenvector matrix dimension out of range");
  RationalMatrix L(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Rational v = 0;
      for (int r = 0; r <= j; ++r) {
        const Rational term = Rational(binomial(n + 1, static_cast<unsigned long>(r))) *
                              pow(p * (j - r) + 1, static_cast<unsigned long>(n - i));
        v += (r % 2 == 0) ? term : Rational(-term);
      }
      L(i, j) = v;
    }
  }
  return L;
}

RationalMatrix right_eigen_matrix(int n, const Rational& p, int dim) {
  if (dim < 1 || dim > n + 1) throw std::invalid_argument("eigenvector matrix dimension out of range");
  const auto s = stirling_table(static_cast<unsigned>(n));
  RationalMatrix R(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Rational u = 0;
      for (int k = i; k <= n; ++k) {
        const Integer outer = binomial(n - i, static_cast<unsigned long>(n - k));
        for (int l = n - j; l <= k; ++l) {
          Rational term(s[k][l] * binomial(l, static_cast<unsigned long>(n - j)) * outer);
          term /= Rational(factorial(static_cast<unsigned long>(k))) * pow(p, static_cast<unsigned long>(l));
          u += ((n - j - l) % 2 == 0) ? term : Rational(-term);
        }
      }
      R(i, j) = u;
    }
  }
  return R;
}

Rational right_eigen_alt(int n, const Rational& p, int i, int j) {
  if (j < 0 || j > n) throw std::invalid_argument("column index out of range");
  // Coefficients of prod_{m<n} ((1/p) x + (n - i - m - 1/p)), lowest degree first.
  const Rational slope = Rational(1) / p;
  std::vector<Rational> poly{Rational(1)};
  for (int m = 0; m < n; ++m) {
    const Rational constant = Rational(n - i - m) - slope;
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d] += poly[d] * constant;
      next[d + 1] += poly[d] * slope;
    }
    poly = std::move(next);
  }
  return poly[static_cast<std::size_t>(n - j)] / Rational(factorial(static_cast<unsigned long>(n)));
}

EigenSystem eigen_system(const ProcessParams& params) {
  const int dim = params.state_count();
  const int n = params.summands();
  EigenSystem sys{left_eigen_matrix(n, params.p(), dim), right_eigen_matrix(n, params.p(), dim), {}};
  const Rational ratio = Rational(1) / params.signed_base();
  for (int k = 0; k < dim; ++k) sys.eigenvalues.push_back(pow(ratio, static_cast<unsigned long>(k)));

  if (sys.right * sys.left != RationalMatrix::identity(static_cast<std::size_t>(dim))) {
    throw ConsistencyError("R L != I");
  }
  const RationalMatrix D = RationalMatrix::diagonal(sys.eigenvalues);
  if (sys.right * D * sys.left != transition_matrix(params)) {
    throw ConsistencyError("P != R D L");
  }
  return sys;
}

std::vector<Rational> stationary_distribution(const ProcessParams& params) {
  const RationalMatrix L = left_eigen_matrix(params.summands(), params.p(), params.state_count());
  std::vector<Rational> pi(L.row(0).begin(), L.row(0).end());
  Rational total = 0;
  for (const Rational& x : pi) total += x;
  for (Rational& x : pi) x /= total;
  return pi;
}

Rational conjugate_exponent(const Rational& p) {
  if (p <= 1) throw std::invalid_argument("conjugate exponent needs p > 1, got " + to_string(p));
  return p / (p - 1);
}

CheckReport duality_check_L(int n, const Rational& p) {
  const Rational q = conjugate_exponent(p);
  const RationalMatrix Lp = left_eigen_matrix(n, p, n + 1);
  const RationalMatrix Lq = left_eigen_matrix(n, q, n + 1);
  CheckReport report{"left duality p=" + to_string(p) + " n=" + std::to_string(n)};
  for (int i = 0; i <= n; ++i) {
    const Rational factor = pow(q / p, static_cast<unsigned long>(n - i)) * (i % 2 == 0 ? 1 : -1);
    for (int j = 0; j <= n; ++j) {
      const Rational expected = factor * Lp(i, n - j);
      report.record(Lq(i, j) == expected, "v" + cell(i, j) + ": " + to_string(Lq(i, j)) + " vs " + to_string(expected));
    }
  }
  return report;
}

CheckReport duality_check_R(int n, const Rational& p) {
  const Rational q = conjugate_exponent(p);
  const RationalMatrix Rp = right_eigen_matrix(n, p, n + 1);
  const RationalMatrix Rq = right_eigen_matrix(n, q, n + 1);
  CheckReport report{"right duality p=" + to_string(p) + " n=" + std::to_string(n)};
  for (int j = 0; j <= n; ++j) {
    const Rational factor = pow(p / q, static_cast<unsigned long>(n - j)) * (j % 2 == 0 ? 1 : -1);
    for (int i = 0; i <= n; ++i) {
      const Rational expected = factor * Rp(n - i, j);
      report.record(Rq(i, j) == expected, "u" + cell(i, j) + ": " + to_string(Rq(i, j)) + " vs " + to_string(expected));
    }
  }
  return report;
}

bool SymmetryReport::holds() const {
  for (const auto& c : clauses) {
    if (!c.holds()) return false;
  }
  return true;
}

SymmetryReport symmetry_check(int b, int n, const Rational& p) {
  SymmetryReport report;
  auto tag = [&](const std::string& clause) {
    return clause + " b=" + std::to_string(b) + " n=" + std::to_string(n) + " p=" + to_string(p);
  };
  if (p == 1) {
    const RationalMatrix plus = transition_matrix(make_process(Sign::plus, b, n, 1));
    const RationalMatrix minus = transition_matrix(make_process(Sign::minus, b, n, 1));
    CheckReport centro{tag("(0) P1+ centro-symmetric")};
    CheckReport flip{tag("(1) P1-(i,j) = P1+(i,n-1-j)")};
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        centro.record(plus(i, j) == plus(n - 1 - i, n - 1 - j), cell(i, j));
        flip.record(minus(i, j) == plus(i, n - 1 - j), cell(i, j));
      }
    }
    report.clauses.push_back(std::move(centro));
    report.clauses.push_back(std::move(flip));
  }
  if (p == 2 && b % 2 == 1) {
    const RationalMatrix plus = transition_matrix(make_process(Sign::plus, b, n, 2));
    const RationalMatrix minus = transition_matrix(make_process(Sign::minus, b, n, 2));
    CheckReport flip{tag("(2) P2-(i,j) = P2+(i,n-j)")};
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) flip.record(minus(i, j) == plus(i, n - j), cell(i, j));
    }
    report.clauses.push_back(std::move(flip));
  }
  if (p > 1) {
    const Rational q = conjugate_exponent(p);
    for (Sign sign : {Sign::plus, Sign::minus}) {
      RationalMatrix P, Q;
      try {
        P = transition_matrix(make_process(sign, b, n, p));
        Q = transition_matrix(make_process(sign, b, n, q));
      } catch (const std::invalid_argument&) {
        continue;  // (sign, b, p) is not a process
      }
      CheckReport dual{tag(std::string("(3) P_p") + sign_char(sign) + "(i,j) = P_p*(n-i,n-j)")};
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) dual.record(P(i, j) == Q(n - i, n - j), cell(i, j));
      }
      report.clauses.push_back(std::move(dual));
    }
  }
  return report;
}

StatTable stirling_frobenius(int n, const Rational& p) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Rational> w{Rational(1)};  // w_j(0)
  for (int m = 1; m <= n; ++m) {
    std::vector<Rational> next(static_cast<std::size_t>(m) + 1);
    const Rational a = p * m - 1;
    for (int j = 0; j <= m; ++j) {
      if (j < m) next[j] += a * w[j];
      if (j > 0) next[j] += w[j - 1];
    }
    w = std::move(next);
  }
  if (n >= 1) {
    const RationalMatrix R = right_eigen_matrix(n, p, n + 1);
    const Rational scale = Rational(factorial(static_cast<unsigned long>(n))) * pow(p, static_cast<unsigned long>(n));
    for (int j = 0; j <= n; ++j) {
      if (w[j] != scale * R(0, n - j)) {
        throw ConsistencyError("Stirling-Frobenius recursion disagrees with n! p^n u_{0,n-j} at j=" +
                               std::to_string(j));
      }
    }
  }
  return {n, p, std::move(w)};
}

StatTable descent_statistics(int n, const Rational& p, DescentVariant variant) {
  require_natural(p);
  if (n < 1) throw std::invalid_argument("n must be positive");
  const long q = to_long(p);
  const int dim = full_dim(n, p);

  // E_q(m, k) = (qk+1) E_q(m-1, k) + (q(m+1-k)-1) E_q(m-1, k-1), E_q(0, 0) = 1.
  std::vector<Integer> e{Integer(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<Integer> next(static_cast<std::size_t>(m) + 1, 0);
    for (int k = 0; k <= m; ++k) {
      if (k < m) next[k] += Integer(q * k + 1) * e[k];
      if (k > 0) next[k] += Integer(q * (m + 1 - k) - 1) * e[k - 1];
    }
    e = std::move(next);
  }
  const RationalMatrix L = left_eigen_matrix(n, p, dim);
  for (int k = 0; k < dim; ++k) {
    if (Rational(e[k]) != L(0, k)) {
      throw ConsistencyError("descent recursion disagrees with v_{0,k} at k=" + std::to_string(k));
    }
  }

  StatTable table{n, p, {}};
  if (variant == DescentVariant::standard || q == 1) {
    for (int k = 0; k < dim; ++k) table.values.emplace_back(e[k]);
    return table;
  }

  // F_q(m, k) = (qk+q-1) F_q(m-1, k) + (q(m-k)+1) F_q(m-1, k-1), F_q(0, 0) = 1.
  std::vector<Integer> f{Integer(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<Integer> next(static_cast<std::size_t>(m) + 1, 0);
    for (int k = 0; k <= m; ++k) {
      if (k < m) next[k] += Integer(q * k + q - 1) * f[k];
      if (k > 0) next[k] += Integer(q * (m - k) + 1) * f[k - 1];
    }
    f = std::move(next);
  }
  for (int k = 0; k <= n; ++k) {
    if (f[k] != e[n - k]) {
      throw ConsistencyError("F_p(n,k) != E_p(n,n-k) at k=" + std::to_string(k));
    }
    table.values.emplace_back(f[k]);
  }
  return table;
}

}  // namespace carries
