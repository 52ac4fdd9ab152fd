#pragma once

#include "carries/matrix.hpp"
#include "carries/params.hpp"
#include "carries/report.hpp"

#include <vector>

namespace carries {

/// Closed-form transition matrix P_p^±(i, j) on C_p(n).
RationalMatrix transition_matrix(const ProcessParams& params);

/// Transition matrix by exhaustive enumeration of D(b)^n through step_carry.
/// Throws std::length_error when b^n exceeds kOracleTupleLimit.
RationalMatrix transition_oracle(const ProcessParams& params);
inline constexpr long kOracleTupleLimit = 10'000'000;

/// Signed Stirling number of the first kind s(k, l).
Integer stirling_first(unsigned k, unsigned l);

/// L_p: rows are the left eigenvectors v_{ij}^{(p)}(n), 0 <= i, j < dim.
RationalMatrix left_eigen_matrix(int n, const Rational& p, int dim);

/// R_p = L_p^{-1} from its closed form u_{ij}^{(p)}(n), 0 <= i, j < dim.
RationalMatrix right_eigen_matrix(int n, const Rational& p, int dim);

/// u_{ij}^{(p)}(n) as the coefficient of x^{n-j} in C(n + (x-1)/p - i, n).
Rational right_eigen_alt(int n, const Rational& p, int i, int j);

struct EigenSystem {
  RationalMatrix left;               // L
  RationalMatrix right;              // R
  std::vector<Rational> eigenvalues;  // (±1/b)^k
};

/// Builds L, R and D and verifies R L = I and P = R D L exactly.
/// Throws ConsistencyError if either identity fails.
EigenSystem eigen_system(const ProcessParams& params);

/// Row 0 of L normalized to a probability vector.
std::vector<Rational> stationary_distribution(const ProcessParams& params);

/// v^{(p*)}_{ij} = (-1)^i (p*/p)^{n-i} v^{(p)}_{i,n-j}; requires p > 1.
CheckReport duality_check_L(int n, const Rational& p);
/// u^{(p*)}_{ij} = (-1)^j (p/p*)^{n-j} u^{(p)}_{n-i,j}; requires p > 1.
CheckReport duality_check_R(int n, const Rational& p);

Rational conjugate_exponent(const Rational& p);

/// The four reflection symmetries of P_p^± at base b. Clauses that do not
/// apply to (b, n, p) are omitted from the report.
struct SymmetryReport {
  std::vector<CheckReport> clauses;
  bool holds() const;
};
SymmetryReport symmetry_check(int b, int n, const Rational& p);

struct StatTable {
  int n = 0;
  Rational p;
  std::vector<Rational> values;  // indexed by k
};

/// Stirling-Frobenius cycle numbers w_0(n) .. w_n(n) by recursion,
/// cross-checked against n! p^n u_{0,n-j}. Throws ConsistencyError on mismatch.
StatTable stirling_frobenius(int n, const Rational& p);

enum class DescentVariant { standard, dash };

/// E_p(n, k) (standard) or F_p(n, k) (dash) by recursion, for p a positive
/// integer. Length is |C_p(n)|. Throws std::invalid_argument for p not in N.
StatTable descent_statistics(int n, const Rational& p, DescentVariant variant);

}  // namespace carries
