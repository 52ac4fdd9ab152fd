#pragma once

#include "carries/params.hpp"
#include "carries/report.hpp"

#include <optional>

namespace carries {

/// E[kappa_r | kappa_0 = i].
Rational mean_conditional(const ProcessParams& params, int r, long i);
/// The second-order forms below need a right eigenvector with eigenvalue
/// 1/b^2, which exists only for n >= 2; they throw std::domain_error at n = 1.

/// Var(kappa_r | kappa_0 = i); independent of i and p.
Rational variance_conditional(const ProcessParams& params, int r, long i);
/// Cov(kappa_s, kappa_{s+r} | kappa_0 = i).
Rational covariance_conditional(const ProcessParams& params, int s, int r, long i);

struct StationaryMoments {
  Rational mean;        // E_pi[kappa_0]
  Rational covariance;  // Cov_pi(kappa_r, kappa_0)
};
Rational stationary_mean(const ProcessParams& params);
Rational stationary_covariance(const ProcessParams& params, int r);
StationaryMoments stationary_moments(const ProcessParams& params, int r);

/// Moments of one (params, r, s, start) query. start empty means kappa_0 ~ pi.
/// Conditional: mean = E[kappa_r], variance = Var(kappa_r),
///              covariance = Cov(kappa_s, kappa_{s+r}).
/// Stationary:  mean = E_pi[kappa_0], variance = Var_pi(kappa_0),
///              covariance = Cov_pi(kappa_r, kappa_0).
struct MomentReport {
  ProcessParams params;
  int r = 0;
  int s = 0;
  std::optional<long> start;
  Rational mean;
  Rational variance;
  Rational covariance;
};

inline constexpr int kMomentStepLimit = 64;

/// Closed forms. Throws std::invalid_argument on negative steps or a start
/// outside C_p(n), std::domain_error at n = 1.
MomentReport moments_closed_form(const ProcessParams& params, int r, int s, std::optional<long> start);

/// The same quantities from P^r, P^s, P^{s+r} and the stationary vector.
/// Throws std::length_error when r or s exceeds kMomentStepLimit.
MomentReport moments_oracle(const ProcessParams& params, int r, int s, std::optional<long> start);

/// u1(i) = i + 1/p - (n+1)/2 and u2(i) = u1(i)^2 - (n+1)/12 are right
/// eigenvectors of P with eigenvalues 1/(±b) and 1/b^2 (u2 only for n >= 2).
CheckReport moment_eigenvector_check(const ProcessParams& params);

}  // namespace carries
