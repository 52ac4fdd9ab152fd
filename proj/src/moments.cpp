#include "carries/moments.hpp"

#include "carries/matrix.hpp"
#include "carries/spectral.hpp"

#include <stdexcept>
#include <string>

namespace carries {

namespace {

Rational half_width(const ProcessParams& params) { return make_rational(params.summands() + 1, 2); }

Rational twelfth(const ProcessParams& params) { return make_rational(params.summands() + 1, 12); }

// 1 / (±b)^r
Rational decay(const ProcessParams& params, int r) {
  return pow(Rational(1) / params.signed_base(), static_cast<unsigned long>(r));
}

void check_query(const ProcessParams& params, int r, int s, std::optional<long> start) {
  if (r < 0 || s < 0) throw std::invalid_argument("step indices must be nonnegative");
  if (start && (*start < 0 || *start >= params.state_count())) {
    throw std::invalid_argument("start state " + std::to_string(*start) + " is not in C_p(n)");
  }
}

void require_second_order(const ProcessParams& params) {
  if (params.summands() < 2) {
    throw std::domain_error("variance and covariance formulas need n >= 2");
  }
}

Rational centered(const ProcessParams& params, long i) {
  return Rational(i) + Rational(1) / params.p() - half_width(params);
}

// Row vector e_i P^k or pi P^k as a distribution on C_p(n).
std::vector<Rational> expectation_weights(const std::vector<Rational>& initial, const RationalMatrix& power) {
  return power.apply_left(initial);
}

Rational first_moment(const std::vector<Rational>& w) {
  Rational m = 0;
  for (std::size_t j = 0; j < w.size(); ++j) m += w[j] * static_cast<long>(j);
  return m;
}

Rational second_moment(const std::vector<Rational>& w) {
  Rational m = 0;
  for (std::size_t j = 0; j < w.size(); ++j) m += w[j] * static_cast<long>(j * j);
  return m;
}

// E[kappa_a kappa_{a+r}] for kappa_0 ~ initial.
Rational cross_moment(const std::vector<Rational>& initial, const RationalMatrix& to_a, const RationalMatrix& step) {
  const std::vector<Rational> at_a = to_a.apply_left(initial);
  std::vector<Rational> ids(step.dim());
  for (std::size_t j = 0; j < ids.size(); ++j) ids[j] = static_cast<long>(j);
  const std::vector<Rational> forward = step.apply(ids);  // E[kappa_{a+r} | kappa_a = j]
  Rational m = 0;
  for (std::size_t j = 0; j < at_a.size(); ++j) m += at_a[j] * static_cast<long>(j) * forward[j];
  return m;
}

}  // namespace

Rational mean_conditional(const ProcessParams& params, int r, long i) {
  check_query(params, r, 0, i);
  return decay(params, r) * centered(params, i) - Rational(1) / params.p() + half_width(params);
}

Rational variance_conditional(const ProcessParams& params, int r, long i) {
  check_query(params, r, 0, i);
  require_second_order(params);
  return twelfth(params) * (1 - decay(params, 2 * r));
}

Rational covariance_conditional(const ProcessParams& params, int s, int r, long i) {
  check_query(params, r, s, i);
  require_second_order(params);
  return decay(params, r) * twelfth(params) * (1 - decay(params, 2 * s));
}

Rational stationary_mean(const ProcessParams& params) { return half_width(params) - Rational(1) / params.p(); }

Rational stationary_covariance(const ProcessParams& params, int r) {
  check_query(params, r, 0, std::nullopt);
  require_second_order(params);
  return decay(params, r) * twelfth(params);
}

StationaryMoments stationary_moments(const ProcessParams& params, int r) {
  return {stationary_mean(params), stationary_covariance(params, r)};
}

MomentReport moments_closed_form(const ProcessParams& params, int r, int s, std::optional<long> start) {
  check_query(params, r, s, start);
  require_second_order(params);
  MomentReport report{params, r, s, start, {}, {}, {}};
  if (start) {
    report.mean = mean_conditional(params, r, *start);
    report.variance = variance_conditional(params, r, *start);
    report.covariance = covariance_conditional(params, s, r, *start);
  } else {
    const StationaryMoments m = stationary_moments(params, r);
    report.mean = m.mean;
    report.variance = twelfth(params);
    report.covariance = m.covariance;
  }
  return report;
}

MomentReport moments_oracle(const ProcessParams& params, int r, int s, std::optional<long> start) {
  check_query(params, r, s, start);
  if (r > kMomentStepLimit || s > kMomentStepLimit) {
    throw std::length_error("moment oracle steps are limited to " + std::to_string(kMomentStepLimit));
  }
  const RationalMatrix P = transition_matrix(params);
  const std::size_t dim = P.dim();
  const RationalMatrix Pr = P.power(static_cast<unsigned>(r));
  MomentReport report{params, r, s, start, {}, {}, {}};

  if (start) {
    std::vector<Rational> e(dim);
    e[static_cast<std::size_t>(*start)] = 1;
    const std::vector<Rational> at_r = expectation_weights(e, Pr);
    report.mean = first_moment(at_r);
    report.variance = second_moment(at_r) - report.mean * report.mean;
    const RationalMatrix Ps = P.power(static_cast<unsigned>(s));
    const std::vector<Rational> at_s = expectation_weights(e, Ps);
    const std::vector<Rational> at_sr = expectation_weights(e, Ps * Pr);
    report.covariance = cross_moment(e, Ps, Pr) - first_moment(at_s) * first_moment(at_sr);
  } else {
    // Stationary vector by exact fixed-point solve of pi (P - I) = 0, sum pi = 1.
    const std::vector<Rational> pi = stationary_solve(P);
    report.mean = first_moment(pi);
    report.variance = second_moment(pi) - report.mean * report.mean;
    report.covariance = cross_moment(pi, RationalMatrix::identity(dim), Pr) - report.mean * report.mean;
  }
  return report;
}

CheckReport moment_eigenvector_check(const ProcessParams& params) {
  const RationalMatrix P = transition_matrix(params);
  const std::size_t dim = P.dim();
  std::vector<Rational> u1(dim), u2(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    u1[i] = centered(params, static_cast<long>(i));
    u2[i] = u1[i] * u1[i] - twelfth(params);
  }
  const Rational l1 = decay(params, 1);
  const Rational l2 = decay(params, 2);
  const std::vector<Rational> Pu1 = P.apply(u1);
  const std::vector<Rational> Pu2 = P.apply(u2);
  CheckReport report("moment eigenvectors");
  for (std::size_t i = 0; i < dim; ++i) {
    report.record(Pu1[i] == l1 * u1[i], "u1 at " + std::to_string(i));
    if (params.summands() >= 2) report.record(Pu2[i] == l2 * u2[i], "u2 at " + std::to_string(i));
  }
  return report;
}

}  // namespace carries
