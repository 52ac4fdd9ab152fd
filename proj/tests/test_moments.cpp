#include "carries/moments.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace carries;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

}  // namespace

TEST_CASE("conditional moments") {
  const ProcessParams classical = make_process(Sign::plus, 10, 3, 1);
  CHECK(mean_conditional(classical, 2, 0) == q(99, 100));
  CHECK(variance_conditional(classical, 2, 0) == q(3333, 10000));
  CHECK(covariance_conditional(classical, 1, 2, 0) == q(33, 10000));

  const ProcessParams small = make_process(Sign::plus, 2, 2, 1);
  const MomentReport r = moments_closed_form(small, 1, 1, 0);
  CHECK(r.mean == q(1, 4));
  CHECK(r.variance == q(3, 16));
  CHECK(r.covariance == q(3, 32));

  const ProcessParams minus = make_process(Sign::minus, 3, 2, 2);
  const MomentReport m = moments_closed_form(minus, 3, 2, 2);
  CHECK(m.mean == q(26, 27));
  CHECK(m.variance == q(182, 729));
  CHECK(m.covariance == q(-20, 2187));
}

TEST_CASE("stationary moments") {
  const ProcessParams params = make_process(Sign::minus, 8, 3, 3);
  CHECK(stationary_mean(params) == q(5, 3));
  CHECK(stationary_covariance(params, 1) == q(-1, 24));
  CHECK(stationary_covariance(params, 0) == q(1, 3));
  const MomentReport r = moments_closed_form(params, 1, 0, std::nullopt);
  CHECK(r.mean == q(5, 3));
  CHECK(r.variance == q(1, 3));
  CHECK(r.covariance == q(-1, 24));
}

TEST_CASE("closed forms equal the matrix-power oracle") {
  for (Sign sign : {Sign::plus, Sign::minus}) {
    for (int b = 2; b <= 5; ++b) {
      for (const Rational& p : valid_p_values(sign, b)) {
        for (int n = 2; n <= 4; ++n) {
          const ProcessParams params = make_process(sign, b, n, p);
          CHECK(moment_eigenvector_check(params).holds());
          for (int r = 0; r <= 3; ++r) {
            for (int s = 0; s <= 3; ++s) {
              for (long i = 0; i < params.state_count(); ++i) {
                const MomentReport a = moments_closed_form(params, r, s, i);
                const MomentReport c = moments_oracle(params, r, s, i);
                CHECK(a.mean == c.mean);
                CHECK(a.variance == c.variance);
                CHECK(a.covariance == c.covariance);
              }
            }
            const MomentReport a = moments_closed_form(params, r, 0, std::nullopt);
            const MomentReport c = moments_oracle(params, r, 0, std::nullopt);
            CHECK(a.mean == c.mean);
            CHECK(a.variance == c.variance);
            CHECK(a.covariance == c.covariance);
          }
        }
      }
    }
  }
}

TEST_CASE("a single summand has only first-moment closed forms") {
  const ProcessParams params = make_process(Sign::plus, 3, 1, 2);
  const MomentReport exact = moments_oracle(params, 1, 0, 0);
  CHECK(exact.mean == mean_conditional(params, 1, 0));
  CHECK(exact.variance == q(2, 9));
  CHECK_THROWS_AS(variance_conditional(params, 1, 0), std::domain_error);
  CHECK_THROWS_AS(moments_closed_form(params, 1, 0, 0), std::domain_error);
  CHECK(moment_eigenvector_check(params).holds());
}

TEST_CASE("moment argument validation") {
  const ProcessParams params = make_process(Sign::plus, 3, 2, 1);
  CHECK_THROWS_AS(mean_conditional(params, -1, 0), std::invalid_argument);
  CHECK_THROWS_AS(mean_conditional(params, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(moments_oracle(params, kMomentStepLimit + 1, 0, 0), std::length_error);
}
