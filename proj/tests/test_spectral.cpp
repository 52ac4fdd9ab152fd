#include "carries/matrix.hpp"
#include "carries/spectral.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace carries;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

RationalMatrix matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  RationalMatrix m(rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const Rational& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("matrix inverse and stationary solve") {
  const RationalMatrix m = matrix({{2, 1}, {1, 1}});
  CHECK(inverse(m) == matrix({{1, -1}, {-1, 2}}));
  CHECK_THROWS_AS(inverse(matrix({{1, 2}, {2, 4}})), std::domain_error);
  const RationalMatrix P = matrix({{q(1, 2), q(1, 2)}, {q(1, 4), q(3, 4)}});
  CHECK(stationary_solve(P) == std::vector<Rational>{q(1, 3), q(2, 3)});
  CHECK(P.power(0) == RationalMatrix::identity(2));
  CHECK(P.is_stochastic());
}

TEST_CASE("transition matrices") {
  CHECK(transition_matrix(make_process(Sign::plus, 2, 2, 1)) == matrix({{q(3, 4), q(1, 4)}, {q(1, 4), q(3, 4)}}));
  CHECK(transition_matrix(make_process(Sign::plus, 3, 1, 2)) == matrix({{q(2, 3), q(1, 3)}, {q(1, 3), q(2, 3)}}));
  // Classical matrix for three summands in base 10.
  CHECK(transition_matrix(make_process(Sign::plus, 10, 3, 1)) ==
        matrix({{q(11, 50), q(33, 50), q(3, 25)}, {q(33, 200), q(67, 100), q(33, 200)}, {q(3, 25), q(33, 50), q(11, 50)}}));
  CHECK(transition_matrix(make_process(Sign::minus, 3, 2, 2)) ==
        matrix({{0, q(2, 3), q(1, 3)}, {q(1, 9), q(7, 9), q(1, 9)}, {q(1, 3), q(2, 3), 0}}));
  CHECK(transition_matrix(make_process(Sign::minus, 2, 2, 3)) ==
        matrix({{0, q(1, 4), q(3, 4)}, {0, q(3, 4), q(1, 4)}, {q(1, 4), q(3, 4), 0}}));
  for (Sign sign : {Sign::plus, Sign::minus}) {
    for (int b = 2; b <= 6; ++b) {
      for (const Rational& p : valid_p_values(sign, b)) {
        for (int n = 1; n <= 3; ++n) {
          const ProcessParams params = make_process(sign, b, n, p);
          CHECK(transition_matrix(params) == transition_oracle(params));
        }
      }
    }
  }
}

TEST_CASE("eigen decomposition") {
  const ProcessParams params = make_process(Sign::minus, 3, 2, 2);
  const EigenSystem sys = eigen_system(params);
  CHECK(sys.eigenvalues == std::vector<Rational>{1, q(-1, 3), q(1, 9)});
  CHECK(sys.left == matrix({{1, 6, 1}, {1, 0, -1}, {1, -2, 1}}));
  CHECK(sys.right == matrix({{q(1, 8), q(1, 2), q(3, 8)}, {q(1, 8), 0, q(-1, 8)}, {q(1, 8), q(-1, 2), q(3, 8)}}));
  CHECK(stationary_distribution(params) == std::vector<Rational>{q(1, 8), q(3, 4), q(1, 8)});
  CHECK(stationary_distribution(make_process(Sign::minus, 8, 3, 3)) ==
        std::vector<Rational>{q(1, 162), q(10, 27), q(31, 54), q(4, 81)});
  for (int n = 1; n <= 5; ++n) {
    for (const Rational& p : {q(1), q(2), q(3, 2)}) {
      const int dim = p == 1 ? n : n + 1;
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) CHECK(right_eigen_alt(n, p, i, j) == right_eigen_matrix(n, p, dim)(i, j));
      }
    }
  }
}

TEST_CASE("scaled right eigenvectors at n = 3") {
  CHECK(right_eigen_matrix(3, 1, 3).scaled(6) == matrix({{1, 3, 2}, {1, 0, -1}, {1, -3, 2}}));
  CHECK(right_eigen_matrix(3, 2, 4).scaled(48) ==
        matrix({{1, 9, 23, 15}, {1, 3, -1, -3}, {1, -3, -1, 3}, {1, -9, 23, -15}}));
  CHECK(right_eigen_matrix(3, 3, 4).scaled(162) ==
        matrix({{1, 15, 66, 80}, {1, 6, 3, -10}, {1, -3, -6, 8}, {1, -12, 39, -28}}));
  CHECK(right_eigen_matrix(3, q(3, 2), 4).scaled(q(81, 4)) ==
        matrix({{1, 6, q(39, 4), q(7, 2)}, {1, q(3, 2), q(-3, 2), -1}, {1, -3, q(3, 4), q(5, 4)},
                {1, q(-15, 2), q(33, 2), -10}}));
}

TEST_CASE("Stirling numbers") {
  CHECK(stirling_first(4, 2) == 11);
  CHECK(stirling_first(4, 1) == -6);
  CHECK(stirling_first(0, 0) == 1);
  CHECK(stirling_first(3, 0) == 0);
  CHECK(stirling_frobenius(3, 1).values == std::vector<Rational>{0, 2, 3, 1});
  CHECK(stirling_frobenius(3, 2).values == std::vector<Rational>{15, 23, 9, 1});
  CHECK(stirling_frobenius(3, 3).values == std::vector<Rational>{80, 66, 15, 1});
  CHECK_NOTHROW(stirling_frobenius(6, q(3, 2)));
}

TEST_CASE("descent statistics") {
  CHECK(descent_statistics(3, 1, DescentVariant::standard).values == std::vector<Rational>{1, 4, 1});
  CHECK(descent_statistics(3, 2, DescentVariant::standard).values == std::vector<Rational>{1, 23, 23, 1});
  CHECK(descent_statistics(3, 3, DescentVariant::standard).values == std::vector<Rational>{1, 60, 93, 8});
  CHECK(descent_statistics(3, 3, DescentVariant::dash).values == std::vector<Rational>{8, 93, 60, 1});
  CHECK_THROWS_AS(descent_statistics(3, q(3, 2), DescentVariant::standard), std::invalid_argument);
}

TEST_CASE("duality and symmetries") {
  for (int n = 1; n <= 5; ++n) {
    for (const Rational& p : {q(2), q(3), q(3, 2), q(5, 2)}) {
      CHECK(duality_check_L(n, p).holds());
      CHECK(duality_check_R(n, p).holds());
    }
  }
  CHECK(conjugate_exponent(3) == q(3, 2));
  CHECK(conjugate_exponent(q(3, 2)) == 3);
  for (int b = 2; b <= 7; ++b) {
    for (int n = 1; n <= 4; ++n) {
      for (const Rational& p : {q(1), q(2), q(3), q(3, 2)}) CHECK(symmetry_check(b, n, p).holds());
    }
  }
  CHECK(symmetry_check(3, 2, 1).clauses.size() == 2);
  CHECK(symmetry_check(3, 2, 2).clauses.size() >= 1);
}
