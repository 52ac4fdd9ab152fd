#include "carries/serialize.hpp"

#include <doctest.h>

using namespace carries;

TEST_CASE("rationals render exactly or as decimals") {
  CHECK(render(make_rational(-1, 24)) == "-1/24");
  CHECK(render(make_rational(4, 2)) == "2");
  CHECK(render(make_rational(1, 3), {true, 4}) == "0.3333");
  CHECK(render(make_rational(-2, 3), {true, 3}) == "-0.667");
}

TEST_CASE("matrix output") {
  const RationalMatrix P = transition_matrix(make_process(Sign::plus, 2, 2, 1));
  CHECK(matrix_json(P).dump() == R"([["3/4","1/4"],["1/4","3/4"]])");
  CHECK(matrix_csv(P) == "dim,2\n3/4,1/4\n1/4,3/4\n");
  const Json body = with_schema({{"matrix", matrix_json(P)}});
  CHECK(body.begin().key() == "schema");
  CHECK(body["schema"] == kSchemaVersion);
}

TEST_CASE("structured records") {
  const ProcessParams params = make_process(Sign::minus, 8, 3, 3);
  const Json p = params_json(params);
  CHECK(p["sign"] == "-");
  CHECK(p["p"] == "3");
  CHECK(p["states"] == 4);
  const Json m = moments_json(moments_closed_form(params, 1, 0, std::nullopt));
  CHECK(m["start"] == "stationary");
  CHECK(m["mean"] == "5/3");
  CHECK(m["covariance"] == "-1/24");
  const Json perm = permutation_json(parse_colored_permutation("(2,1)(1,0)", 2));
  CHECK(perm.dump() == "[[2,1],[1,0]]");
  CHECK(rows_csv({{"a", "1/2"}}) == "key,value\na,1/2\n");
}

TEST_CASE("output is stable for a seed") {
  const ProcessParams params = make_process(Sign::plus, 7, 4, 3);
  const std::string a = carries_trace_json(simulate_trace(params, 6, 11)).dump();
  const std::string b = carries_trace_json(simulate_trace(params, 6, 11)).dump();
  CHECK(a == b);
  const std::string c = shuffle_trace_json(sample_sequence(7, 4, 3, 3, 11)).dump();
  const std::string d = shuffle_trace_json(sample_sequence(7, 4, 3, 3, 11)).dump();
  CHECK(c == d);
}
