#include "carries/colored_perm.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace carries;

namespace {

ColoredPermutation perm(std::string_view text, int p) { return parse_colored_permutation(text, p); }

}  // namespace

TEST_CASE("construction and text form") {
  const ColoredPermutation s = perm("(3,2)(4,0)(2,0)(1,2)", 3);
  CHECK(s.size() == 4);
  CHECK(s.image(1) == 3);
  CHECK(s.color(1) == 2);
  CHECK(to_text(s) == "(3,2)(4,0)(2,0)(1,2)");
  CHECK_THROWS_AS(ColoredPermutation(2, {1, 1}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ColoredPermutation(2, {1, 2}, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(perm("(1,0)(2", 2), std::invalid_argument);
  CHECK(ColoredPermutation::identity(3, 2) == perm("(1,0)(2,0)(3,0)", 2));
}

TEST_CASE("group law") {
  const ColoredPermutation tau = perm("(2,1)(3,0)(1,2)", 3);
  const ColoredPermutation sigma = perm("(3,1)(1,1)(2,0)", 3);
  const ColoredPermutation ts = compose(tau, sigma);
  for (int i = 1; i <= 3; ++i) {
    CHECK(ts.image(i) == tau.image(sigma.image(i)));
    CHECK(ts.color(i) == (tau.color(sigma.image(i)) + sigma.color(i)) % 3);
  }
  const ColoredPermutation e = ColoredPermutation::identity(3, 3);
  for (const ColoredPermutation& g : enumerate_group(3, 2)) {
    CHECK(compose(g, inverse(g)) == ColoredPermutation::identity(3, 2));
    CHECK(inverse(inverse(g)) == g);
  }
  CHECK(compose(tau, e) == tau);
  CHECK(inverse(perm("(6,2)(5,1)(2,1)(3,2)(1,0)(7,0)(4,0)", 3)) == perm("(5,0)(3,2)(4,1)(7,0)(2,2)(1,1)(6,0)", 3));
}

TEST_CASE("orders") {
  CHECK(standard_color_rank(0, 3) == 0);
  CHECK(standard_color_rank(1, 3) == 2);
  CHECK(standard_color_rank(2, 3) == 1);
  CHECK(standard_key(5, 0, 3) < standard_key(1, 2, 3));
  CHECK(standard_key(5, 2, 3) < standard_key(1, 1, 3));
  CHECK(dash_key(5, 1) < dash_key(1, 2));
}

TEST_CASE("descents") {
  CHECK(descent_count(perm("(3,2)(4,0)(2,0)(1,2)", 3)) == 3);
  CHECK(descent_count(perm("(2,1)(3,0)(4,1)(1,2)", 3)) == 3);
  CHECK(descent_count(perm("(2,2)(3,2)(4,0)(1,2)", 3)) == 2);
  CHECK(dash_descent_count(perm("(2,1)(3,2)(1,0)(4,0)", 3)) == 1);
  CHECK(dash_descent_count(perm("(3,1)(1,2)(2,1)(4,2)", 3)) == 2);
  CHECK(descent_count(perm("(4,1)(2,1)(3,2)(1,2)", 3)) == 4);
  // For p = 1 both statistics are ordinary descents.
  for (const ColoredPermutation& g : enumerate_group(4, 1)) CHECK(descent_count(g) == dash_descent_count(g));
}

TEST_CASE("reverse maps") {
  CHECK(reverse_map(perm("(3,2)(2,1)(1,0)(4,2)", 3), ReverseVariant::prime) == perm("(3,1)(2,2)(1,0)(4,1)", 3));
  CHECK(reverse_map(perm("(2,1)(3,2)(4,0)(1,0)", 3), ReverseVariant::prime) == perm("(2,2)(3,1)(4,0)(1,0)", 3));
  CHECK(parse_reverse_variant("r2") == ReverseVariant::r2);
  CHECK_THROWS_AS(parse_reverse_variant("r3"), std::invalid_argument);
  for (ReverseVariant v : {ReverseVariant::r1, ReverseVariant::r2, ReverseVariant::prime}) {
    const int p = v == ReverseVariant::r1 ? 1 : 2;
    for (const ColoredPermutation& g : enumerate_group(3, p)) {
      CHECK(reverse_map(reverse_map(g, v), v) == g);
    }
  }
}

TEST_CASE("enumeration") {
  CHECK(group_order(3, 3) == 162);
  CHECK(group_order(20, 3) == -1);
  const std::vector<ColoredPermutation> all = enumerate_group(3, 2);
  CHECK(all.size() == 48);
  CHECK(std::set<ColoredPermutation>(all.begin(), all.end()).size() == 48);
  Rng a(7), b(7);
  CHECK(random_element(5, 3, a) == random_element(5, 3, b));
}
