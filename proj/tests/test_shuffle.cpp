#include "carries/shuffle.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace carries;

namespace {

ColoredPermutation perm(std::string_view text, int p) { return parse_colored_permutation(text, p); }

const MultiDigitWord kPlusSummands(7, {{4, 5, 6, 2}, {5, 2, 4, 3}, {3, 0, 4, 0}});
const MultiDigitWord kMinusSummands(8, {{4, 3, 1, 2}, {7, 5, 4, 6}, {4, 2, 5, 3}, {0, 1, 2, 0}});

}  // namespace

TEST_CASE("labels to permutations") {
  CHECK(gsr_to_permutation(DigitWord(7, {4, 1, 6, 3, 0, 5, 0, 2}), 3) ==
        perm("(6,1)(3,1)(8,0)(5,0)(1,0)(7,2)(2,0)(4,2)", 3));
  CHECK(gsr_to_permutation(DigitWord(3, {2, 1, 0, 1, 0, 1}), 2) == perm("(6,0)(3,1)(1,0)(4,1)(2,0)(5,1)", 2));
  CHECK(gsr_to_permutation(DigitWord(7, {5, 4, 1, 2, 0, 6, 3}), 3) == perm("(6,2)(5,1)(2,1)(3,2)(1,0)(7,0)(4,0)", 3));
}

TEST_CASE("star and sharp maps") {
  const std::vector<DigitWord> levels = {DigitWord(4, {1, 3, 2, 0, 1, 2}), DigitWord(7, {5, 0, 3, 4, 6, 3})};
  const std::vector<DigitWord> starred = star_map(levels);
  CHECK(starred[1].digits == std::vector<Digit>{0, 3, 4, 5, 3, 6});
  CHECK(unstar_map(starred) == levels);
  const DigitWord sharp = sharp_compose(levels[1], levels[0]);
  CHECK(sharp.base == 28);
  CHECK(gsr_to_permutation(sharp, 3) ==
        compose(gsr_to_permutation(levels[1], 3), gsr_to_permutation(levels[0], 3)));
}

TEST_CASE("f and bar maps") {
  CHECK(f_map(186, 343, 3) == 215);
  CHECK(f_map(DigitWord(7, {0, 1, 2, 3}), 3).digits == std::vector<Digit>{0, 3, 6, 2});
  const MultiDigitWord bar = bar_map(kPlusSummands);
  CHECK(bar.row_values() == MultiDigitWord(7, {{4, 2, 1, 3}, {5, 1, 6, 2}, {3, 4, 1, 2}}).row_values());
  CHECK(bar_map_inverse(bar) == kPlusSummands);
  CHECK_THROWS_AS(MultiDigitWord(7, {{1, 2}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(checked_power(10, 19), std::length_error);
}

TEST_CASE("word descents") {
  CHECK(word_descents(DigitWord(7, {5, 6, 3, 2}), 3, WordDescent::bar) == 2);
  CHECK(word_descents(DigitWord(7, {5, 6, 3, 2}), 3, WordDescent::tilde) ==
        descent_count(gsr_to_permutation(DigitWord(7, {5, 6, 3, 2}), 3)));
}

TEST_CASE("plus bijection on the worked summands") {
  const ShuffleTrace t = bijection_plus(kPlusSummands, 3);
  CHECK(t.words[0].digits == std::vector<Digit>{5, 6, 3, 2});
  CHECK(t.words[1].digits == std::vector<Digit>{0, 4, 2, 3});
  CHECK(t.words[2].digits == std::vector<Digit>{0, 4, 5, 5});
  CHECK(t.elements[2] == perm("(2,2)(3,2)(4,0)(1,2)", 3));
  CHECK(t.descents == std::vector<int>{3, 3, 2});
  CHECK(carries_of(kPlusSummands, Sign::plus, 3) == std::vector<long>{3, 3, 2});
  CHECK(bijection_plus_inverse(t.words, 3) == kPlusSummands);
  CHECK_THROWS_AS(bijection_plus(kPlusSummands, 4), std::invalid_argument);
}

TEST_CASE("minus bijection on the worked summands") {
  const ShuffleTrace t = bijection_minus(kMinusSummands, 3);
  CHECK(t.words[0].digits == std::vector<Digit>{4, 5, 0, 6});
  CHECK(t.words[3].digits == std::vector<Digit>{1, 2, 6, 0});
  CHECK(t.elements[3] == perm("(4,1)(2,1)(3,2)(1,2)", 3));
  CHECK(t.descents == std::vector<int>{3, 1, 2, 4});
  CHECK(carries_of(kMinusSummands, Sign::minus, 3) == std::vector<long>{3, 1, 2, 4});
  CHECK(bijection_minus_inverse(t.words, 3) == kMinusSummands);
  CHECK(reverse_even_places(reverse_even_places(kMinusSummands)) == kMinusSummands);
}

TEST_CASE("sampled sequences") {
  const ShuffleTrace a = sample_sequence(7, 4, 3, 5, 99);
  const ShuffleTrace b = sample_sequence(7, 4, 3, 5, 99);
  CHECK(a.words == b.words);
  CHECK(a.elements.size() == 5);
  CHECK(run_shuffle(7, 4, 3, a.words, ShuffleConstruction::plus).elements == a.elements);
  for (std::size_t r = 0; r < a.elements.size(); ++r) CHECK(a.descents[r] == descent_count(a.elements[r]));
}

TEST_CASE("shuffle probabilities") {
  const ColoredPermutation sigma = perm("(6,2)(5,1)(2,1)(3,2)(1,0)(7,0)(4,0)", 3);
  CHECK(shuffle_probability(sigma, 7, 1) == Rational(1) / pow(Rational(7), 7));
  Rational total = 0;
  for_each_element(3, 2, [&](const ColoredPermutation& g) { total += shuffle_probability(g, 5, 2); });
  CHECK(total == 1);
  CHECK(shuffle_probability(ColoredPermutation::identity(2, 1), 3, 1) == make_rational(6, 9));
}

TEST_CASE("generating identity and alternating shifts") {
  for (int n = 1; n <= 3; ++n) {
    for (int p = 1; p <= 2; ++p) {
      for (int d = 0; d <= n; ++d) {
        if (p == 1 && d == n) {
          CHECK_THROWS_AS(gessel_coefficients(n, p, d), std::domain_error);
          continue;
        }
        CHECK(gessel_identity_check(gessel_coefficients(n, p, d), 3).holds());
      }
    }
  }
  CHECK(gessel_coefficients(2, 1, 0).c == std::vector<std::vector<long>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  for (int b = 2; b <= 8; ++b) {
    for (int p = 1; p <= b + 1; ++p) {
      if ((b + 1) % p == 0) CHECK(alternating_shift_check(b, p, 3).holds());
    }
  }
}
