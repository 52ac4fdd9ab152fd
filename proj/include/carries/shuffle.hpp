#pragma once

#include "carries/colored_perm.hpp"
#include "carries/params.hpp"
#include "carries/report.hpp"

#include <cstdint>
#include <vector>

namespace carries {

/// N places of n rows over D(b); columns[j-1] holds the digits at place j.
class MultiDigitWord {
 public:
  MultiDigitWord() = default;
  /// Throws std::invalid_argument on ragged columns or digits outside D(b),
  /// std::length_error if b^N does not fit in 62 bits.
  MultiDigitWord(Digit base, std::vector<std::vector<Digit>> columns);
  /// Expands row values (each below b^N) into N base-b places.
  static MultiDigitWord from_row_values(Digit base, int places, const std::vector<Digit>& values);

  Digit base() const { return base_; }
  int places() const { return static_cast<int>(columns_.size()); }
  int rows() const { return columns_.empty() ? 0 : static_cast<int>(columns_.front().size()); }
  /// Digit of row i (0-based) at place j (1-based).
  Digit digit(int i, int j) const { return columns_[j - 1][i]; }
  const std::vector<std::vector<Digit>>& columns() const { return columns_; }
  /// Place j as a word over D(b).
  DigitWord column(int j) const;
  /// (a^(N), ..., a^(1))_b for row i (0-based).
  Digit row_value(int i) const;
  std::vector<Digit> row_values() const;
  /// Row values truncated to the lowest j places, as a word over D(b^j).
  DigitWord truncation(int j) const;

  friend bool operator==(const MultiDigitWord&, const MultiDigitWord&) = default;

 private:
  Digit base_ = 2;
  std::vector<std::vector<Digit>> columns_;
};

/// b^N, throwing std::length_error beyond 62 bits.
Digit checked_power(Digit base, int exponent);

/// pi_b[A]: sigma(i) is the stable rank of a_i, sigma^c(i) = a_i mod p.
ColoredPermutation gsr_to_permutation(const DigitWord& word, int p);

/// Star map on levels A_1, A_2, ... (level 1 first). Level k+1 is read along
/// the stable lexicographic order of the tuples formed by starred levels k..1.
std::vector<DigitWord> star_map(const std::vector<DigitWord>& levels);
std::vector<DigitWord> unstar_map(const std::vector<DigitWord>& starred);

/// (A_N ... A_1)^#: a_i = sum_k a^(k)_{i,*} b_1 ... b_{k-1}, over D(b_1 ... b_N).
DigitWord sharp_compose(const std::vector<DigitWord>& levels);
DigitWord sharp_compose(const DigitWord& upper, const DigitWord& lower);

/// f_b(x) = p x mod b.
Digit f_map(Digit x, Digit b, int p);
DigitWord f_map(const DigitWord& word, int p);

/// Row i becomes the prefix sum of rows 1..i mod b^N.
MultiDigitWord bar_map(const MultiDigitWord& word);
MultiDigitWord bar_map_inverse(const MultiDigitWord& word);

enum class WordDescent { bar, tilde, bar_prime, tilde_prime };

/// bar: x_i > x_{i+1}, end x_n > (b-1)/p (needs b = 1 mod p).
/// tilde: standard-ranked (r, j) order for x = jp + r, end x_n != 0 mod p.
/// bar_prime: end x_n > b - (b+1)/p (needs b = -1 mod p).
/// tilde_prime: (r, j) order, end x_n = p-1 mod p.
int word_descents(const DigitWord& word, int p, WordDescent variant);

enum class ShuffleConstruction {
  plus,        // sigma_r = pi[A_r] o sigma_{r-1}; statistic d
  minus,       // even-step factors primed; statistic n - d' (odd r), d (even r)
  reverse_r1,  // sigma_r = R1(pi[A_r] o sigma_{r-1}), p = 1; statistic d
  reverse_r2,  // sigma_r = R2(pi[A_r] o sigma_{r-1}), p = 2; statistic d
};

struct ShuffleTrace {
  int base = 2;
  int size = 0;
  int colors = 1;
  ShuffleConstruction construction = ShuffleConstruction::plus;
  std::vector<DigitWord> words;               // A_1 .. A_N
  std::vector<ColoredPermutation> elements;   // sigma_1 .. sigma_N
  std::vector<int> descents;                  // statistic of sigma_1 .. sigma_N
};

/// The statistic compared with kappa_r at step r (1-based).
int step_statistic(const ColoredPermutation& sigma, int r, ShuffleConstruction construction);

/// Builds sigma_1 .. sigma_N from given words starting at the identity.
ShuffleTrace run_shuffle(int b, int n, int p, std::vector<DigitWord> words, ShuffleConstruction construction);
/// Appends one uniformly drawn word.
void shuffle_step(ShuffleTrace& trace, Rng& rng);
ShuffleTrace sample_sequence(int b, int n, int p, int steps, Rng& rng,
                             ShuffleConstruction construction = ShuffleConstruction::plus);
ShuffleTrace sample_sequence(int b, int n, int p, int steps, std::uint64_t seed,
                             ShuffleConstruction construction = ShuffleConstruction::plus);

/// The carries kappa_1 .. kappa_N of the (±b, n, p) process over the places.
std::vector<long> carries_of(const MultiDigitWord& summands, Sign sign, const Rational& p);

/// bar map, f over b^N, unstar; kappa_j = d(sigma_j). Needs b = 1 mod p.
ShuffleTrace bijection_plus(const MultiDigitWord& summands, int p);
/// Reverse even places, bar map, f over b^N, unstar, primed composition.
/// kappa^-_r equals the minus statistic. Needs b = -1 mod p.
ShuffleTrace bijection_minus(const MultiDigitWord& summands, int p);

/// Inverse of bijection_plus / bijection_minus on the words A_1 .. A_N.
MultiDigitWord bijection_plus_inverse(const std::vector<DigitWord>& words, int p);
MultiDigitWord bijection_minus_inverse(const std::vector<DigitWord>& words, int p);

/// Reverses the digits at even places: x -> b-1-x.
MultiDigitWord reverse_even_places(const MultiDigitWord& word);

/// P(sigma_r = sigma) = b^{-rn} C(n + (b^r - 1)/p - d(sigma^{-1}), n).
Rational shuffle_probability(const ColoredPermutation& sigma, int b, int r);

struct GesselTable {
  int n = 0;
  int p = 1;
  int d = 0;
  std::vector<std::vector<long>> c;  // c[i][j]
};

/// c_{ij}^d counted for every sigma with d(sigma) = d; throws ConsistencyError
/// if two representatives disagree, std::domain_error if no sigma has d.
GesselTable gessel_coefficients(int n, int p, int d);

/// Coefficients of s^a t^b on both sides of the generating identity for
/// a, b <= cutoff.
CheckReport gessel_identity_check(const GesselTable& table, int cutoff);

/// (A, A', A, ...)_b over j places with A = A_-(b) at odd places equals
/// A_-(b^j) for odd j and A_+(b^j) for even j.
CheckReport alternating_shift_check(int b, int p, int max_places);

}  // namespace carries
