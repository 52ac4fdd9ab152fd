#pragma once

#include "carries/random.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace carries {

/// An element of G_{p,n} in window notation: position i (1-based) carries the
/// pair (sigma(i), sigma^c(i)) with sigma(i) in [n] and sigma^c(i) in Z_p.
class ColoredPermutation {
 public:
  ColoredPermutation() = default;
  /// Throws std::invalid_argument unless images is a permutation of [n] and
  /// every color lies in [0, p).
  ColoredPermutation(int p, std::vector<int> images, std::vector<int> colors);
  static ColoredPermutation identity(int n, int p);

  int size() const { return static_cast<int>(images_.size()); }
  int colors() const { return p_; }
  /// sigma(i), 1-based.
  int image(int i) const { return images_[i - 1]; }
  /// sigma^c(i), 1-based.
  int color(int i) const { return colors_[i - 1]; }
  const std::vector<int>& images() const { return images_; }
  const std::vector<int>& color_vector() const { return colors_; }

  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;
  friend auto operator<=>(const ColoredPermutation&, const ColoredPermutation&) = default;

 private:
  int p_ = 1;
  std::vector<int> images_;
  std::vector<int> colors_;
};

/// (tau o sigma)(i) = tau(sigma(i)), color tau^c(sigma(i)) + sigma^c(i) mod p.
ColoredPermutation compose(const ColoredPermutation& tau, const ColoredPermutation& sigma);
ColoredPermutation inverse(const ColoredPermutation& sigma);

/// Lexicographic key (colorRank, position) of one pair of Sigma.
struct OrderKey {
  int color_rank = 0;
  int position = 0;
  friend auto operator<=>(const OrderKey&, const OrderKey&) = default;
};

/// Standard order: color 0 first, then p-1, p-2, ..., 1.
int standard_color_rank(int color, int p);
OrderKey standard_key(int position, int color, int p);
/// Dash order: colors 0, 1, ..., p-1.
OrderKey dash_key(int position, int color);

/// d(sigma): standard-order descents plus 1 if sigma^c(n) != 0.
int descent_count(const ColoredPermutation& sigma);
/// d'(sigma): dash-order descents plus 1 if sigma^c(n) = p-1; equals d for p = 1.
int dash_descent_count(const ColoredPermutation& sigma);

enum class ReverseVariant { r1, r2, prime };
ReverseVariant parse_reverse_variant(std::string_view text);

/// R1 (p = 1): sigma(i) -> n+1-sigma(i).
/// R2 (p = 2): (sigma(i), c) -> (n+1-sigma(i), c+1 mod 2).
/// prime: colors negated mod p.
/// Throws std::invalid_argument on a variant/p mismatch.
ColoredPermutation reverse_map(const ColoredPermutation& sigma, ReverseVariant variant);

inline constexpr long kGroupEnumerationLimit = 10'000'000;

/// |G_{p,n}| = p^n n!, or -1 if it exceeds kGroupEnumerationLimit.
long group_order(int n, int p);

/// Visits every element of G_{p,n} once, permutations in lexicographic order
/// and colors as an odometer within each. Throws std::length_error above
/// kGroupEnumerationLimit.
void for_each_element(int n, int p, const std::function<void(const ColoredPermutation&)>& visit);
std::vector<ColoredPermutation> enumerate_group(int n, int p);

ColoredPermutation random_element(int n, int p, Rng& rng);

/// "(k,c)(k,c)..." form.
std::string to_text(const ColoredPermutation& sigma);
/// Parses the text form; p must be given since colors do not determine it.
ColoredPermutation parse_colored_permutation(std::string_view text, int p);

}  // namespace carries
