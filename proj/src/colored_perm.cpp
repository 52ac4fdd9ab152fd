#include "carries/colored_perm.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace carries {

namespace {

int mod(long x, int p) {
  const long r = x % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

void require_same_shape(const ColoredPermutation& a, const ColoredPermutation& b) {
  if (a.size() != b.size() || a.colors() != b.colors()) {
    throw std::invalid_argument("colored permutations belong to different groups");
  }
}

}  // namespace

ColoredPermutation::ColoredPermutation(int p, std::vector<int> images, std::vector<int> colors)
    : p_(p), images_(std::move(images)), colors_(std::move(colors)) {
  if (p_ < 1) throw std::invalid_argument("p must be a positive integer");
  if (images_.size() != colors_.size()) throw std::invalid_argument("images and colors differ in length");
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int k : images_) {
    if (k < 1 || k > n || seen[k]) throw std::invalid_argument("images are not a permutation of [n]");
    seen[k] = true;
  }
  for (int c : colors_) {
    if (c < 0 || c >= p_) throw std::invalid_argument("color outside Z_p");
  }
}

ColoredPermutation ColoredPermutation::identity(int n, int p) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return {p, std::move(images), std::vector<int>(static_cast<std::size_t>(n), 0)};
}

ColoredPermutation compose(const ColoredPermutation& tau, const ColoredPermutation& sigma) {
  require_same_shape(tau, sigma);
  const int n = sigma.size();
  const int p = sigma.colors();
  std::vector<int> images(n), colors(n);
  for (int i = 1; i <= n; ++i) {
    images[i - 1] = tau.image(sigma.image(i));
    colors[i - 1] = mod(tau.color(sigma.image(i)) + sigma.color(i), p);
  }
  return {p, std::move(images), std::move(colors)};
}

ColoredPermutation inverse(const ColoredPermutation& sigma) {
  const int n = sigma.size();
  const int p = sigma.colors();
  std::vector<int> images(n), colors(n);
  for (int i = 1; i <= n; ++i) {
    images[sigma.image(i) - 1] = i;
    colors[sigma.image(i) - 1] = mod(-sigma.color(i), p);
  }
  return {p, std::move(images), std::move(colors)};
}

int standard_color_rank(int color, int p) { return color == 0 ? 0 : p - color; }

OrderKey standard_key(int position, int color, int p) { return {standard_color_rank(color, p), position}; }

OrderKey dash_key(int position, int color) { return {color, position}; }

int descent_count(const ColoredPermutation& sigma) {
  const int n = sigma.size();
  const int p = sigma.colors();
  int d = 0;
  for (int i = 1; i < n; ++i) {
    if (standard_key(sigma.image(i), sigma.color(i), p) > standard_key(sigma.image(i + 1), sigma.color(i + 1), p)) ++d;
  }
  if (n > 0 && sigma.color(n) != 0) ++d;
  return d;
}

int dash_descent_count(const ColoredPermutation& sigma) {
  const int p = sigma.colors();
  if (p == 1) return descent_count(sigma);
  const int n = sigma.size();
  int d = 0;
  for (int i = 1; i < n; ++i) {
    if (dash_key(sigma.image(i), sigma.color(i)) > dash_key(sigma.image(i + 1), sigma.color(i + 1))) ++d;
  }
  if (n > 0 && sigma.color(n) == p - 1) ++d;
  return d;
}

ReverseVariant parse_reverse_variant(std::string_view text) {
  if (text == "R1" || text == "r1") return ReverseVariant::r1;
  if (text == "R2" || text == "r2") return ReverseVariant::r2;
  if (text == "prime") return ReverseVariant::prime;
  throw std::invalid_argument("unknown reverse variant '" + std::string(text) + "'");
}

ColoredPermutation reverse_map(const ColoredPermutation& sigma, ReverseVariant variant) {
  const int n = sigma.size();
  const int p = sigma.colors();
  std::vector<int> images = sigma.images();
  std::vector<int> colors = sigma.color_vector();
  switch (variant) {
    case ReverseVariant::r1:
      if (p != 1) throw std::invalid_argument("R1 needs p = 1");
      for (int& k : images) k = n + 1 - k;
      break;
    case ReverseVariant::r2:
      if (p != 2) throw std::invalid_argument("R2 needs p = 2");
      for (int& k : images) k = n + 1 - k;
      for (int& c : colors) c = (c + 1) % 2;
      break;
    case ReverseVariant::prime:
      for (int& c : colors) c = mod(-c, p);
      break;
  }
  return {p, std::move(images), std::move(colors)};
}

long group_order(int n, int p) {
  if (n < 0 || p < 1) throw std::invalid_argument("group needs n >= 0 and p >= 1");
  long order = 1;
  for (int k = 1; k <= n; ++k) {
    order *= static_cast<long>(k) * p;
    if (order > kGroupEnumerationLimit) return -1;
  }
  return order;
}

void for_each_element(int n, int p, const std::function<void(const ColoredPermutation&)>& visit) {
  if (group_order(n, p) < 0) throw std::length_error("G_{p,n} has more than 10^7 elements");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    while (true) {
      visit(ColoredPermutation(p, images, colors));
      int k = n - 1;
      while (k >= 0 && colors[k] == p - 1) colors[k--] = 0;
      if (k < 0) break;
      ++colors[k];
    }
  } while (std::next_permutation(images.begin(), images.end()));
}

std::vector<ColoredPermutation> enumerate_group(int n, int p) {
  std::vector<ColoredPermutation> out;
  for_each_element(n, p, [&](const ColoredPermutation& s) { out.push_back(s); });
  return out;
}

ColoredPermutation random_element(int n, int p, Rng& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::swap(images[i], images[rng.uniform(static_cast<std::uint64_t>(i) + 1)]);
  }
  std::vector<int> colors(static_cast<std::size_t>(n));
  for (int& c : colors) c = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(p)));
  return {p, std::move(images), std::move(colors)};
}

std::string to_text(const ColoredPermutation& sigma) {
  std::string out;
  for (int i = 1; i <= sigma.size(); ++i) {
    out += "(" + std::to_string(sigma.image(i)) + "," + std::to_string(sigma.color(i)) + ")";
  }
  return out;
}

ColoredPermutation parse_colored_permutation(std::string_view text, int p) {
  static const std::regex pair_re(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  const std::string s(text);
  std::vector<int> images, colors;
  std::size_t consumed = 0;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), pair_re); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (static_cast<std::size_t>(m.position()) != consumed) break;
    images.push_back(std::stoi(m[1]));
    colors.push_back(std::stoi(m[2]));
    consumed += static_cast<std::size_t>(m.length());
  }
  if (consumed != s.size()) throw std::invalid_argument("malformed colored permutation '" + s + "'");
  return {p, std::move(images), std::move(colors)};
}

}  // namespace carries
