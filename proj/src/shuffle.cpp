#include "carries/shuffle.hpp"

#include "carries/rational.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace carries {

namespace {

constexpr Digit kMaxWordBase = Digit{1} << 62;

Digit mod(Digit x, Digit m) {
  const Digit r = x % m;
  return r < 0 ? r + m : r;
}

Digit mul_mod(Digit a, Digit b, Digit m) {
  return static_cast<Digit>((static_cast<__int128>(a) * b) % m);
}

// p^{-1} mod m for gcd(p, m) = 1.
Digit inverse_mod(Digit p, Digit m) {
  __int128 old_r = p, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) throw std::invalid_argument("p is not invertible modulo the word base");
  return mod(static_cast<Digit>(old_s % m), m);
}

// Stable 1-based ranks of keys, ties broken by index.
template <class Key>
std::vector<int> stable_ranks(const std::vector<Key>& keys) {
  std::vector<int> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> rank(keys.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = static_cast<int>(pos) + 1;
  return rank;
}

void require_congruence(int b, int p, int residue) {
  if (p < 1) throw std::invalid_argument("p must be a positive integer");
  if (mod(b - residue, p) != 0) {
    throw std::invalid_argument("b = " + std::to_string(b) + " is not " + std::to_string(residue) + " mod p = " +
                                std::to_string(p));
  }
}

void require_same_length(const std::vector<DigitWord>& levels) {
  for (const DigitWord& w : levels) {
    if (w.size() != levels.front().size()) throw std::invalid_argument("words differ in length");
  }
}

std::vector<DigitWord> levels_of(const MultiDigitWord& word) {
  std::vector<DigitWord> levels;
  for (int j = 1; j <= word.places(); ++j) levels.push_back(word.column(j));
  return levels;
}

MultiDigitWord word_from_levels(Digit base, const std::vector<DigitWord>& levels) {
  std::vector<std::vector<Digit>> columns;
  for (const DigitWord& w : levels) columns.push_back(w.digits);
  return {base, std::move(columns)};
}

MultiDigitWord f_rows(const MultiDigitWord& word, Digit multiplier) {
  const Digit modulus = checked_power(word.base(), word.places());
  std::vector<Digit> values = word.row_values();
  for (Digit& v : values) v = mul_mod(multiplier, v, modulus);
  return MultiDigitWord::from_row_values(word.base(), word.places(), values);
}

}  // namespace

Digit checked_power(Digit base, int exponent) {
  if (base < 1 || exponent < 0) throw std::invalid_argument("power needs base >= 1 and exponent >= 0");
  Digit value = 1;
  for (int k = 0; k < exponent; ++k) {
    if (value > kMaxWordBase / base) throw std::length_error("b^N exceeds 62 bits");
    value *= base;
  }
  return value;
}

MultiDigitWord::MultiDigitWord(Digit base, std::vector<std::vector<Digit>> columns)
    : base_(base), columns_(std::move(columns)) {
  if (base_ < 2) throw std::invalid_argument("base must be at least 2");
  checked_power(base_, places());
  for (const auto& col : columns_) {
    if (col.size() != columns_.front().size()) throw std::invalid_argument("places have different row counts");
    for (Digit x : col) {
      if (x < 0 || x >= base_) throw std::invalid_argument("digit outside D(b)");
    }
  }
}

MultiDigitWord MultiDigitWord::from_row_values(Digit base, int places, const std::vector<Digit>& values) {
  const Digit modulus = checked_power(base, places);
  std::vector<std::vector<Digit>> columns(static_cast<std::size_t>(places), std::vector<Digit>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] >= modulus) throw std::invalid_argument("row value outside D(b^N)");
    Digit v = values[i];
    for (int j = 0; j < places; ++j) {
      columns[j][i] = v % base;
      v /= base;
    }
  }
  return {base, std::move(columns)};
}

DigitWord MultiDigitWord::column(int j) const { return {base_, columns_.at(static_cast<std::size_t>(j - 1))}; }

Digit MultiDigitWord::row_value(int i) const {
  Digit v = 0;
  for (int j = places(); j >= 1; --j) v = v * base_ + digit(i, j);
  return v;
}

std::vector<Digit> MultiDigitWord::row_values() const {
  std::vector<Digit> out(static_cast<std::size_t>(rows()));
  for (int i = 0; i < rows(); ++i) out[i] = row_value(i);
  return out;
}

DigitWord MultiDigitWord::truncation(int j) const {
  if (j < 1 || j > places()) throw std::invalid_argument("truncation length out of range");
  std::vector<Digit> values(static_cast<std::size_t>(rows()), 0);
  for (int i = 0; i < rows(); ++i) {
    for (int k = j; k >= 1; --k) values[i] = values[i] * base_ + digit(i, k);
  }
  return {checked_power(base_, j), std::move(values)};
}

ColoredPermutation gsr_to_permutation(const DigitWord& word, int p) {
  if (p < 1) throw std::invalid_argument("p must be a positive integer");
  std::vector<int> colors(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) colors[i] = static_cast<int>(word[i] % p);
  return {p, stable_ranks(word.digits), std::move(colors)};
}

std::vector<DigitWord> star_map(const std::vector<DigitWord>& levels) {
  if (levels.empty()) return {};
  require_same_length(levels);
  const std::size_t n = levels.front().size();
  std::vector<DigitWord> starred{levels.front()};
  std::vector<std::vector<Digit>> tuples(n);
  for (std::size_t k = 1; k < levels.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) tuples[i].insert(tuples[i].begin(), starred[k - 1][i]);
    const std::vector<int> rho = stable_ranks(tuples);
    std::vector<Digit> next(n);
    for (std::size_t i = 0; i < n; ++i) next[i] = levels[k][rho[i] - 1];
    starred.emplace_back(levels[k].base, std::move(next));
  }
  return starred;
}

std::vector<DigitWord> unstar_map(const std::vector<DigitWord>& starred) {
  if (starred.empty()) return {};
  require_same_length(starred);
  const std::size_t n = starred.front().size();
  std::vector<DigitWord> levels{starred.front()};
  std::vector<std::vector<Digit>> tuples(n);
  for (std::size_t k = 1; k < starred.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) tuples[i].insert(tuples[i].begin(), starred[k - 1][i]);
    const std::vector<int> rho = stable_ranks(tuples);
    std::vector<Digit> prev(n);
    for (std::size_t i = 0; i < n; ++i) prev[rho[i] - 1] = starred[k][i];
    levels.emplace_back(starred[k].base, std::move(prev));
  }
  return levels;
}

DigitWord sharp_compose(const std::vector<DigitWord>& levels) {
  if (levels.empty()) throw std::invalid_argument("sharp map needs at least one word");
  const std::vector<DigitWord> starred = star_map(levels);
  const std::size_t n = levels.front().size();
  std::vector<Digit> values(n, 0);
  Digit scale = 1;
  for (const DigitWord& level : starred) {
    for (std::size_t i = 0; i < n; ++i) values[i] += level[i] * scale;
    if (scale > kMaxWordBase / level.base) throw std::length_error("product base exceeds 62 bits");
    scale *= level.base;
  }
  return {scale, std::move(values)};
}

DigitWord sharp_compose(const DigitWord& upper, const DigitWord& lower) { return sharp_compose({lower, upper}); }

Digit f_map(Digit x, Digit b, int p) {
  if (x < 0 || x >= b) throw std::invalid_argument("f_b argument outside D(b)");
  return mul_mod(p, x, b);
}

DigitWord f_map(const DigitWord& word, int p) {
  std::vector<Digit> out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) out[i] = f_map(word[i], word.base, p);
  return {word.base, std::move(out)};
}

MultiDigitWord bar_map(const MultiDigitWord& word) {
  const Digit modulus = checked_power(word.base(), word.places());
  std::vector<Digit> values = word.row_values();
  Digit acc = 0;
  for (Digit& v : values) {
    acc = (acc + v) % modulus;
    v = acc;
  }
  return MultiDigitWord::from_row_values(word.base(), word.places(), values);
}

MultiDigitWord bar_map_inverse(const MultiDigitWord& word) {
  const Digit modulus = checked_power(word.base(), word.places());
  std::vector<Digit> values = word.row_values();
  for (std::size_t i = values.size(); i-- > 1;) values[i] = mod(values[i] - values[i - 1], modulus);
  return MultiDigitWord::from_row_values(word.base(), word.places(), values);
}

int word_descents(const DigitWord& word, int p, WordDescent variant) {
  if (p < 1) throw std::invalid_argument("p must be a positive integer");
  const Digit b = word.base;
  const std::size_t n = word.size();
  if (n == 0) return 0;
  auto key = [&](Digit x) -> std::pair<Digit, Digit> {
    const Digit j = x / p;
    const int r = static_cast<int>(x % p);
    if (variant == WordDescent::tilde) return {standard_color_rank(r, p), j};
    return {r, j};
  };
  int count = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const bool plain = variant == WordDescent::bar || variant == WordDescent::bar_prime;
    if (plain ? word[i] > word[i + 1] : key(word[i]) > key(word[i + 1])) ++count;
  }
  const Digit last = word[n - 1];
  switch (variant) {
    case WordDescent::bar:
      if (mod(b - 1, p) != 0) throw std::invalid_argument("bar descents need b = 1 mod p");
      count += last > (b - 1) / p;
      break;
    case WordDescent::bar_prime:
      if (mod(b + 1, p) != 0) throw std::invalid_argument("bar' descents need b = -1 mod p");
      count += last > b - (b + 1) / p;
      break;
    case WordDescent::tilde:
      count += last % p != 0;
      break;
    case WordDescent::tilde_prime:
      count += last % p == p - 1;
      break;
  }
  return count;
}

int step_statistic(const ColoredPermutation& sigma, int r, ShuffleConstruction construction) {
  if (construction != ShuffleConstruction::minus || r % 2 == 0) return descent_count(sigma);
  if (sigma.colors() == 1) return sigma.size() - 1 - descent_count(sigma);
  return sigma.size() - dash_descent_count(sigma);
}

ShuffleTrace run_shuffle(int b, int n, int p, std::vector<DigitWord> words, ShuffleConstruction construction) {
  if (b < 2 || n < 1 || p < 1) throw std::invalid_argument("shuffle needs b >= 2, n >= 1, p >= 1");
  if (construction == ShuffleConstruction::reverse_r1 && p != 1) throw std::invalid_argument("R1 needs p = 1");
  if (construction == ShuffleConstruction::reverse_r2 && p != 2) throw std::invalid_argument("R2 needs p = 2");
  ShuffleTrace trace{b, n, p, construction, {}, {}, {}};
  for (const DigitWord& w : words) {
    if (w.base != b || static_cast<int>(w.size()) != n) throw std::invalid_argument("word does not lie in D(b)^n");
  }
  trace.words = std::move(words);
  ColoredPermutation sigma = ColoredPermutation::identity(n, p);
  for (std::size_t k = 0; k < trace.words.size(); ++k) {
    const int r = static_cast<int>(k) + 1;
    ColoredPermutation factor = gsr_to_permutation(trace.words[k], p);
    switch (construction) {
      case ShuffleConstruction::plus:
        sigma = compose(factor, sigma);
        break;
      case ShuffleConstruction::minus:
        if (r % 2 == 0) factor = reverse_map(factor, ReverseVariant::prime);
        sigma = compose(factor, sigma);
        break;
      case ShuffleConstruction::reverse_r1:
        sigma = reverse_map(compose(factor, sigma), ReverseVariant::r1);
        break;
      case ShuffleConstruction::reverse_r2:
        sigma = reverse_map(compose(factor, sigma), ReverseVariant::r2);
        break;
    }
    trace.elements.push_back(sigma);
    trace.descents.push_back(step_statistic(sigma, r, construction));
  }
  return trace;
}

void shuffle_step(ShuffleTrace& trace, Rng& rng) {
  std::vector<Digit> digits(static_cast<std::size_t>(trace.size));
  for (Digit& x : digits) x = static_cast<Digit>(rng.uniform(static_cast<std::uint64_t>(trace.base)));
  std::vector<DigitWord> words = trace.words;
  words.emplace_back(trace.base, std::move(digits));
  trace = run_shuffle(trace.base, trace.size, trace.colors, std::move(words), trace.construction);
}

ShuffleTrace sample_sequence(int b, int n, int p, int steps, Rng& rng, ShuffleConstruction construction) {
  if (steps < 0) throw std::invalid_argument("step count must be nonnegative");
  std::vector<DigitWord> words;
  for (int r = 0; r < steps; ++r) {
    std::vector<Digit> digits(static_cast<std::size_t>(n));
    for (Digit& x : digits) x = static_cast<Digit>(rng.uniform(static_cast<std::uint64_t>(b)));
    words.emplace_back(b, std::move(digits));
  }
  return run_shuffle(b, n, p, std::move(words), construction);
}

ShuffleTrace sample_sequence(int b, int n, int p, int steps, std::uint64_t seed, ShuffleConstruction construction) {
  Rng rng(seed);
  return sample_sequence(b, n, p, steps, rng, construction);
}

std::vector<long> carries_of(const MultiDigitWord& summands, Sign sign, const Rational& p) {
  const ProcessParams params = make_process(sign, static_cast<int>(summands.base()), summands.rows(), p);
  CarriesTrace trace = run_trace(params, levels_of(summands));
  return {trace.kappas.begin() + 1, trace.kappas.end()};
}

MultiDigitWord reverse_even_places(const MultiDigitWord& word) {
  std::vector<std::vector<Digit>> columns = word.columns();
  for (std::size_t j = 1; j < columns.size(); j += 2) {
    for (Digit& x : columns[j]) x = word.base() - 1 - x;
  }
  return {word.base(), std::move(columns)};
}

ShuffleTrace bijection_plus(const MultiDigitWord& summands, int p) {
  const int b = static_cast<int>(summands.base());
  require_congruence(b, p, 1);
  const MultiDigitWord y = f_rows(bar_map(summands), p);
  return run_shuffle(b, summands.rows(), p, unstar_map(levels_of(y)), ShuffleConstruction::plus);
}

ShuffleTrace bijection_minus(const MultiDigitWord& summands, int p) {
  const int b = static_cast<int>(summands.base());
  require_congruence(b, p, -1);
  const MultiDigitWord y = f_rows(bar_map(reverse_even_places(summands)), p);
  return run_shuffle(b, summands.rows(), p, unstar_map(levels_of(y)), ShuffleConstruction::minus);
}

MultiDigitWord bijection_plus_inverse(const std::vector<DigitWord>& words, int p) {
  if (words.empty()) throw std::invalid_argument("no words");
  const Digit b = words.front().base;
  require_congruence(static_cast<int>(b), p, 1);
  const MultiDigitWord y = word_from_levels(b, star_map(words));
  const Digit modulus = checked_power(b, y.places());
  return bar_map_inverse(f_rows(y, inverse_mod(mod(p, modulus), modulus)));
}

MultiDigitWord bijection_minus_inverse(const std::vector<DigitWord>& words, int p) {
  if (words.empty()) throw std::invalid_argument("no words");
  const Digit b = words.front().base;
  require_congruence(static_cast<int>(b), p, -1);
  const MultiDigitWord y = word_from_levels(b, star_map(words));
  const Digit modulus = checked_power(b, y.places());
  return reverse_even_places(bar_map_inverse(f_rows(y, inverse_mod(mod(p, modulus), modulus))));
}

Rational shuffle_probability(const ColoredPermutation& sigma, int b, int r) {
  const int p = sigma.colors();
  const int n = sigma.size();
  if (r < 0) throw std::invalid_argument("step count must be nonnegative");
  require_congruence(b, p, 1);
  Integer br;
  mpz_ui_pow_ui(br.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(r));
  const Integer top = n + (br - 1) / p - descent_count(inverse(sigma));
  const Integer ways = top < 0 ? Integer(0) : binomial(top, static_cast<unsigned long>(n));
  return Rational(ways) / pow(Rational(b), static_cast<unsigned long>(r) * static_cast<unsigned long>(n));
}

GesselTable gessel_coefficients(int n, int p, int d) {
  const long order = group_order(n, p);
  if (order < 0 || order > 5000) throw std::length_error("Gessel coefficients limited to |G_{p,n}| <= 5000");
  const std::vector<ColoredPermutation> group = enumerate_group(n, p);
  std::vector<int> descents;
  std::vector<ColoredPermutation> inverses;
  for (const auto& g : group) {
    descents.push_back(descent_count(g));
    inverses.push_back(inverse(g));
  }
  GesselTable table{n, p, d, {}};
  bool found = false;
  for (std::size_t s = 0; s < group.size(); ++s) {
    if (descents[s] != d) continue;
    std::vector<std::vector<long>> c(static_cast<std::size_t>(n) + 1, std::vector<long>(static_cast<std::size_t>(n) + 1, 0));
    for (std::size_t m = 0; m < group.size(); ++m) {
      const ColoredPermutation tau = compose(group[s], inverses[m]);  // tau mu = sigma
      ++c[descent_count(tau)][descents[m]];
    }
    if (!found) {
      table.c = std::move(c);
      found = true;
    } else if (c != table.c) {
      throw ConsistencyError("c_ij^d depends on the representative " + to_text(group[s]));
    }
  }
  if (!found) throw std::domain_error("no element of G_{p,n} has " + std::to_string(d) + " descents");
  return table;
}

CheckReport gessel_identity_check(const GesselTable& table, int cutoff) {
  const int n = table.n;
  CheckReport report("Gessel identity n=" + std::to_string(n) + " p=" + std::to_string(table.p) +
                     " d=" + std::to_string(table.d));
  auto choose = [n](long top) { return top < 0 ? Integer(0) : binomial(top, static_cast<unsigned long>(n)); };
  for (int a = 0; a <= cutoff; ++a) {
    for (int b = 0; b <= cutoff; ++b) {
      Integer lhs = 0;
      for (int i = 0; i <= std::min(a, n); ++i) {
        for (int j = 0; j <= std::min(b, n); ++j) {
          lhs += Integer(table.c[i][j]) * choose(n + a - i) * choose(n + b - j);
        }
      }
      const Integer rhs = choose(static_cast<long>(n) + static_cast<long>(table.p) * a * b + a + b - table.d);
      report.record(lhs == rhs, "s^" + std::to_string(a) + " t^" + std::to_string(b) + ": " + lhs.get_str() +
                                    " vs " + rhs.get_str());
    }
  }
  return report;
}

CheckReport alternating_shift_check(int b, int p, int max_places) {
  require_congruence(b, p, -1);
  const Integer a_minus = Integer(b + 1) / p - 1;
  const Integer a_minus_c = Integer(b - 1) - a_minus;
  CheckReport report("alternating shifts b=" + std::to_string(b) + " p=" + std::to_string(p));
  Integer value = 0, scale = 1;
  for (int j = 1; j <= max_places; ++j) {
    value += scale * (j % 2 == 1 ? a_minus : a_minus_c);
    scale *= b;  // scale = b^j
    const Integer expected = (j % 2 == 1) ? Integer((scale + 1) / p - 1) : Integer((scale - 1) - (scale - 1) / p);
    report.record(value == expected, std::to_string(j) + " places: " + value.get_str() + " vs " + expected.get_str());
  }
  return report;
}

}  // namespace carries
