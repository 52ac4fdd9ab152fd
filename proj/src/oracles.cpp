#include "carries/oracles.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace carries::oracle {

namespace {

Digit floor_div(Digit a, Digit b) {
  Digit q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::vector<DigitWord> split_columns(int b, int n, int steps, const std::vector<Digit>& flat) {
  std::vector<DigitWord> out;
  for (int j = 0; j < steps; ++j) {
    out.emplace_back(b, std::vector<Digit>(flat.begin() + j * n, flat.begin() + (j + 1) * n));
  }
  return out;
}

MultiDigitWord to_multi(int b, const std::vector<DigitWord>& columns) {
  std::vector<std::vector<Digit>> cols;
  for (const DigitWord& w : columns) cols.push_back(w.digits);
  return {b, std::move(cols)};
}

}  // namespace

ReachableCarries reachable_carries(Sign sign, int b, int d, int n) {
  check_digit_set(b, d, n);
  const Digit base = sign == Sign::plus ? b : -b;
  std::set<long> seen{0};
  std::vector<long> stack{0};
  while (!stack.empty()) {
    const long carry = stack.back();
    stack.pop_back();
    // Only the digit sum matters; enumerate sums d*n .. (d+b-1)*n.
    for (long sum = static_cast<long>(d) * n; sum <= static_cast<long>(d + b - 1) * n; ++sum) {
      const long total = carry + sum;
      const long digit = ((total - d) % b + b) % b + d;
      const long next = floor_div(total - digit, base);
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return {*seen.begin(), *seen.rbegin(), seen.size()};
}

std::vector<long> descent_table(int n, int p, DescentVariant variant) {
  std::vector<long> table(static_cast<std::size_t>(n) + 1, 0);
  for_each_element(n, p, [&](const ColoredPermutation& s) {
    ++table[variant == DescentVariant::standard ? descent_count(s) : dash_descent_count(s)];
  });
  return table;
}

std::vector<long> cycle_counts(int k) {
  std::vector<long> counts(static_cast<std::size_t>(k) + 1, 0);
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (int i = 0; i < k; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    ++counts[cycles];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

void for_each_tuple(int b, int cells, const std::function<void(const std::vector<Digit>&)>& visit) {
  long total = 1;
  for (int k = 0; k < cells; ++k) {
    total *= b;
    if (total > kEnumerationLimit) throw std::length_error("enumeration exceeds 10^7 tuples");
  }
  std::vector<Digit> t(static_cast<std::size_t>(cells), 0);
  for (long k = 0; k < total; ++k) {
    visit(t);
    for (Digit& x : t) {
      if (++x < b) break;
      x = 0;
    }
  }
}

SequenceLaw chain_law(const RationalMatrix& P, int steps) {
  SequenceLaw law{{Sequence{}, Rational(1)}};
  for (int r = 0; r < steps; ++r) {
    SequenceLaw next;
    for (const auto& [seq, prob] : law) {
      const std::size_t from = seq.empty() ? 0 : static_cast<std::size_t>(seq.back());
      for (std::size_t j = 0; j < P.dim(); ++j) {
        if (P(from, j) == 0) continue;
        Sequence s = seq;
        s.push_back(static_cast<int>(j));
        next[s] = prob * P(from, j);
      }
    }
    law = std::move(next);
  }
  return law;
}

SequenceCounts carries_sequence_counts(const ProcessParams& params, int steps) {
  const int b = params.base();
  const int n = params.summands();
  SequenceCounts counts;
  for_each_tuple(b, steps * n, [&](const std::vector<Digit>& flat) {
    const CarriesTrace trace = run_trace(params, split_columns(b, n, steps, flat));
    ++counts[Sequence(trace.kappas.begin() + 1, trace.kappas.end())];
  });
  return counts;
}

SequenceCounts shuffle_sequence_counts(int b, int n, int p, int steps, ShuffleConstruction construction) {
  SequenceCounts counts;
  for_each_tuple(b, steps * n, [&](const std::vector<Digit>& flat) {
    ++counts[run_shuffle(b, n, p, split_columns(b, n, steps, flat), construction).descents];
  });
  return counts;
}

SequenceCounts sampled_sequence_counts(int b, int n, int p, int steps, long samples, std::uint64_t seed,
                                       ShuffleConstruction construction) {
  Rng rng(seed);
  SequenceCounts counts;
  for (long k = 0; k < samples; ++k) ++counts[sample_sequence(b, n, p, steps, rng, construction).descents];
  return counts;
}

double total_variation(const SequenceCounts& counts, const SequenceLaw& law) {
  long total = 0;
  for (const auto& [seq, c] : counts) total += c;
  if (total == 0) throw std::invalid_argument("no samples");
  double tv = 0;
  for (const auto& [seq, prob] : law) {
    const auto it = counts.find(seq);
    const double empirical = it == counts.end() ? 0.0 : static_cast<double>(it->second) / total;
    tv += std::abs(empirical - prob.get_d());
  }
  for (const auto& [seq, c] : counts) {
    if (!law.contains(seq)) tv += static_cast<double>(c) / total;
  }
  return tv / 2;
}

bool same_law(const SequenceCounts& counts, const SequenceLaw& law) {
  long total = 0;
  for (const auto& [seq, c] : counts) total += c;
  if (counts.size() != law.size()) return false;
  for (const auto& [seq, c] : counts) {
    const auto it = law.find(seq);
    if (it == law.end() || it->second != Rational(c) / Rational(total)) return false;
  }
  return true;
}

CheckReport bijection_exhaustive(int b, int n, int p, int steps, Sign sign) {
  const ProcessParams params = make_process(sign, b, n, p);
  CheckReport report(std::string("bijection ") + sign_char(sign) + " b=" + std::to_string(b) + " n=" +
                     std::to_string(n) + " p=" + std::to_string(p) + " N=" + std::to_string(steps));
  std::set<std::vector<Digit>> images;
  for_each_tuple(b, steps * n, [&](const std::vector<Digit>& flat) {
    const std::vector<DigitWord> columns = split_columns(b, n, steps, flat);
    const MultiDigitWord summands = to_multi(b, columns);
    const CarriesTrace carries = run_trace(params, columns);
    const ShuffleTrace trace = sign == Sign::plus ? bijection_plus(summands, p) : bijection_minus(summands, p);
    const std::vector<int> kappas(carries.kappas.begin() + 1, carries.kappas.end());
    std::string where = "summands";
    for (Digit x : flat) where += " " + std::to_string(x);
    report.record(trace.descents == kappas, "statistics differ from carries at" + where);
    const MultiDigitWord back =
        sign == Sign::plus ? bijection_plus_inverse(trace.words, p) : bijection_minus_inverse(trace.words, p);
    report.record(back == summands, "inverse fails at" + where);
    std::vector<Digit> image;
    for (const DigitWord& w : trace.words) image.insert(image.end(), w.digits.begin(), w.digits.end());
    report.record(images.insert(image).second, "image repeated at" + where);
  });
  return report;
}

long gsr_preimage_count(const ColoredPermutation& sigma, int b) {
  long count = 0;
  for_each_tuple(b, sigma.size(), [&](const std::vector<Digit>& a) {
    if (gsr_to_permutation(DigitWord(b, a), sigma.colors()) == sigma) ++count;
  });
  return count;
}

std::map<std::string, long> shuffle_distribution(int b, int n, int p, int steps) {
  std::map<std::string, long> dist;
  for_each_tuple(b, steps * n, [&](const std::vector<Digit>& flat) {
    const ShuffleTrace trace = run_shuffle(b, n, p, split_columns(b, n, steps, flat), ShuffleConstruction::plus);
    ++dist[to_text(steps == 0 ? ColoredPermutation::identity(n, p) : trace.elements.back())];
  });
  return dist;
}

}  // namespace carries::oracle
