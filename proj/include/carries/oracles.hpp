#pragma once

#include "carries/colored_perm.hpp"
#include "carries/matrix.hpp"
#include "carries/params.hpp"
#include "carries/report.hpp"
#include "carries/shuffle.hpp"
#include "carries/spectral.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

/// Brute-force counterparts of the closed forms, used by tests and suites.
namespace carries::oracle {

inline constexpr long kEnumerationLimit = 10'000'000;

/// Carries reachable from carry 0 when adding n numbers with digits in
/// {d, ..., d+b-1} in base ±b.
struct ReachableCarries {
  long min_carry = 0;
  long max_carry = 0;
  std::size_t count = 0;
};
ReachableCarries reachable_carries(Sign sign, int b, int d, int n);

/// Number of elements of G_{p,n} with k descents (standard or dash), k = 0..n.
std::vector<long> descent_table(int n, int p, DescentVariant variant);

/// Number of permutations of [k] with l cycles, l = 0..k.
std::vector<long> cycle_counts(int k);

/// Calls visit for every element of D(b)^{cells} in odometer order.
/// Throws std::length_error above kEnumerationLimit.
void for_each_tuple(int b, int cells, const std::function<void(const std::vector<Digit>&)>& visit);

using Sequence = std::vector<int>;
using SequenceCounts = std::map<Sequence, long>;
using SequenceLaw = std::map<Sequence, Rational>;

/// Law of (kappa_1, ..., kappa_N) from kappa_0 = 0 as products of P entries.
SequenceLaw chain_law(const RationalMatrix& P, int steps);

/// (kappa_1, ..., kappa_N) counted over all summands in D(b)^{Nn}.
SequenceCounts carries_sequence_counts(const ProcessParams& params, int steps);

/// Step statistics counted over all words in D(b)^{Nn}.
SequenceCounts shuffle_sequence_counts(int b, int n, int p, int steps, ShuffleConstruction construction);

/// Step statistics of `samples` independently drawn shuffle sequences.
SequenceCounts sampled_sequence_counts(int b, int n, int p, int steps, long samples, std::uint64_t seed,
                                       ShuffleConstruction construction);

/// Total variation distance between empirical counts and an exact law.
double total_variation(const SequenceCounts& counts, const SequenceLaw& law);

bool same_law(const SequenceCounts& counts, const SequenceLaw& law);

/// For every summand array: step statistics equal the carries, the inverse
/// map recovers the input, and images are distinct.
CheckReport bijection_exhaustive(int b, int n, int p, int steps, Sign sign);

/// Words A in D(b)^n with pi_b[A] = sigma.
long gsr_preimage_count(const ColoredPermutation& sigma, int b);

/// Distribution of sigma_r = pi[A_r] o ... o pi[A_1] over all words, keyed by
/// the text form of sigma.
std::map<std::string, long> shuffle_distribution(int b, int n, int p, int steps);

}  // namespace carries::oracle
