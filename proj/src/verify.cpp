#include "carries/verify.hpp"

#include "carries/colored_perm.hpp"
#include "carries/matrix.hpp"
#include "carries/moments.hpp"
#include "carries/oracles.hpp"
#include "carries/shuffle.hpp"
#include "carries/spectral.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace carries {

namespace {

using oracle::SequenceCounts;

constexpr double kTotalVariationLimit = 0.02;

// ---------------------------------------------------------------- plumbing

struct CaseSpec {
  std::optional<Sign> sign;
  std::optional<int> b, n, d, steps, cutoff;
  std::optional<Rational> p;
};

std::string flags(const CaseSpec& c) {
  std::string out;
  if (c.sign) out += std::string(" --sign ") + sign_char(*c.sign);
  if (c.b) out += " --b " + std::to_string(*c.b);
  if (c.n) out += " --n " + std::to_string(*c.n);
  if (c.p) out += " --p " + to_string(*c.p);
  if (c.d) out += " --d " + std::to_string(*c.d);
  if (c.steps) out += " --N " + std::to_string(*c.steps);
  if (c.cutoff) out += " --cutoff " + std::to_string(*c.cutoff);
  return out;
}

class SuiteBuilder {
 public:
  SuiteBuilder(std::string suite, std::string grid) : report_{std::move(suite), std::move(grid), {}} {}

  // Runs body; an exception fails the case with its message.
  void add(const std::string& key, const CaseSpec& spec, const std::function<std::string(bool&)>& body,
           const std::string& extra_flags = "") {
    CaseResult result{key, false, "", "carries-lab verify " + report_.suite + flags(spec) + extra_flags};
    try {
      bool ok = true;
      result.detail = body(ok);
      result.passed = ok;
    } catch (const std::exception& e) {
      result.detail = std::string("exception: ") + e.what();
    }
    report_.cases.push_back(std::move(result));
  }

  void add_check(const std::string& key, const CaseSpec& spec, const std::function<CheckReport()>& body) {
    add(key, spec, [&](bool& ok) {
      const CheckReport r = body();
      ok = r.holds();
      if (!ok) return r.mismatches.empty() ? std::string("failed") : r.mismatches.front();
      return std::to_string(r.checked) + " checks";
    });
  }

  SuiteReport finish() {
    std::stable_sort(report_.cases.begin(), report_.cases.end(),
                     [](const CaseResult& a, const CaseResult& b) { return a.key < b.key; });
    return std::move(report_);
  }

 private:
  SuiteReport report_;
};

std::string pad(long v, int width = 2) {
  std::string s = std::to_string(v);
  return std::string(s.size() < static_cast<std::size_t>(width) ? width - s.size() : 0, '0') + s;
}

std::string key_of(Sign sign, int b, int n, const Rational& p) {
  return std::string(1, sign_char(sign)) + " b=" + pad(b) + " n=" + pad(n) + " p=" + to_string(p);
}

std::vector<Sign> signs(const SuiteOptions& o) {
  if (o.sign) return {*o.sign};
  return {Sign::plus, Sign::minus};
}

std::vector<int> range(const std::optional<int>& fixed, int lo, int hi) {
  if (fixed) return {*fixed};
  std::vector<int> out;
  for (int k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

std::vector<Rational> rationals(const std::optional<Rational>& fixed, std::initializer_list<Rational> defaults) {
  if (fixed) return {*fixed};
  return defaults;
}

bool valid_process(Sign sign, int b, const Rational& p) {
  const std::vector<Rational> ps = valid_p_values(sign, b);
  return std::find(ps.begin(), ps.end(), p) != ps.end();
}

std::vector<int> smallest_bases(Sign sign, const Rational& p, int count) {
  std::vector<int> out;
  for (int b = 2; static_cast<int>(out.size()) < count && b < 1000; ++b) {
    if (valid_process(sign, b, p)) out.push_back(b);
  }
  return out;
}

Rational q(long num, long den = 1) { return make_rational(num, den); }

long power_of(long b, int e) {
  long v = 1;
  for (int k = 0; k < e; ++k) v *= b;
  return v;
}

std::string law_detail(const SequenceCounts& counts) {
  long total = 0;
  for (const auto& [s, c] : counts) total += c;
  return std::to_string(counts.size()) + " sequences over " + std::to_string(total) + " inputs";
}

// ---------------------------------------------------------------- suites

SuiteReport suite_transition(const SuiteOptions& o) {
  SuiteBuilder s("transition", "sign in {+,-}, 2 <= b <= 8, 1 <= n <= 4, every valid p, b^n <= 10^7");
  for (Sign sign : signs(o)) {
    for (int b : range(o.b, 2, 8)) {
      for (int n : range(o.n, 1, 4)) {
        if (power_of(b, n) > oracle::kEnumerationLimit) continue;
        for (const Rational& p : valid_p_values(sign, b)) {
          if (o.p && *o.p != p) continue;
          s.add(key_of(sign, b, n, p), {sign, b, n, {}, {}, {}, p}, [&](bool& ok) {
            const ProcessParams params = make_process(sign, b, n, p);
            const RationalMatrix P = transition_matrix(params);
            ok = P == transition_oracle(params) && P.is_stochastic();
            return ok ? "closed form equals enumeration of " + std::to_string(power_of(b, n)) + " tuples"
                      : std::string("closed form differs from enumeration");
          });
        }
      }
    }
  }
  if (!o.sign && !o.b && !o.n && !o.p) {
    s.add("classical + b=02 n=02 p=1", {Sign::plus, 2, 2, {}, {}, {}, q(1)}, [&](bool& ok) {
      RationalMatrix expected(2);
      expected(0, 0) = q(3, 4);
      expected(0, 1) = q(1, 4);
      expected(1, 0) = q(1, 4);
      expected(1, 1) = q(3, 4);
      ok = transition_matrix(make_process(Sign::plus, 2, 2, 1)) == expected;
      return std::string("[[3/4,1/4],[1/4,3/4]]");
    });
  }
  return s.finish();
}

SuiteReport suite_carry_sets(const SuiteOptions& o) {
  SuiteBuilder s("carry-sets", "sign in {+,-}, 2 <= b <= 6, 1-b <= d <= 0, 1 <= n <= 4");
  for (Sign sign : signs(o)) {
    for (int b : range(o.b, 2, 6)) {
      for (int d = 1 - b; d <= 0; ++d) {
        if (o.d && *o.d != d) continue;
        for (int n : range(o.n, 1, 4)) {
          const std::string key = std::string(1, sign_char(sign)) + " b=" + pad(b) + " d=" + std::to_string(d) +
                                  " n=" + pad(n);
          s.add(key, {sign, b, n, d, {}, {}, {}}, [&](bool& ok) {
            const CarrySet set = derive_carry_set(sign, b, d, n);
            const oracle::ReachableCarries reach = oracle::reachable_carries(sign, b, d, n);
            const ProcessParams params = ProcessParams::from_digit_set(sign, b, d, n);
            ok = set.min_carry == reach.min_carry && set.max_carry == reach.max_carry &&
                 static_cast<long>(reach.count) == set.size() && set.size() == params.state_count();
            // The normalized step reproduces the raw carry recursion from every reachable carry.
            const long base = sign == Sign::plus ? b : -b;
            for (long carry = reach.min_carry; ok && carry <= reach.max_carry; ++carry) {
              for (long sum = 0; ok && sum <= static_cast<long>(n) * (b - 1); ++sum) {
                std::vector<Digit> y(static_cast<std::size_t>(n), 0);
                long left = sum;
                for (Digit& x : y) {
                  x = std::min<long>(left, b - 1);
                  left -= x;
                }
                const long total = carry + sum + static_cast<long>(d) * n;
                const long digit = ((total - d) % b + b) % b + d;
                const long next = (total - digit) / base;
                const StepResult step = step_carry(params, set.to_normalized(carry), DigitWord(b, y));
                ok = step.kappa == set.to_normalized(next);
              }
            }
            return "C = [" + std::to_string(set.min_carry) + "," + std::to_string(set.max_carry) +
                   "], p = " + to_string(params.p());
          });
        }
      }
    }
  }
  return s.finish();
}

SuiteReport suite_eigen(const SuiteOptions& o) {
  SuiteBuilder s("eigen", "sign in {+,-}, 1 <= n <= 6, p in {1,2,3,4,3/2}, two smallest valid b");
  for (Sign sign : signs(o)) {
    for (const Rational& p : rationals(o.p, {q(1), q(2), q(3), q(4), q(3, 2)})) {
      const std::vector<int> bases = o.b ? std::vector<int>{*o.b} : smallest_bases(sign, p, 2);
      for (int b : bases) {
        for (int n : range(o.n, 1, 6)) {
          s.add(key_of(sign, b, n, p), {sign, b, n, {}, {}, {}, p}, [&](bool& ok) {
            const ProcessParams params = make_process(sign, b, n, p);
            const EigenSystem sys = eigen_system(params);  // throws on R L != I or P != R D L
            const RationalMatrix P = transition_matrix(params);
            const int dim = params.state_count();
            for (int k = 0; k < dim; ++k) ok = ok && sys.eigenvalues[k] == pow(1 / params.signed_base(), k);
            ok = ok && inverse(sys.right) == sys.left;
            const std::vector<Rational> pi = stationary_distribution(params);
            ok = ok && pi == stationary_solve(P) && P.apply_left(pi) == pi;
            bool primitive = false;
            RationalMatrix power = P;
            for (int m = 1; m <= dim && !primitive; ++m, power = power * P) primitive = power.is_positive();
            ok = ok && primitive;
            if (n <= 5) {
              for (int i = 0; i < dim; ++i) {
                for (int j = 0; j < dim; ++j) ok = ok && right_eigen_alt(n, p, i, j) == sys.right(i, j);
              }
            }
            return ok ? std::string("R L = I, P = R D L, stationary, primitive") : std::string("identity failed");
          });
        }
      }
    }
  }
  return s.finish();
}

SuiteReport suite_duality(const SuiteOptions& o) {
  SuiteBuilder s("duality", "1 <= n <= 6, p in {2,3,4,3/2,4/3,5/2}");
  for (const Rational& p : rationals(o.p, {q(2), q(3), q(4), q(3, 2), q(4, 3), q(5, 2)})) {
    for (int n : range(o.n, 1, 6)) {
      const std::string key = "n=" + pad(n) + " p=" + to_string(p);
      const CaseSpec spec{{}, {}, n, {}, {}, {}, p};
      s.add_check(key + " left", spec, [&] { return duality_check_L(n, p); });
      s.add_check(key + " right", spec, [&] { return duality_check_R(n, p); });
    }
  }
  return s.finish();
}

SuiteReport suite_symmetry(const SuiteOptions& o) {
  SuiteBuilder s("symmetry", "2 <= b <= 9, 1 <= n <= 5, p in {1,2,3,4,3/2,4/3}, clauses where they apply");
  for (int b : range(o.b, 2, 9)) {
    for (int n : range(o.n, 1, 5)) {
      for (const Rational& p : rationals(o.p, {q(1), q(2), q(3), q(4), q(3, 2), q(4, 3)})) {
        const SymmetryReport r = symmetry_check(b, n, p);
        for (const CheckReport& clause : r.clauses) {
          s.add_check(clause.name, {{}, b, n, {}, {}, {}, p}, [&] { return clause; });
        }
      }
    }
  }
  return s.finish();
}

SuiteReport suite_sf_numbers(const SuiteOptions& o) {
  SuiteBuilder s("sf-numbers", "0 <= n <= 6, p in {1,2,3,3/2}; Stirling numbers for k <= 6");
  for (const Rational& p : rationals(o.p, {q(1), q(2), q(3), q(3, 2)})) {
    for (int n : range(o.n, 0, 6)) {
      s.add("w n=" + pad(n) + " p=" + to_string(p), {{}, {}, n, {}, {}, {}, p}, [&](bool& ok) {
        const StatTable w = stirling_frobenius(n, p);  // cross-checked against n! p^n u_{0,n-j}
        if (p == 1) {
          const std::vector<long> cycles = oracle::cycle_counts(n);
          for (int j = 0; j <= n; ++j) ok = ok && w.values[j] == cycles[j];
        }
        return ok ? std::string("recursion equals scaled first row of R") : std::string("cycle counts differ");
      });
    }
  }
  if (!o.n && !o.p) {
    const std::vector<std::pair<Rational, std::vector<long>>> golden = {
        {q(1), {0, 2, 3, 1}}, {q(2), {15, 23, 9, 1}}, {q(3), {80, 66, 15, 1}}};
    for (const auto& [p, values] : golden) {
      s.add("golden n=03 p=" + to_string(p), {{}, {}, 3, {}, {}, {}, p}, [&](bool& ok) {
        const StatTable w = stirling_frobenius(3, p);
        for (int j = 0; j <= 3; ++j) ok = ok && w.values[j] == values[j];
        return std::string("w_0..w_3");
      });
    }
    for (int k = 0; k <= 6; ++k) {
      s.add("stirling k=" + pad(k), {}, [&](bool& ok) {
        const std::vector<long> cycles = oracle::cycle_counts(k);
        for (int l = 0; l <= k; ++l) {
          const Integer expected = ((k - l) % 2 == 0 ? 1 : -1) * Integer(cycles[l]);
          ok = ok && stirling_first(k, l) == expected;
        }
        return std::string("s(k,l) = (-1)^{k-l} cycle counts");
      });
    }
  }
  return s.finish();
}

SuiteReport suite_descent_stats(const SuiteOptions& o) {
  SuiteBuilder s("descent-stats", "1 <= p <= 3, 1 <= n <= 5, exhaustive over G_{p,n}");
  const int p_fixed = o.p ? static_cast<int>(to_long(*o.p)) : 0;
  for (int p : range(o.p ? std::optional<int>(p_fixed) : std::nullopt, 1, 3)) {
    for (int n : range(o.n, 1, 5)) {
      s.add("n=" + pad(n) + " p=" + std::to_string(p), {{}, {}, n, {}, {}, {}, q(p)}, [&](bool& ok) {
        const StatTable e = descent_statistics(n, p, DescentVariant::standard);
        const StatTable f = descent_statistics(n, p, DescentVariant::dash);  // checks F(n,k) = E(n,n-k)
        const std::vector<long> e_count = oracle::descent_table(n, p, DescentVariant::standard);
        const std::vector<long> f_count = oracle::descent_table(n, p, DescentVariant::dash);
        Integer total = 0;
        for (std::size_t k = 0; k < e_count.size(); ++k) {
          const Rational e_k = k < e.values.size() ? e.values[k] : Rational(0);
          const Rational f_k = k < f.values.size() ? f.values[k] : Rational(0);
          ok = ok && e_k == e_count[k] && f_k == f_count[k];
          total += e_count[k];
        }
        ok = ok && total == group_order(n, p);
        return "E and F match enumeration of " + total.get_str() + " elements";
      });
    }
  }
  return s.finish();
}

SuiteReport suite_moments(const SuiteOptions& o) {
  SuiteBuilder s("moments", "grid of the transition suite; all i, 0 <= r, s <= 5");
  const int max_step = 5;
  for (Sign sign : signs(o)) {
    for (int b : range(o.b, 2, 8)) {
      for (int n : range(o.n, 1, 4)) {
        for (const Rational& p : valid_p_values(sign, b)) {
          if (o.p && *o.p != p) continue;
          s.add(key_of(sign, b, n, p), {sign, b, n, {}, {}, {}, p}, [&](bool& ok) {
            const ProcessParams params = make_process(sign, b, n, p);
            const RationalMatrix P = transition_matrix(params);
            ok = moment_eigenvector_check(params).holds();
            const int dim = params.state_count();
            if (n == 1) {
              // Only first moments are claimed at n = 1.
              for (int r = 0; r <= max_step; ++r) {
                const RationalMatrix Pr = P.power(r);
                for (int i = 0; i < dim; ++i) {
                  Rational mean = 0;
                  for (int j = 0; j < dim; ++j) mean += Pr(i, j) * j;
                  ok = ok && mean == mean_conditional(params, r, i);
                }
              }
              const std::optional<long> none;
              ok = ok && moments_oracle(params, 0, 0, none).mean == stationary_mean(params);
              bool refused = false;
              try {
                variance_conditional(params, 1, 0);
              } catch (const std::domain_error&) {
                refused = true;
              }
              ok = ok && refused;
              return std::string("means exact; second-order forms need n >= 2");
            }
            for (int r = 0; r <= max_step; ++r) {
              for (int t = 0; t <= max_step; ++t) {
                for (int i = -1; i < dim; ++i) {
                  const std::optional<long> start = i < 0 ? std::nullopt : std::optional<long>(i);
                  if (!start && t > 0) continue;
                  const MomentReport a = moments_closed_form(params, r, t, start);
                  const MomentReport c = moments_oracle(params, r, t, start);
                  ok = ok && a.mean == c.mean && a.variance == c.variance && a.covariance == c.covariance;
                }
              }
            }
            return std::string("closed forms equal matrix-power oracle");
          });
        }
      }
    }
  }
  return s.finish();
}

SuiteReport suite_shuffle_onestep(const SuiteOptions& o) {
  SuiteBuilder s("shuffle-onestep",
                 "b = 1 mod p, b <= 7, n <= 3: one-shuffle descents vs row 0 of P; composition of bases; "
                 "Monte Carlo at (7,4,3)");
  for (int b : range(o.b, 2, 7)) {
    for (int n : range(o.n, 1, 3)) {
      for (int p = 1; p <= b - 1; ++p) {
        if ((b - 1) % p != 0 || (o.p && *o.p != p)) continue;
        s.add(key_of(Sign::plus, b, n, p), {{}, b, n, {}, {}, {}, q(p)}, [&](bool& ok) {
          const RationalMatrix P = transition_matrix(make_process(Sign::plus, b, n, p));
          const SequenceCounts counts = oracle::shuffle_sequence_counts(b, n, p, 1, ShuffleConstruction::plus);
          ok = oracle::same_law(counts, oracle::chain_law(P, 1));
          // Generating-function route through c_{ij}^0.
          const GesselTable c = gessel_coefficients(n, p, 0);
          for (std::size_t j = 0; j < P.dim(); ++j) {
            Integer ways = 0;
            for (int i = 0; i <= n; ++i) {
              const long top = n + (b - 1) / p - i;
              if (top >= 0) ways += Integer(c.c[i][j]) * binomial(top, n);
            }
            ok = ok && Rational(ways) / pow(Rational(b), n) == P(0, j);
          }
          return std::string("enumeration and generating function equal row 0");
        });
      }
    }
  }
  if (!o.b && !o.n && !o.p) {
    const std::vector<std::tuple<int, int, int>> pairs = {{3, 5, 2}, {4, 7, 3}, {3, 3, 1}, {7, 4, 3}};
    for (const auto& [b1, b2, p] : pairs) {
      for (int n = 1; n <= 3; ++n) {
        const std::string key = "compose b1=" + std::to_string(b1) + " b2=" + std::to_string(b2) +
                                " n=" + pad(n) + " p=" + std::to_string(p);
        s.add(key, {}, [&](bool& ok) {
          const bool plus = (b1 - 1) % p == 0;
          if (plus && (b2 - 1) % p == 0) {
            const RationalMatrix P1 = transition_matrix(make_process(Sign::plus, b1, n, p));
            const RationalMatrix P2 = transition_matrix(make_process(Sign::plus, b2, n, p));
            ok = P1 * P2 == transition_matrix(make_process(Sign::plus, b1 * b2, n, p));
          }
          oracle::for_each_tuple(b1, n, [&](const std::vector<Digit>& a1) {
            oracle::for_each_tuple(b2, n, [&](const std::vector<Digit>& a2) {
              const DigitWord w1(b1, a1), w2(b2, a2);
              ColoredPermutation upper = gsr_to_permutation(w2, p);
              if (!plus) upper = reverse_map(upper, ReverseVariant::prime);
              ok = ok && gsr_to_permutation(sharp_compose(w2, w1), p) == compose(upper, gsr_to_permutation(w1, p));
            });
          });
          return std::string(plus ? "product base, sharp word composes" : "sharp word composes with primed upper");
        });
      }
    }
    s.add("monte-carlo b=07 n=04 p=3", {{}, 7, 4, {}, {}, {}, q(3)}, [&](bool& ok) {
      const RationalMatrix P = transition_matrix(make_process(Sign::plus, 7, 4, 3));
      const double tv = oracle::total_variation(
          oracle::sampled_sequence_counts(7, 4, 3, 1, o.samples, o.seed, ShuffleConstruction::plus),
          oracle::chain_law(P, 1));
      ok = tv < kTotalVariationLimit;
      std::ostringstream out;
      out << "TV = " << tv << " over " << o.samples << " samples";
      return out.str();
    });
  }
  return s.finish();
}

struct BijectionCase {
  int b, n, p, steps;
};

SuiteReport suite_bijection(const SuiteOptions& o, Sign sign) {
  const bool plus = sign == Sign::plus;
  const std::string name = plus ? "bijection-plus" : "bijection-minus";
  SuiteBuilder s(name, plus ? "exhaustive (3,2,1,2) (3,2,2,2) (4,2,3,2) (3,2,1,3) (7,2,3,2); Monte Carlo (7,4,3,3)"
                            : "exhaustive (2,2,1,2) (3,2,1,2) (2,2,3,2) (5,2,2,2) (5,2,3,2) (2,2,3,3) (8,2,3,2); "
                              "Monte Carlo (8,3,3,2)");
  std::vector<BijectionCase> cases;
  const bool custom = o.b || o.n || o.p || o.steps;
  if (custom) {
    if (!o.b || !o.n || !o.p || !o.steps) throw std::invalid_argument(name + " needs --b, --n, --p and --N together");
    cases.push_back({*o.b, *o.n, static_cast<int>(to_long(*o.p)), *o.steps});
  } else if (plus) {
    cases = {{3, 2, 1, 2}, {3, 2, 2, 2}, {4, 2, 3, 2}, {3, 2, 1, 3}, {7, 2, 3, 2}};
  } else {
    cases = {{2, 2, 1, 2}, {3, 2, 1, 2}, {2, 2, 3, 2}, {5, 2, 2, 2}, {5, 2, 3, 2}, {2, 2, 3, 3}, {8, 2, 3, 2}};
  }
  const ShuffleConstruction construction = plus ? ShuffleConstruction::plus : ShuffleConstruction::minus;
  for (const BijectionCase& c : cases) {
    const std::string key = "b=" + pad(c.b) + " n=" + pad(c.n) + " p=" + std::to_string(c.p) +
                            " N=" + std::to_string(c.steps);
    const CaseSpec spec{{}, c.b, c.n, {}, c.steps, {}, q(c.p)};
    s.add(key + " bijection", spec, [&](bool& ok) {
      const CheckReport r = oracle::bijection_exhaustive(c.b, c.n, c.p, c.steps, sign);
      ok = r.holds();
      const long total = power_of(c.b, c.n * c.steps);
      if (!ok) return r.mismatches.front();
      return std::to_string(total) + "/" + std::to_string(total) + " exhaustive matches";
    });
    s.add(key + " joint law", spec, [&](bool& ok) {
      const ProcessParams params = make_process(sign, c.b, c.n, c.p);
      const SequenceCounts carries = oracle::carries_sequence_counts(params, c.steps);
      const SequenceCounts shuffles = oracle::shuffle_sequence_counts(c.b, c.n, c.p, c.steps, construction);
      ok = carries == shuffles && oracle::same_law(carries, oracle::chain_law(transition_matrix(params), c.steps));
      return law_detail(carries);
    });
    if (!plus && (c.p == 1 || c.p == 2)) {
      s.add(key + " reverse chain", spec, [&](bool& ok) {
        const ProcessParams params = make_process(sign, c.b, c.n, c.p);
        const SequenceCounts carries = oracle::carries_sequence_counts(params, c.steps);
        const ShuffleConstruction reverse =
            c.p == 1 ? ShuffleConstruction::reverse_r1 : ShuffleConstruction::reverse_r2;
        ok = carries == oracle::shuffle_sequence_counts(c.b, c.n, c.p, c.steps, reverse);
        return std::string(c.p == 1 ? "R1 chain" : "R2 chain") + " matches carries";
      });
    }
  }
  if (!custom) {
    const BijectionCase mc = plus ? BijectionCase{7, 4, 3, 3} : BijectionCase{8, 3, 3, 2};
    const std::string key = "monte-carlo b=" + pad(mc.b) + " n=" + pad(mc.n) + " p=" + std::to_string(mc.p) +
                            " N=" + std::to_string(mc.steps);
    s.add(key, {}, [&](bool& ok) {
      const RationalMatrix P = transition_matrix(make_process(sign, mc.b, mc.n, mc.p));
      const double tv = oracle::total_variation(
          oracle::sampled_sequence_counts(mc.b, mc.n, mc.p, mc.steps, o.samples, o.seed, construction),
          oracle::chain_law(P, mc.steps));
      ok = tv < kTotalVariationLimit;
      std::ostringstream out;
      out << "TV = " << tv << " over " << o.samples << " samples, seed " << o.seed;
      return out.str();
    });
  }
  return s.finish();
}

SuiteReport suite_shuffle_prob(const SuiteOptions& o) {
  SuiteBuilder s("shuffle-prob", "(b,n,p) in {(3,2,1),(4,2,3),(3,3,2),(7,3,3),(5,3,2),(4,3,1)}, r in {1,2}");
  std::vector<std::tuple<int, int, int>> grid = {{3, 2, 1}, {4, 2, 3}, {3, 3, 2}, {7, 3, 3}, {5, 3, 2}, {4, 3, 1}};
  if (o.b || o.n || o.p) {
    if (!o.b || !o.n || !o.p) throw std::invalid_argument("shuffle-prob needs --b, --n and --p together");
    grid = {{*o.b, *o.n, static_cast<int>(to_long(*o.p))}};
  }
  for (const auto& [b, n, p] : grid) {
    for (int r = 1; r <= 2; ++r) {
      const std::string key = "b=" + pad(b) + " n=" + pad(n) + " p=" + std::to_string(p) + " r=" + std::to_string(r);
      s.add(key, {{}, b, n, {}, {}, {}, q(p)}, [&](bool& ok) {
        Rational total = 0;
        const bool enumerate = power_of(b, r * n) <= 1'000'000;
        std::map<std::string, long> dist;
        if (enumerate) dist = oracle::shuffle_distribution(b, n, p, r);
        const Rational scale = pow(Rational(b), static_cast<unsigned long>(r * n));
        for_each_element(n, p, [&](const ColoredPermutation& sigma) {
          const Rational prob = shuffle_probability(sigma, b, r);
          total += prob;
          if (enumerate) {
            const auto it = dist.find(to_text(sigma));
            const long count = it == dist.end() ? 0 : it->second;
            ok = ok && prob * scale == count;
          }
        });
        ok = ok && total == 1;
        return std::string("sums to 1") + (enumerate ? ", equals enumeration of all word sequences" : "");
      });
    }
  }
  if (!o.b && !o.n && !o.p) {
    s.add("worked example b=07 n=07 p=3", {}, [&](bool& ok) {
      const ColoredPermutation sigma = parse_colored_permutation("(6,2)(5,1)(2,1)(3,2)(1,0)(7,0)(4,0)", 3);
      ok = gsr_to_permutation(DigitWord(7, {5, 4, 1, 2, 0, 6, 3}), 3) == sigma &&
           descent_count(inverse(sigma)) == 2 && oracle::gsr_preimage_count(sigma, 7) == 1 &&
           shuffle_probability(sigma, 7, 1) == Rational(1) / pow(Rational(7), 7);
      return std::string("unique generating word, probability 7^-7");
    });
  }
  return s.finish();
}

SuiteReport suite_gessel(const SuiteOptions& o) {
  const int cutoff = o.cutoff.value_or(3);
  SuiteBuilder s("gessel", "1 <= n <= 3, 1 <= p <= 2, every attained d, cutoff " + std::to_string(cutoff));
  const std::optional<int> p_fixed = o.p ? std::optional<int>(static_cast<int>(to_long(*o.p))) : std::nullopt;
  for (int n : range(o.n, 1, 3)) {
    for (int p : range(p_fixed, 1, 2)) {
      const std::vector<long> table = oracle::descent_table(n, p, DescentVariant::standard);
      for (int d = 0; d <= n; ++d) {
        if ((o.d && *o.d != d) || table[d] == 0) continue;
        const std::string key = "n=" + pad(n) + " p=" + std::to_string(p) + " d=" + std::to_string(d);
        s.add_check(key, {{}, {}, n, d, {}, cutoff, q(p)},
                    [&] { return gessel_identity_check(gessel_coefficients(n, p, d), cutoff); });
      }
    }
  }
  return s.finish();
}

// ---------------------------------------------------------------- golden

RationalMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows) {
  RationalMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = parse_rational(rows[i][j]);
  }
  return m;
}

// Rows written highest place first, e.g. "354" for (3,5,4)_b.
MultiDigitWord from_rows(Digit base, const std::vector<std::string>& rows) {
  const int places = static_cast<int>(rows.front().size());
  std::vector<std::vector<Digit>> columns(static_cast<std::size_t>(places), std::vector<Digit>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < places; ++j) columns[j][i] = rows[i][places - 1 - j] - '0';
  }
  return {base, std::move(columns)};
}

std::vector<DigitWord> words_of(Digit base, const std::vector<std::vector<Digit>>& words) {
  std::vector<DigitWord> out;
  for (const auto& w : words) out.emplace_back(base, w);
  return out;
}

std::vector<ColoredPermutation> perms_of(int p, const std::vector<std::string>& texts) {
  std::vector<ColoredPermutation> out;
  for (const auto& t : texts) out.push_back(parse_colored_permutation(t, p));
  return out;
}

SuiteReport suite_golden(const SuiteOptions&) {
  SuiteBuilder s("examples-golden", "worked examples: scaled R matrices at n = 3, shuffle pipelines, tables");

  const std::vector<std::pair<Rational, std::vector<std::vector<std::string>>>> scaled_r = {
      {q(1), {{"1", "3", "2"}, {"1", "0", "-1"}, {"1", "-3", "2"}}},
      {q(2), {{"1", "9", "23", "15"}, {"1", "3", "-1", "-3"}, {"1", "-3", "-1", "3"}, {"1", "-9", "23", "-15"}}},
      {q(3), {{"1", "15", "66", "80"}, {"1", "6", "3", "-10"}, {"1", "-3", "-6", "8"}, {"1", "-12", "39", "-28"}}},
      {q(3, 2),
       {{"1", "6", "39/4", "7/2"}, {"1", "3/2", "-3/2", "-1"}, {"1", "-3", "3/4", "5/4"}, {"1", "-15/2", "33/2", "-10"}}},
  };
  for (const auto& [p, rows] : scaled_r) {
    s.add("scaled R n=03 p=" + to_string(p), {}, [&](bool& ok) {
      const int dim = p == 1 ? 3 : 4;
      const Rational scale = Rational(factorial(3)) * pow(p, 3);
      ok = right_eigen_matrix(3, p, dim).scaled(scale) == parse_matrix(rows);
      return std::string("3! p^3 R entry for entry");
    });
  }
  s.add("scaled R n=03 duality 3/2 to 3", {}, [&](bool& ok) {
    const RationalMatrix r3 = right_eigen_matrix(3, 3, 4).scaled(Rational(factorial(3)) * 27);
    const RationalMatrix r32 = right_eigen_matrix(3, q(3, 2), 4).scaled(Rational(factorial(3)) * pow(q(3, 2), 3));
    const RationalMatrix r2 = right_eigen_matrix(3, 2, 4).scaled(Rational(factorial(3)) * 8);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        ok = ok && r3(i, j) == pow(Rational(-2), j) * r32(3 - i, j);
        ok = ok && r2(i, j) == (j % 2 == 0 ? 1 : -1) * r2(3 - i, j);
      }
    }
    return std::string("columns of the p = 3/2 matrix scaled by (-2)^j and turned over; p = 2 columns symmetric");
  });
  s.add("transition examples", {}, [&](bool& ok) {
    const RationalMatrix a = transition_matrix(make_process(Sign::plus, 2, 2, 1));
    const RationalMatrix b = transition_matrix(make_process(Sign::plus, 3, 1, 2));
    ok = a == parse_matrix({{"3/4", "1/4"}, {"1/4", "3/4"}}) && b == parse_matrix({{"2/3", "1/3"}, {"1/3", "2/3"}});
    const std::vector<Rational> pi = stationary_distribution(make_process(Sign::minus, 8, 3, 3));
    ok = ok && pi == std::vector<Rational>{q(1, 162), q(10, 27), q(31, 54), q(4, 81)};
    return std::string("(+,2,2,1), (+,3,1,2), stationary law of (-,8,3,3)");
  });
  s.add("gsr examples", {}, [&](bool& ok) {
    ok = gsr_to_permutation(DigitWord(7, {4, 1, 6, 3, 0, 5, 0, 2}), 3) ==
             parse_colored_permutation("(6,1)(3,1)(8,0)(5,0)(1,0)(7,2)(2,0)(4,2)", 3) &&
         gsr_to_permutation(DigitWord(3, {2, 1, 0, 1, 0, 1}), 2) ==
             parse_colored_permutation("(6,0)(3,1)(1,0)(4,1)(2,0)(5,1)", 2);
    const std::vector<DigitWord> starred = star_map({DigitWord(4, {1, 3, 2, 0, 1, 2}), DigitWord(7, {5, 0, 3, 4, 6, 3})});
    ok = ok && starred[1].digits == std::vector<Digit>{0, 3, 4, 5, 3, 6};
    ok = ok && f_map(186, 343, 3) == 215;
    ok = ok && inverse(parse_colored_permutation("(6,2)(5,1)(2,1)(3,2)(1,0)(7,0)(4,0)", 3)) ==
                   parse_colored_permutation("(5,0)(3,2)(4,1)(7,0)(2,2)(1,1)(6,0)", 3);
    return std::string("labels to permutations, star map, f, inverse");
  });

  s.add("plus pipeline b=07 n=04 p=3 N=3", {}, [&](bool& ok) {
    const MultiDigitWord x = from_rows(7, {"354", "025", "446", "032"});
    const MultiDigitWord bar = bar_map(x);
    ok = bar == from_rows(7, {"354", "412", "161", "223"});
    std::vector<Digit> f_values = bar.row_values();
    for (Digit& v : f_values) v = f_map(v, 343, 3);
    ok = ok && MultiDigitWord::from_row_values(7, 3, f_values) == from_rows(7, {"425", "536", "543", "002"});
    const ShuffleTrace t = bijection_plus(x, 3);
    ok = ok && t.words == words_of(7, {{5, 6, 3, 2}, {0, 4, 2, 3}, {0, 4, 5, 5}});
    ok = ok && gsr_to_permutation(t.words[0], 3) == parse_colored_permutation("(3,2)(4,0)(2,0)(1,2)", 3);
    ok = ok && gsr_to_permutation(t.words[1], 3) == parse_colored_permutation("(1,0)(4,1)(2,2)(3,0)", 3);
    ok = ok && gsr_to_permutation(t.words[2], 3) == parse_colored_permutation("(1,0)(2,1)(3,2)(4,2)", 3);
    ok = ok && t.elements == perms_of(3, {"(3,2)(4,0)(2,0)(1,2)", "(2,1)(3,0)(4,1)(1,2)", "(2,2)(3,2)(4,0)(1,2)"});
    ok = ok && t.descents == std::vector<int>{3, 3, 2} && carries_of(x, Sign::plus, 3) == std::vector<long>{3, 3, 2};
    return std::string("bar, f, unstar, labels, composition; d = (3,3,2) = kappa");
  });

  s.add("minus pipeline b=08 n=04 p=3 N=4", {}, [&](bool& ok) {
    const MultiDigitWord x = from_rows(8, {"0474", "1253", "2541", "0362"});
    const MultiDigitWord reversed = reverse_even_places(x);
    ok = reversed == from_rows(8, {"7404", "6223", "5531", "7312"});
    const MultiDigitWord bar = bar_map(reversed);
    ok = ok && bar == from_rows(8, {"7404", "5627", "3360", "2672"});
    std::vector<Digit> f_values = bar.row_values();
    for (Digit& v : f_values) v = f_map(v, 4096, 3);
    ok = ok && MultiDigitWord::from_row_values(8, 4, f_values) == from_rows(8, {"6414", "1305", "2320", "0456"});
    const ShuffleTrace t = bijection_minus(x, 3);
    ok = ok && t.words == words_of(8, {{4, 5, 0, 6}, {2, 1, 0, 5}, {3, 4, 3, 4}, {1, 2, 6, 0}});
    const std::vector<ColoredPermutation> labels =
        perms_of(3, {"(2,1)(3,2)(1,0)(4,0)", "(3,2)(2,1)(1,0)(4,2)", "(1,0)(3,1)(2,0)(4,1)", "(2,1)(3,2)(4,0)(1,0)"});
    for (int r = 0; r < 4; ++r) ok = ok && gsr_to_permutation(t.words[r], 3) == labels[r];
    ok = ok && reverse_map(labels[1], ReverseVariant::prime) == parse_colored_permutation("(3,1)(2,2)(1,0)(4,1)", 3);
    ok = ok && reverse_map(labels[3], ReverseVariant::prime) == parse_colored_permutation("(2,2)(3,1)(4,0)(1,0)", 3);
    ok = ok && t.elements == perms_of(3, {"(2,1)(3,2)(1,0)(4,0)", "(2,0)(1,2)(3,1)(4,1)", "(3,1)(1,2)(2,1)(4,2)",
                                          "(4,1)(2,1)(3,2)(1,2)"});
    ok = ok && dash_descent_count(t.elements[0]) == 1 && descent_count(t.elements[1]) == 1 &&
         dash_descent_count(t.elements[2]) == 2 && descent_count(t.elements[3]) == 4;
    ok = ok && t.descents == std::vector<int>{3, 1, 2, 4} &&
         carries_of(x, Sign::minus, 3) == std::vector<long>{3, 1, 2, 4};
    return std::string("reverse, bar, f, unstar, labels, primes, composition; (d',d,d',d) = (1,1,2,4)");
  });
  return s.finish();
}

using SuiteFn = std::function<SuiteReport(const SuiteOptions&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites = {
      {"transition", suite_transition},
      {"carry-sets", suite_carry_sets},
      {"eigen", suite_eigen},
      {"duality", suite_duality},
      {"symmetry", suite_symmetry},
      {"sf-numbers", suite_sf_numbers},
      {"descent-stats", suite_descent_stats},
      {"moments", suite_moments},
      {"shuffle-onestep", suite_shuffle_onestep},
      {"bijection-plus", [](const SuiteOptions& o) { return suite_bijection(o, Sign::plus); }},
      {"bijection-minus", [](const SuiteOptions& o) { return suite_bijection(o, Sign::minus); }},
      {"shuffle-prob", suite_shuffle_prob},
      {"gessel", suite_gessel},
      {"examples-golden", suite_golden},
  };
  return suites;
}

}  // namespace

bool SuiteReport::passed() const { return !cases.empty() && failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.passed; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  const auto it = registry().find(std::string(name));
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  return it->second(options);
}

Json suite_json(const SuiteReport& report) {
  Json j;
  j["suite"] = report.suite;
  j["grid"] = report.grid;
  j["passed"] = report.passed();
  j["cases"] = report.cases.size();
  j["failures"] = report.failures();
  Json cases = Json::array();
  for (const CaseResult& c : report.cases) {
    Json e;
    e["key"] = c.key;
    e["passed"] = c.passed;
    e["detail"] = c.detail;
    if (!c.passed) e["reproduce"] = c.reproduce;
    cases.push_back(std::move(e));
  }
  j["results"] = std::move(cases);
  return j;
}

}  // namespace carries
