#include "carries/moments.hpp"
#include "carries/oracles.hpp"
#include "carries/serialize.hpp"
#include "carries/shuffle.hpp"
#include "carries/spectral.hpp"
#include "carries/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

using namespace carries;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;

struct GlobalFlags {
  std::string format = "json";
  std::uint64_t seed = Rng::kDefaultSeed;
  std::string out;
  bool as_float = false;
  int digits = 12;

  NumberFormat number_format() const { return {as_float, digits}; }
};

struct ProcessFlags {
  std::string sign = "+";
  int b = 0;
  int n = 0;
  std::optional<std::string> p;
  std::optional<int> d;

  ProcessParams params() const {
    if (b == 0 || n == 0) throw std::invalid_argument("--b and --n are required");
    if (p && d) throw std::invalid_argument("give either --p or --d, not both");
    if (d) return ProcessParams::from_digit_set(parse_sign(sign), b, *d, n);
    return make_process(parse_sign(sign), b, n, parse_rational(p.value_or("1")));
  }
};

void add_process_flags(CLI::App* cmd, ProcessFlags& f) {
  cmd->add_option("--sign", f.sign, "Base sign, + or -")->check(CLI::IsMember({"+", "-"}));
  cmd->add_option("--b", f.b, "Base b >= 2")->required();
  cmd->add_option("--n", f.n, "Number of summands n >= 1")->required();
  cmd->add_option("--p", f.p, "Process parameter p as NUM or NUM/DEN");
  cmd->add_option("--d", f.d, "Digit offset d in [1-b, 0]; derives p");
}

void emit(const GlobalFlags& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(g.out);
  if (!file) throw std::invalid_argument("cannot open " + g.out);
  file << text;
}

void emit_json(const GlobalFlags& g, Json body) { emit(g, with_schema(std::move(body)).dump(2) + "\n"); }

int cmd_matrix(const GlobalFlags& g, const ProcessFlags& f) {
  const ProcessParams params = f.params();
  const RationalMatrix P = transition_matrix(params);
  if (g.format == "csv") {
    emit(g, matrix_csv(P, g.number_format()));
  } else {
    emit_json(g, {{"params", params_json(params)}, {"matrix", matrix_json(P, g.number_format())}});
  }
  return 0;
}

int cmd_eigen(const GlobalFlags& g, const ProcessFlags& f, bool check) {
  const ProcessParams params = f.params();
  const EigenSystem sys = eigen_system(params);  // throws ConsistencyError on failure
  if (check) {
    emit(g, "R·L=I: ok, P=RDL: ok\n");
    return 0;
  }
  const std::vector<Rational> pi = stationary_distribution(params);
  if (g.format == "csv") {
    std::string out = "L\n" + matrix_csv(sys.left, g.number_format()) + "R\n" + matrix_csv(sys.right, g.number_format());
    std::vector<std::pair<std::string, std::string>> rows;
    for (std::size_t k = 0; k < pi.size(); ++k) {
      rows.emplace_back("lambda_" + std::to_string(k), render(sys.eigenvalues[k], g.number_format()));
    }
    for (std::size_t k = 0; k < pi.size(); ++k) rows.emplace_back("pi_" + std::to_string(k), render(pi[k], g.number_format()));
    emit(g, out + rows_csv(rows));
  } else {
    Json body = eigen_json(sys, g.number_format());
    body["stationary"] = vector_json(pi, g.number_format());
    emit_json(g, {{"params", params_json(params)}, {"eigen", std::move(body)}});
  }
  return 0;
}

int cmd_moments(const GlobalFlags& g, const ProcessFlags& f, int r, int s, std::optional<long> i, bool stationary) {
  const ProcessParams params = f.params();
  if (stationary && i) throw std::invalid_argument("--stationary and --i are exclusive");
  if (!stationary && !i) i = 0;
  const MomentReport report = moments_closed_form(params, r, s, stationary ? std::nullopt : i);
  if (g.format == "csv") {
    emit(g, rows_csv({{"mean", render(report.mean, g.number_format())},
                      {"variance", render(report.variance, g.number_format())},
                      {"covariance", render(report.covariance, g.number_format())}}));
  } else {
    emit_json(g, moments_json(report, g.number_format()));
  }
  return 0;
}

int cmd_simulate(const GlobalFlags& g, const ProcessFlags& f, int steps, long samples) {
  const ProcessParams params = f.params();
  if (steps < 1) throw std::invalid_argument("--N must be at least 1");
  if (samples <= 1) {
    const CarriesTrace trace = simulate_trace(params, steps, g.seed);
    if (g.format == "csv") {
      std::vector<std::pair<std::string, std::string>> rows;
      for (std::size_t k = 0; k < trace.kappas.size(); ++k) {
        rows.emplace_back("kappa_" + std::to_string(k), std::to_string(trace.kappas[k]));
      }
      emit(g, rows_csv(rows));
    } else {
      Json body = carries_trace_json(trace);
      body["seed"] = g.seed;
      emit_json(g, std::move(body));
    }
    return 0;
  }
  // Empirical law of kappa_N against row 0 of P^N.
  Rng rng(g.seed);
  std::map<long, long> counts;
  for (long k = 0; k < samples; ++k) ++counts[simulate_trace(params, steps, rng).kappas.back()];
  const RationalMatrix PN = transition_matrix(params).power(steps);
  std::vector<std::pair<std::string, std::string>> rows;
  Json states = Json::array();
  for (int j = 0; j < params.state_count(); ++j) {
    const double freq = static_cast<double>(counts[j]) / static_cast<double>(samples);
    rows.emplace_back("state_" + std::to_string(j), std::to_string(freq) + "," + render(PN(0, j), g.number_format()));
    states.push_back({{"state", j}, {"frequency", freq}, {"exact", render(PN(0, j), g.number_format())}});
  }
  if (g.format == "csv") {
    emit(g, rows_csv(rows));
  } else {
    emit_json(g, {{"params", params_json(params)}, {"N", steps}, {"samples", samples}, {"seed", g.seed},
                  {"law", std::move(states)}});
  }
  return 0;
}

int cmd_shuffle(const GlobalFlags& g, const ProcessFlags& f, int steps, const std::string& construction) {
  const ProcessParams params = f.params();
  if (steps < 1) throw std::invalid_argument("--N must be at least 1");
  if (params.p().get_den() != 1) throw std::invalid_argument("shuffles need an integer p");
  const int p = static_cast<int>(params.p().get_num().get_si());
  ShuffleTrace trace;
  std::vector<long> kappas;
  if (construction == "r1" || construction == "r2") {
    trace = sample_sequence(params.base(), params.summands(), p, steps, g.seed,
                            construction == "r1" ? ShuffleConstruction::reverse_r1 : ShuffleConstruction::reverse_r2);
  } else {
    // Draw summands and push them through the carries-to-shuffles bijection.
    const CarriesTrace carries = simulate_trace(params, steps, g.seed);
    std::vector<std::vector<Digit>> columns;
    for (const DigitWord& w : carries.columns) columns.push_back(w.digits);
    const MultiDigitWord summands(params.base(), std::move(columns));
    trace = params.sign() == Sign::plus ? bijection_plus(summands, p) : bijection_minus(summands, p);
    kappas = carries_of(summands, params.sign(), params.p());
  }
  if (g.format == "csv") {
    std::vector<std::pair<std::string, std::string>> rows;
    for (std::size_t r = 0; r < trace.elements.size(); ++r) {
      rows.emplace_back("sigma_" + std::to_string(r + 1), to_text(trace.elements[r]));
      rows.emplace_back("statistic_" + std::to_string(r + 1), std::to_string(trace.descents[r]));
      if (!kappas.empty()) rows.emplace_back("kappa_" + std::to_string(r + 1), std::to_string(kappas[r]));
    }
    emit(g, rows_csv(rows));
  } else {
    Json body = shuffle_trace_json(trace, kappas);
    body["seed"] = g.seed;
    emit_json(g, std::move(body));
  }
  return 0;
}

int cmd_digits(const GlobalFlags& g, const std::string& sign, int b, int d, const std::string& x) {
  const Integer value(x);
  const std::vector<long> digits = digit_expansion(value, parse_sign(sign), b, d);
  if (evaluate_expansion(digits, parse_sign(sign), b) != value) throw ConsistencyError("expansion does not evaluate back");
  if (g.format == "csv") {
    std::vector<std::pair<std::string, std::string>> rows;
    for (std::size_t k = 0; k < digits.size(); ++k) rows.emplace_back("a_" + std::to_string(k), std::to_string(digits[k]));
    emit(g, rows_csv(rows));
  } else {
    emit_json(g, {{"x", x}, {"sign", sign}, {"b", b}, {"d", d}, {"digits", digits}});
  }
  return 0;
}

int cmd_verify(const GlobalFlags& g, const std::string& suite, SuiteOptions options) {
  options.seed = g.seed;
  const auto start = std::chrono::steady_clock::now();
  const SuiteReport report = run_suite(suite, options);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << report.suite << ": " << report.cases.size() << " cases, " << report.failures() << " failed, "
            << seconds << " s\n";
  if (g.format == "csv") {
    std::string out = "key,passed,detail\n";
    for (const CaseResult& c : report.cases) {
      out += "\"" + c.key + "\"," + (c.passed ? "true" : "false") + ",\"" + c.detail + "\"\n";
    }
    emit(g, out);
  } else {
    emit_json(g, suite_json(report));
  }
  for (const CaseResult& c : report.cases) {
    if (!c.passed) std::cerr << "FAIL " << c.key << ": " << c.detail << "\n  reproduce: " << c.reproduce << "\n";
  }
  return report.passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Carries processes, colored shuffles and their verification suites"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", g.seed, "Random seed (unsigned 64-bit)");
  app.add_option("--out", g.out, "Write output to PATH instead of stdout");
  app.add_flag("--float", g.as_float, "Render rationals as decimals");
  app.add_option("--digits", g.digits, "Decimal places with --float")->check(CLI::Range(1, 60));

  ProcessFlags pf;
  int steps = 1;
  int r = 1;
  int s = 0;
  std::optional<long> start;
  long samples = 1;
  bool check = false;
  bool stationary = false;
  std::string construction = "bijection";

  auto* matrix = app.add_subcommand("matrix", "Transition matrix of a carries process");
  add_process_flags(matrix, pf);

  auto* eigen = app.add_subcommand("eigen", "Eigenvalues, L, R and stationary law");
  add_process_flags(eigen, pf);
  eigen->add_flag("--check", check, "Only verify R L = I and P = R D L");

  auto* moments = app.add_subcommand("moments", "Mean, variance and covariance of carries");
  add_process_flags(moments, pf);
  moments->add_option("--r", r, "Step r")->check(CLI::NonNegativeNumber);
  moments->add_option("--s", s, "Lag s for the covariance")->check(CLI::NonNegativeNumber);
  moments->add_option("--i", start, "Starting carry");
  moments->add_flag("--stationary", stationary, "Start from the stationary law");

  auto* simulate = app.add_subcommand("simulate", "Sample the carries chain by adding random numbers");
  add_process_flags(simulate, pf);
  simulate->add_option("--N", steps, "Number of places");
  simulate->add_option("--samples", samples, "Sample count; above 1 reports the law of kappa_N");

  auto* shuffle = app.add_subcommand("shuffle", "Trace colored shuffles matching random carries");
  add_process_flags(shuffle, pf);
  shuffle->add_option("--N", steps, "Number of shuffles");
  shuffle->add_option("--construction", construction, "bijection, r1 or r2")
      ->check(CLI::IsMember({"bijection", "r1", "r2"}));

  std::string x;
  int digit_base = 0;
  int offset = 0;
  std::string digit_sign = "+";
  auto* digits = app.add_subcommand("digits", "Expansion of an integer in base +-b with digits D_d");
  digits->add_option("--x", x, "Integer to expand")->required();
  digits->add_option("--sign", digit_sign, "Base sign")->check(CLI::IsMember({"+", "-"}));
  digits->add_option("--b", digit_base, "Base b")->required();
  digits->add_option("--d", offset, "Digit offset d");

  std::string suite;
  SuiteOptions vo;
  std::optional<std::string> vsign, vp;
  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--sign", vsign, "Restrict to one sign")->check(CLI::IsMember({"+", "-"}));
  verify->add_option("--b", vo.b, "Restrict to one base");
  verify->add_option("--n", vo.n, "Restrict to one n");
  verify->add_option("--p", vp, "Restrict to one p");
  verify->add_option("--d", vo.d, "Restrict to one digit offset or descent count");
  verify->add_option("--N", vo.steps, "Number of steps");
  verify->add_option("--cutoff", vo.cutoff, "Coefficient cutoff");
  verify->add_option("--samples", vo.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (*matrix) return cmd_matrix(g, pf);
    if (*eigen) return cmd_eigen(g, pf, check);
    if (*moments) return cmd_moments(g, pf, r, s, start, stationary);
    if (*simulate) return cmd_simulate(g, pf, steps, samples);
    if (*shuffle) return cmd_shuffle(g, pf, steps, construction);
    if (*digits) return cmd_digits(g, digit_sign, digit_base, offset, x);
    if (*verify) {
      if (vsign) vo.sign = parse_sign(*vsign);
      if (vp) vo.p = parse_rational(*vp);
      return cmd_verify(g, suite, vo);
    }
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
