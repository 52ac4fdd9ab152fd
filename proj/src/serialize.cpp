#include "carries/serialize.hpp"

namespace carries {

std::string render(const Rational& x, const NumberFormat& fmt) {
  return fmt.as_float ? to_decimal(x, fmt.digits) : to_string(x);
}

Json params_json(const ProcessParams& params) {
  Json j;
  j["sign"] = std::string(1, sign_char(params.sign()));
  j["b"] = params.base();
  j["n"] = params.summands();
  j["p"] = to_string(params.p());
  if (params.digit_offset()) j["d"] = *params.digit_offset();
  j["states"] = params.state_count();
  return j;
}

Json matrix_json(const RationalMatrix& m, const NumberFormat& fmt) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (const Rational& x : m.row(i)) row.push_back(render(x, fmt));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_json(const std::vector<Rational>& v, const NumberFormat& fmt) {
  Json out = Json::array();
  for (const Rational& x : v) out.push_back(render(x, fmt));
  return out;
}

Json eigen_json(const EigenSystem& sys, const NumberFormat& fmt) {
  Json j;
  j["eigenvalues"] = vector_json(sys.eigenvalues, fmt);
  j["L"] = matrix_json(sys.left, fmt);
  j["R"] = matrix_json(sys.right, fmt);
  return j;
}

Json moments_json(const MomentReport& report, const NumberFormat& fmt) {
  Json j;
  j["params"] = params_json(report.params);
  j["r"] = report.r;
  j["s"] = report.s;
  if (report.start) {
    j["start"] = *report.start;
  } else {
    j["start"] = "stationary";
  }
  j["mean"] = render(report.mean, fmt);
  j["variance"] = render(report.variance, fmt);
  j["covariance"] = render(report.covariance, fmt);
  return j;
}

Json carries_trace_json(const CarriesTrace& trace) {
  Json j;
  j["params"] = params_json(trace.params);
  j["kappas"] = trace.kappas;
  j["remainders"] = trace.remainders;
  Json columns = Json::array();
  for (const DigitWord& w : trace.columns) columns.push_back(w.digits);
  j["columns"] = std::move(columns);
  return j;
}

Json permutation_json(const ColoredPermutation& sigma) {
  Json pairs = Json::array();
  for (int i = 1; i <= sigma.size(); ++i) pairs.push_back(Json::array({sigma.image(i), sigma.color(i)}));
  return pairs;
}

Json shuffle_trace_json(const ShuffleTrace& trace, const std::vector<long>& kappas) {
  static const char* const kNames[] = {"plus", "minus", "R1", "R2"};
  Json j;
  j["b"] = trace.base;
  j["n"] = trace.size;
  j["p"] = trace.colors;
  j["construction"] = kNames[static_cast<int>(trace.construction)];
  Json words = Json::array();
  for (const DigitWord& w : trace.words) words.push_back(w.digits);
  j["words"] = std::move(words);
  Json perms = Json::array();
  for (const ColoredPermutation& s : trace.elements) perms.push_back(permutation_json(s));
  j["permutations"] = std::move(perms);
  j["descents"] = trace.descents;
  if (!kappas.empty()) j["kappas"] = kappas;
  return j;
}

Json check_json(const CheckReport& report) {
  Json j;
  j["name"] = report.name;
  j["checked"] = report.checked;
  j["failures"] = report.failures();
  j["holds"] = report.holds();
  if (!report.mismatches.empty()) j["mismatches"] = report.mismatches;
  return j;
}

Json with_schema(Json body) {
  Json out;
  out["schema"] = kSchemaVersion;
  for (auto& [key, value] : body.items()) out[key] = std::move(value);
  return out;
}

std::string matrix_csv(const RationalMatrix& m, const NumberFormat& fmt) {
  std::string out = "dim," + std::to_string(m.dim()) + "\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j > 0) out += ',';
      out += render(m(i, j), fmt);
    }
    out += '\n';
  }
  return out;
}

std::string rows_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::string out = "key,value\n";
  for (const auto& [k, v] : rows) out += k + "," + v + "\n";
  return out;
}

}  // namespace carries
