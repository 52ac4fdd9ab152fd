#pragma once

#include "carries/colored_perm.hpp"
#include "carries/matrix.hpp"
#include "carries/moments.hpp"
#include "carries/params.hpp"
#include "carries/shuffle.hpp"
#include "carries/spectral.hpp"

#include <json.hpp>

#include <string>

namespace carries {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// How rationals are rendered: "num/den" strings, or decimals with `digits`
/// places when `as_float` is set.
struct NumberFormat {
  bool as_float = false;
  int digits = 12;
};

std::string render(const Rational& x, const NumberFormat& fmt = {});

Json params_json(const ProcessParams& params);
Json matrix_json(const RationalMatrix& m, const NumberFormat& fmt = {});
Json vector_json(const std::vector<Rational>& v, const NumberFormat& fmt = {});
Json eigen_json(const EigenSystem& sys, const NumberFormat& fmt = {});
Json moments_json(const MomentReport& report, const NumberFormat& fmt = {});
Json carries_trace_json(const CarriesTrace& trace);
Json permutation_json(const ColoredPermutation& sigma);
Json shuffle_trace_json(const ShuffleTrace& trace, const std::vector<long>& kappas = {});
Json check_json(const CheckReport& report);

/// Adds the top-level "schema" field.
Json with_schema(Json body);

/// "dim,N" header line followed by one CSV row per matrix row.
std::string matrix_csv(const RationalMatrix& m, const NumberFormat& fmt = {});
/// One "key,value" line per entry.
std::string rows_csv(const std::vector<std::pair<std::string, std::string>>& rows);

}  // namespace carries
