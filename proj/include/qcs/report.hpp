#pragma once

// JSON and CSV encodings of the report types. CSV is RFC 4180 style with a
// header row; doubles use the shortest round-trip representation so equal
// values always print identically.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qcs/charsums.hpp"
#include "qcs/gcdsum.hpp"
#include "qcs/meanvalues.hpp"
#include "qcs/resonance.hpp"
#include "qcs/theorems.hpp"

namespace qcs {

std::string format_number(double value);
std::string format_number(std::int64_t value);

// Rows of a CSV table; the first row is the header.
using CsvTable = std::vector<std::vector<std::string>>;
std::string render_csv(const CsvTable& table);

nlohmann::ordered_json to_json(const MaxSearchResult& result);
CsvTable to_csv(const std::vector<MaxSearchResult>& results, bool with_abs);

nlohmann::ordered_json to_json(const MeanValueReport& report);
CsvTable to_csv(const std::vector<MeanValueReport>& reports);

// {variant, X, x, params{...}, M1, M2, ratio, observed_max, squared, holds,
//  scanned, theorem, predicted_shape}
nlohmann::ordered_json to_json(const TheoremReport& report);
// variant,X,x,M1,M2,ratio,observed_max,holds
CsvTable to_csv(const std::vector<RatioReport>& reports);

struct GcdSumReport {
  std::int64_t N;
  std::int64_t y_M;
  int prime_count;  // 0 for a user-supplied set
  double gcd_sum;
  double reference;  // NaN for N < 16
};

nlohmann::ordered_json to_json(const GcdSumReport& report);
CsvTable to_csv(const std::vector<GcdSumReport>& reports);

}  // namespace qcs
