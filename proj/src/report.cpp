#include "qcs/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <variant>

namespace qcs {

namespace {

nlohmann::ordered_json number_or_null(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

std::string quote_csv(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return {buffer.data(), end};
}

std::string format_number(std::int64_t value) { return std::to_string(value); }

std::string render_csv(const CsvTable& table) {
  std::string out;
  for (const auto& row : table) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += quote_csv(row[i]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json to_json(const MaxSearchResult& result) {
  nlohmann::ordered_json j;
  j["X_lo"] = result.window.lo;
  j["X_hi"] = result.window.hi;
  j["x"] = result.x;
  j["d_star"] = result.argmax_d.value();
  j["S_star"] = result.max_value;
  j["scanned"] = result.count_scanned;
  if (result.argmax_abs_d) {
    j["d_star_abs"] = result.argmax_abs_d->value();
    j["S_star_abs"] = *result.max_abs_value;
  }
  return j;
}

CsvTable to_csv(const std::vector<MaxSearchResult>& results, bool with_abs) {
  CsvTable table{{"X_lo", "X_hi", "x", "d_star", "S_star", "scanned"}};
  if (with_abs) {
    table[0].push_back("d_star_abs");
    table[0].push_back("S_star_abs");
  }
  for (const auto& r : results) {
    std::vector<std::string> row{format_number(r.window.lo), format_number(r.window.hi),
                                 format_number(r.x),         format_number(r.argmax_d.value()),
                                 format_number(r.max_value), format_number(r.count_scanned)};
    if (with_abs) {
      row.push_back(r.argmax_abs_d ? format_number(r.argmax_abs_d->value()) : "");
      row.push_back(r.max_abs_value ? format_number(*r.max_abs_value) : "");
    }
    table.push_back(std::move(row));
  }
  return table;
}

nlohmann::ordered_json to_json(const MeanValueReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["X"] = report.X;
  j["exact_sum"] = report.exact_sum;
  j["main_term"] = report.main_term;
  j["residual"] = report.residual;
  j["uncond_envelope"] = number_or_null(report.unconditional_envelope);
  j["grh_envelope"] = number_or_null(report.grh_envelope);
  return j;
}

CsvTable to_csv(const std::vector<MeanValueReport>& reports) {
  CsvTable table{{"n", "X", "exact_sum", "main_term", "residual", "uncond_envelope",
                  "grh_envelope"}};
  for (const auto& r : reports) {
    table.push_back({format_number(r.n), format_number(r.X), format_number(r.exact_sum),
                     format_number(r.main_term), format_number(r.residual),
                     format_number(r.unconditional_envelope), format_number(r.grh_envelope)});
  }
  return table;
}

namespace {

nlohmann::ordered_json spec_params(const ResonatorSpec& spec) {
  nlohmann::ordered_json p;
  p["alpha"] = spec.alpha;
  p["delta"] = spec.delta;
  std::visit(
      [&](const auto& data) {
        using T = std::decay_t<decltype(data)>;
        if constexpr (std::is_same_v<T, ShortResonator>) {
          p["y"] = data.y;
          p["primes"] = data.primes;
          p["a_p"] = data.coefficients;
        } else if constexpr (std::is_same_v<T, MediumResonator>) {
          p["y"] = data.y;
          p["lambda"] = number_or_null(data.lambda);
          p["window_lower"] = data.lower == WindowLower::Lambda ? "lambda" : "lambda^2";
          p["primes"] = data.primes;
          p["support_size"] = data.support.size();
        } else {
          p["N"] = data.N;
          p["y_M"] = data.set.smoothness();
        }
      },
      spec.data);
  return p;
}

}  // namespace

nlohmann::ordered_json to_json(const TheoremReport& report) {
  const auto& r = report.ratio_report;
  nlohmann::ordered_json j;
  j["variant"] = std::string(to_string(r.spec.variant));
  j["X"] = r.spec.X;
  j["x"] = r.x;
  j["params"] = spec_params(r.spec);
  if (const auto* m = std::get_if<MediumResonator>(&r.spec.data)) {
    j["params"]["diagonal_shape"] = number_or_null(medium_diagonal_shape(m->y, r.spec.x));
  }
  j["M1"] = r.M1;
  j["M2"] = r.M2;
  j["ratio"] = r.ratio;
  j["observed_max"] = r.observed_max;
  j["squared"] = r.squared;
  j["holds"] = r.inequality_holds;
  j["scanned"] = r.discriminants_scanned;
  j["theorem"] = std::string(report.theorem);
  j["predicted_shape"] = number_or_null(report.predicted_shape);
  return j;
}

CsvTable to_csv(const std::vector<RatioReport>& reports) {
  CsvTable table{{"variant", "X", "x", "M1", "M2", "ratio", "observed_max", "holds"}};
  for (const auto& r : reports) {
    table.push_back({std::string(to_string(r.spec.variant)), format_number(r.spec.X),
                     format_number(r.x), format_number(r.M1), format_number(r.M2),
                     format_number(r.ratio), format_number(r.observed_max),
                     r.inequality_holds ? "true" : "false"});
  }
  return table;
}

nlohmann::ordered_json to_json(const GcdSumReport& report) {
  nlohmann::ordered_json j;
  j["N"] = report.N;
  j["y_M"] = report.y_M;
  j["k"] = report.prime_count;
  j["gcd_sum"] = report.gcd_sum;
  j["reference"] = number_or_null(report.reference);
  return j;
}

CsvTable to_csv(const std::vector<GcdSumReport>& reports) {
  CsvTable table{{"N", "y_M", "k", "gcd_sum", "reference"}};
  for (const auto& r : reports) {
    table.push_back({format_number(r.N), format_number(r.y_M),
                     format_number(static_cast<std::int64_t>(r.prime_count)),
                     format_number(r.gcd_sum), format_number(r.reference)});
  }
  return table;
}

}  // namespace qcs
