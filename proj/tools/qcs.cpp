// qcs: command-line front end for the quadratic character sum experiments.
//
//   qcs delta-max  --X 1e4 --x 50 [--abs] [--include-unit] [--json f] [--csv f]
//   qcs mean-value --n 1,4 --X 1e6 [--eps 0.05]
//   qcs resonate   --variant short|medium|long --X 1e4 --x 50 [--squared]
//   qcs gcd-sum    --N 1000 | --set-file M.txt
//   qcs psi        --x 100 --y 5
//   qcs verify     arith|charsum|meanvalue|resonance|gcd|all
//
// Exit status: 0 success, 1 I/O or other failure, 2 precondition failure,
// 3 empty discriminant window.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcs/arith.hpp"
#include "qcs/charsums.hpp"
#include "qcs/errors.hpp"
#include "qcs/gcdsum.hpp"
#include "qcs/meanvalues.hpp"
#include "qcs/report.hpp"
#include "qcs/resonance.hpp"
#include "qcs/theorems.hpp"
#include "qcs/verify.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitEmptyWindow = 3;

struct Output {
  std::string json_path;
  std::string csv_path;
  unsigned threads = 1;
  std::uint64_t seed = 0;  // reserved; every construction is deterministic
};

void add_output_options(CLI::App& cmd, Output& out) {
  cmd.add_option("--json", out.json_path, "write JSON (one object per line)");
  cmd.add_option("--csv", out.csv_path, "write CSV with a header row");
  cmd.add_option("--threads", out.threads, "worker threads")->check(CLI::PositiveNumber);
  cmd.add_option("--seed", out.seed, "reserved, unused");
}

std::int64_t as_integer(double value, const std::string& name) {
  qcs::require(std::isfinite(value) && std::floor(value) == value &&
                   std::abs(value) < 9.0e18,
               name + " must be an integer");
  return static_cast<std::int64_t>(value);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << content;
  if (!file) throw std::runtime_error("write failed for " + path);
}

void emit(const Output& out, const std::vector<nlohmann::ordered_json>& objects,
          const qcs::CsvTable& table) {
  std::string json_lines;
  for (const auto& j : objects) json_lines += j.dump() + "\n";
  if (!out.json_path.empty()) write_file(out.json_path, json_lines);
  if (!out.csv_path.empty()) write_file(out.csv_path, qcs::render_csv(table));
  if (out.json_path.empty() && out.csv_path.empty()) std::cout << json_lines;
}

int run_verify(const std::string& which, const qcs::Executor& executor) {
  std::vector<qcs::Suite> suites;
  if (which == "all") {
    suites = {qcs::Suite::Arith, qcs::Suite::Charsum, qcs::Suite::MeanValue,
              qcs::Suite::Resonance, qcs::Suite::Gcd};
  } else {
    suites = {qcs::parse_suite(which)};
  }
  int failed = 0;
  int total = 0;
  for (auto suite : suites) {
    for (const auto& check : qcs::run_suite(suite, executor)) {
      ++total;
      if (!check.passed) ++failed;
      std::cout << (check.passed ? "PASS " : "FAIL ") << qcs::to_string(suite) << ": "
                << check.name;
      if (!check.detail.empty()) std::cout << " (" << check.detail << ")";
      std::cout << '\n';
    }
  }
  std::cout << (total - failed) << "/" << total << " checks passed\n";
  return failed == 0 ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Large values of quadratic character sums: exact experiments"};
  app.require_subcommand(1);

  // delta-max
  Output dm_out;
  std::optional<double> dm_X;
  std::optional<double> dm_lo;
  std::optional<double> dm_hi;
  double dm_x = 0.0;
  bool dm_unit = false;
  bool dm_abs = false;
  auto* dm = app.add_subcommand("delta-max", "max of S_d(x) over fundamental d in a window");
  dm->add_option("--X", dm_X, "window (X, 2X]");
  dm->add_option("--lo", dm_lo, "explicit window lower end (exclusive)");
  dm->add_option("--hi", dm_hi, "explicit window upper end (inclusive)");
  dm->add_option("--x", dm_x, "cutoff x")->required();
  dm->add_flag("--include-unit", dm_unit, "admit d = 1");
  dm->add_flag("--abs", dm_abs, "also report max |S_d(x)|");
  add_output_options(*dm, dm_out);

  // mean-value
  Output mv_out;
  std::vector<double> mv_n;
  double mv_X = 0.0;
  double mv_eps = 0.05;
  auto* mv = app.add_subcommand("mean-value", "sum of chi_d(n) over |d| <= X vs main term");
  mv->add_option("--n", mv_n, "n (repeatable or comma separated)")->required()->delimiter(',');
  mv->add_option("--X", mv_X, "bound on |d|")->required();
  mv->add_option("--eps", mv_eps, "epsilon of the GRH envelope");
  add_output_options(*mv, mv_out);

  // resonate
  Output rs_out;
  std::string rs_variant;
  double rs_X = 0.0;
  std::optional<double> rs_x;
  std::optional<double> rs_sigma;
  std::optional<double> rs_A;
  double rs_alpha = 0.01;
  std::optional<double> rs_delta;
  std::optional<double> rs_y;
  std::string rs_lower;
  std::string rs_set_file;
  bool rs_squared = false;
  auto* rs = app.add_subcommand("resonate", "resonator moment ratio M2/M1 on (X, 2X]");
  rs->add_option("--variant", rs_variant, "short | medium | long")
      ->required()
      ->check(CLI::IsMember({"short", "medium", "long"}));
  rs->add_option("--X", rs_X, "window (X, 2X]")->required();
  auto* x_opt = rs->add_option("--x", rs_x, "cutoff x");
  auto* sigma_opt = rs->add_option("--sigma", rs_sigma, "set log x = (log X)^sigma");
  auto* a_opt = rs->add_option("--A", rs_A, "set x = (log X)^A");
  x_opt->excludes(sigma_opt)->excludes(a_opt);
  sigma_opt->excludes(a_opt);
  rs->add_option("--alpha", rs_alpha, "alpha (short)");
  rs->add_option("--delta", rs_delta, "delta (default 0.01; alpha/2 for short)");
  rs->add_option("--y", rs_y, "explicit resonator length (medium)");
  rs->add_option("--window-lower", rs_lower, "lambda | lambda2 (medium)")
      ->check(CLI::IsMember({"lambda", "lambda2"}));
  rs->add_option("--set-file", rs_set_file, "newline-delimited set M (long)");
  rs->add_flag("--squared", rs_squared, "use S_d(x)^2 in M2");
  add_output_options(*rs, rs_out);

  // gcd-sum
  Output gs_out;
  std::optional<double> gs_N;
  std::string gs_set_file;
  std::string gs_write_set;
  auto* gs = app.add_subcommand("gcd-sum", "GCD sum of a constructed or supplied set");
  auto* n_opt = gs->add_option("--N", gs_N, "construct a set of N members");
  auto* file_opt = gs->add_option("--set-file", gs_set_file, "newline-delimited set M");
  n_opt->excludes(file_opt);
  gs->add_option("--write-set", gs_write_set, "save the constructed set");
  add_output_options(*gs, gs_out);

  // psi
  Output ps_out;
  double ps_x = 0.0;
  double ps_y = 0.0;
  auto* ps = app.add_subcommand("psi", "count y-smooth integers up to x");
  ps->add_option("--x", ps_x, "x")->required();
  ps->add_option("--y", ps_y, "y")->required();
  add_output_options(*ps, ps_out);

  // verify
  Output vf_out;
  std::string vf_suite;
  auto* vf = app.add_subcommand("verify", "run a property/oracle suite");
  vf->add_option("suite", vf_suite, "arith | charsum | meanvalue | resonance | gcd | all")
      ->required();
  vf->add_option("--threads", vf_out.threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitPrecondition;
  }

  try {
    if (dm->parsed()) {
      qcs::Window window{};
      if (dm_X) {
        qcs::require(!dm_lo && !dm_hi, "give either --X or --lo/--hi");
        window = qcs::Window::doubling(*dm_X);
      } else {
        qcs::require(dm_lo && dm_hi, "delta-max needs --X or both --lo and --hi");
        window = {as_integer(*dm_lo, "--lo"), as_integer(*dm_hi, "--hi")};
      }
      const auto result = qcs::delta_max(window, dm_x, {dm_unit, dm_abs},
                                         qcs::Executor{dm_out.threads});
      emit(dm_out, {qcs::to_json(result)}, qcs::to_csv({result}, dm_abs));
    } else if (mv->parsed()) {
      const qcs::Executor executor{mv_out.threads};
      std::vector<qcs::MeanValueReport> reports;
      for (double n : mv_n) {
        reports.push_back(qcs::mean_value_report(as_integer(n, "--n"), mv_X, mv_eps, executor));
      }
      std::vector<nlohmann::ordered_json> objects;
      for (const auto& r : reports) objects.push_back(qcs::to_json(r));
      emit(mv_out, objects, qcs::to_csv(reports));
    } else if (rs->parsed()) {
      const auto variant = qcs::parse_variant(rs_variant);
      double x = 0.0;
      if (rs_x) {
        x = *rs_x;
      } else if (rs_sigma) {
        x = qcs::x_from_sigma(rs_X, *rs_sigma);
      } else if (rs_A) {
        x = qcs::x_from_power(rs_X, *rs_A);
      } else {
        throw qcs::PreconditionError("resonate needs one of --x, --sigma, --A");
      }
      const double delta =
          rs_delta ? *rs_delta : (variant == qcs::ResonatorVariant::Short ? rs_alpha / 2 : 0.01);
      const auto lower =
          rs_lower == "lambda" ? qcs::WindowLower::Lambda : qcs::WindowLower::LambdaSquared;

      qcs::ResonatorSpec spec = [&] {
        if (variant == qcs::ResonatorVariant::Medium && (rs_y || !rs_lower.empty())) {
          const double y = rs_y ? *rs_y : std::pow(rs_X, 0.5 - delta) / (x * x);
          auto s = qcs::make_medium_resonator(rs_X, x, y, lower, delta);
          s.alpha = rs_alpha;
          return s;
        }
        if (variant == qcs::ResonatorVariant::Long && !rs_set_file.empty()) {
          auto s = qcs::make_long_resonator(rs_X, x, qcs::read_gcd_set(rs_set_file), delta);
          s.alpha = rs_alpha;
          return s;
        }
        qcs::require(!rs_y && rs_lower.empty(), "--y and --window-lower apply to medium only");
        qcs::require(rs_set_file.empty(), "--set-file applies to long only");
        return qcs::build_resonator(variant, rs_X, x, rs_alpha, delta);
      }();

      const auto report = qcs::moment_ratio(spec, rs_squared, qcs::Executor{rs_out.threads});
      emit(rs_out, {qcs::to_json(qcs::theorem_report(report))}, qcs::to_csv({report}));
    } else if (gs->parsed()) {
      qcs::require(gs_N || !gs_set_file.empty(), "gcd-sum needs --N or --set-file");
      int k = 0;
      std::optional<qcs::GcdSet> set;
      if (gs_N) {
        const auto N = as_integer(*gs_N, "--N");
        qcs::require(N >= 1, "--N must be positive");
        auto choice = qcs::construct_extremal_choice(static_cast<std::size_t>(N));
        k = choice.prime_count;
        set.emplace(std::move(choice.set));
      } else {
        set.emplace(qcs::read_gcd_set(gs_set_file));
      }
      const double N = static_cast<double>(set->size());
      const qcs::GcdSumReport report{
          static_cast<std::int64_t>(set->size()), set->smoothness(), k,
          qcs::gcd_sum(*set, qcs::Executor{gs_out.threads}),
          N >= 16 ? qcs::gcd_sum_reference(N) : std::nan("")};
      if (!gs_write_set.empty()) qcs::write_gcd_set(gs_write_set, *set);
      emit(gs_out, {qcs::to_json(report)}, qcs::to_csv({report}));
    } else if (ps->parsed()) {
      const auto count = qcs::psi_count(ps_x, ps_y);
      if (!ps_out.json_path.empty()) {
        nlohmann::ordered_json j;
        j["x"] = ps_x;
        j["y"] = ps_y;
        j["psi"] = count;
        write_file(ps_out.json_path, j.dump() + "\n");
      }
      if (!ps_out.csv_path.empty()) {
        write_file(ps_out.csv_path,
                   qcs::render_csv({{"x", "y", "psi"},
                                    {qcs::format_number(ps_x), qcs::format_number(ps_y),
                                     qcs::format_number(count)}}));
      }
      std::cout << count << '\n';
    } else if (vf->parsed()) {
      return run_verify(vf_suite, qcs::Executor{vf_out.threads});
    }
  } catch (const qcs::EmptyWindowError& e) {
    std::cerr << "qcs: " << e.what() << '\n';
    return kExitEmptyWindow;
  } catch (const qcs::PreconditionError& e) {
    std::cerr << "qcs: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "qcs: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
