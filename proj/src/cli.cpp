#include "qig/cli.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qig/classical.hpp"
#include "qig/curvature.hpp"
#include "qig/divergence.hpp"
#include "qig/matrix_io.hpp"
#include "qig/monotone.hpp"
#include "qig/verify.hpp"
#include "qig/wy_geometry.hpp"

namespace qig {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

DensityMatrix load_density(const std::string& path) { return density_from_json(read_json_file(path)); }
TangentVector load_tangent(const std::string& path) { return tangent_from_json(read_json_file(path)); }

std::vector<double> diagonal_of(const DensityMatrix& rho) {
  const Matrix& m = rho.matrix();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (i != j && std::abs(m(i, j)) > kHermitianTolerance) {
        throw InvariantError("diagonal", "bhattacharyya distance needs diagonal (commuting) states");
      }
    }
  }
  std::vector<double> p(static_cast<std::size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i) p[static_cast<std::size_t>(i)] = m(i, i).real();
  return p;
}

std::vector<Index> parse_dims(const std::string& text) {
  std::vector<Index> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<Index>(v));
    } catch (const std::exception&) {
      throw UsageError("--n expects a comma-separated list of integers, got '" + text + "'");
    }
  }
  return out;
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--tolerance expects name=value, got '" + item + "'");
    try {
      std::size_t used = 0;
      const std::string value = item.substr(eq + 1);
      const double v = std::stod(value, &used);
      if (used != value.size() || !(v >= 0.0)) throw std::invalid_argument(value);
      out[item.substr(0, eq)] = v;
    } catch (const std::exception&) {
      throw UsageError("--tolerance value must be a non-negative number: '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monotone metrics and Wigner-Yanase geometry on quantum state space", "qig"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  bool timing = false;
  std::vector<std::string> tolerance_items;
  app.add_option("--seed", seed, "Random seed for verification suites");
  app.add_flag("--json", json, "Emit JSON for commands that otherwise print a bare number");
  app.add_option("--tolerance", tolerance_items, "Override a check tolerance, name=value (repeatable)");
  app.add_flag("--timing", timing, "Include wall_time in verification reports");

  std::string file_a, file_b, file_c, metric = "wy", f_id = "wy", g_id = "g_wy", suite, dims;
  int samples = 11;
  int trials = 0;

  auto* distance = app.add_subcommand("distance", "Distance between two states");
  distance->add_option("a", file_a, "First state (JSON)")->required();
  distance->add_option("b", file_b, "Second state (JSON)")->required();
  distance->add_option("--metric", metric, "wy | bures | bhattacharyya")
      ->check(CLI::IsMember({"wy", "bures", "bhattacharyya"}));

  auto* geodesic = app.add_subcommand("geodesic", "Sampled WY geodesic between two states");
  geodesic->add_option("a", file_a, "Start state (JSON)")->required();
  geodesic->add_option("b", file_b, "End state (JSON)")->required();
  geodesic->add_option("--samples", samples, "Number of samples, endpoints included")->check(CLI::Range(2, 1000000));

  auto* curvature = app.add_subcommand("curvature", "Scalar curvature of a monotone metric at a state");
  curvature->add_option("state", file_a, "State (JSON)")->required();
  curvature->add_option("--f", f_id, "Monotone function id");

  auto* metric_cmd = app.add_subcommand("metric-eval", "Monotone metric g_rho(A, B)");
  metric_cmd->add_option("state", file_a, "State (JSON)")->required();
  metric_cmd->add_option("A", file_b, "Tangent (traceless Hermitian, JSON)")->required();
  metric_cmd->add_option("B", file_c, "Tangent (traceless Hermitian, JSON)")->required();
  metric_cmd->add_option("--f", f_id, "Monotone function id");

  auto* divergence = app.add_subcommand("divergence", "Relative g-entropy H_g(rho, sigma)");
  divergence->add_option("rho", file_a, "First state (JSON)")->required();
  divergence->add_option("sigma", file_b, "Second state (JSON)")->required();
  divergence->add_option("--g", g_id, "g_wy | g_umegaki");

  auto* verify = app.add_subcommand("verify", "Run a seeded verification suite");
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--n", dims, "Comma-separated dimensions");
  verify->add_option("--trials", trials, "Trial count")->check(CLI::PositiveNumber);

  for (auto* sub : {distance, geodesic, curvature, metric_cmd, divergence, verify}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*distance) {
      const auto rho = load_density(file_a);
      const auto sigma = load_density(file_b);
      if (rho.dim() != sigma.dim()) throw DimensionError("states have different dimensions");
      double value = 0.0;
      if (metric == "wy") {
        value = wy_distance(rho, sigma);
      } else if (metric == "bures") {
        value = bures_distance(rho, sigma);
      } else {
        value = classical::bhattacharyya_distance(classical::ProbabilityVector(diagonal_of(rho)),
                                                  classical::ProbabilityVector(diagonal_of(sigma)));
      }
      if (json) {
        out << nlohmann::json{{"metric", metric}, {"value", value}, {"inputs", {file_a, file_b}}}.dump() << "\n";
      } else {
        out << format15(value) << "\n";
      }
    } else if (*geodesic) {
      const auto rho = load_density(file_a);
      const auto sigma = load_density(file_b);
      if (rho.dim() != sigma.dim()) throw DimensionError("states have different dimensions");
      out << path_to_json(wy_geodesic(rho, sigma), samples).dump() << "\n";
    } else if (*curvature) {
      const auto& entry = find_entry(f_id);
      out << to_json(scalar_curvature(entry, load_density(file_a))).dump() << "\n";
    } else if (*metric_cmd) {
      const auto& entry = find_entry(f_id);
      const auto v = metric_eval(entry, load_density(file_a), load_tangent(file_b), load_tangent(file_c));
      if (json) {
        out << nlohmann::json{{"function_id", v.function_id}, {"value", v.value}}.dump() << "\n";
      } else {
        out << format15(v.value) << "\n";
      }
    } else if (*divergence) {
      const auto& g = find_g(g_id);
      const auto rho = load_density(file_a);
      const auto sigma = load_density(file_b);
      if (rho.dim() != sigma.dim()) throw DimensionError("states have different dimensions");
      const double value = h_g_divergence(rho, sigma, g);
      if (json) {
        out << nlohmann::json{{"g_id", g.id}, {"value", value}, {"inputs", {file_a, file_b}}}.dump() << "\n";
      } else {
        out << format15(value) << "\n";
      }
    } else if (*verify) {
      SuiteConfig config;
      config.suite = suite;
      config.seed = seed;
      config.trials = trials;
      if (!dims.empty()) config.n_values = parse_dims(dims);
      config.tolerances = parse_tolerances(tolerance_items);
      const auto report = run_suite(config);
      out << to_json(report, timing).dump(2) << "\n";
      return report.passed ? 0 : 1;
    }
  } catch (const InvariantError& e) {
    err << "error: invalid input [" << e.invariant() << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace qig
