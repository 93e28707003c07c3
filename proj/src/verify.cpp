#include "qig/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "qig/classical.hpp"
#include "qig/curvature.hpp"
#include "qig/divergence.hpp"
#include "qig/monotone.hpp"
#include "qig/random.hpp"
#include "qig/wy_geometry.hpp"

namespace qig {

namespace {

class Recorder {
 public:
  explicit Recorder(const SuiteConfig& config) : config_(config) {}

  void eq(const std::string& name, double expected, double actual, double tolerance, double scale = 1.0) {
    Check c = make(name, "eq", expected, actual, tolerance);
    c.scale = scale;
    c.pass = std::abs(actual - expected) <= c.tolerance * scale;
    checks_.push_back(c);
  }
  void ge(const std::string& name, double bound, double actual, double tolerance = 0.0) {
    Check c = make(name, "ge", bound, actual, tolerance);
    c.pass = actual >= bound - c.tolerance;
    checks_.push_back(c);
  }
  void le(const std::string& name, double bound, double actual, double tolerance = 0.0) {
    Check c = make(name, "le", bound, actual, tolerance);
    c.pass = actual <= bound + c.tolerance;
    checks_.push_back(c);
  }
  /// An exception inside a check is a failure of that check, not of the run.
  void failed(const std::string& name, double expected) {
    Check c = make(name, "eq", expected, std::nan(""), 0.0);
    c.pass = false;
    checks_.push_back(c);
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  Check make(const std::string& name, const char* relation, double expected, double actual,
             double tolerance) const {
    Check c;
    c.name = name;
    c.relation = relation;
    c.expected = expected;
    c.actual = actual;
    c.tolerance = tolerance;
    auto it = config_.tolerances.find(name);
    if (it == config_.tolerances.end()) it = config_.tolerances.find(name.substr(0, name.find('/')));
    if (it != config_.tolerances.end()) c.tolerance = it->second;
    return c;
  }

  const SuiteConfig& config_;
  std::vector<Check> checks_;
};

std::string tag(Index n, int trial) {
  return "/n=" + std::to_string(n) + "/trial=" + std::to_string(trial);
}

TangentVector unit_tangent(Index n, std::uint64_t seed) {
  const TangentVector a = random_tangent(n, seed);
  return a * (1.0 / a.hermitian().norm());
}

std::vector<double> random_probability(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> p(n);
  double total = 0.0;
  for (auto& x : p) total += (x = u(rng));
  for (auto& x : p) x /= total;
  return p;
}

std::vector<double> random_simplex_tangent(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<double> u(n);
  double mean = 0.0;
  for (auto& x : u) mean += (x = g(rng));
  mean /= static_cast<double>(n);
  for (auto& x : u) x -= mean;
  return u;
}

DensityMatrix diagonal_state(const std::vector<double>& p) { return DensityMatrix::diagonal(p); }

TangentVector diagonal_tangent(const std::vector<double>& u) {
  Matrix m = Matrix::Zero(static_cast<Index>(u.size()), static_cast<Index>(u.size()));
  for (std::size_t i = 0; i < u.size(); ++i) m(static_cast<Index>(i), static_cast<Index>(i)) = u[i];
  return TangentVector::traceless_part(HermitianMatrix::hermitian_part(m));
}

// -- suites ------------------------------------------------------------------

void wy_curvature_suite(const SuiteConfig& cfg, Recorder& rec) {
  for (Index n : cfg.n_values) {
    const double n2 = static_cast<double>(n * n);
    const double expected = (n2 - 1.0) * (n2 - 2.0) / 4.0;
    for (int t = 0; t < cfg.trials; ++t) {
      const auto name = "scal1" + tag(n, t);
      try {
        const auto rho = random_density(n, derive_seed(cfg.seed, static_cast<std::uint64_t>(n) * 100000 + t));
        rec.eq(name, expected, scalar_curvature(wy_entry(), rho).scal1, 1e-6, expected);
      } catch (const std::exception&) {
        rec.failed(name, expected);
      }
    }
  }
}

void pullback_suite(const SuiteConfig& cfg, Recorder& rec) {
  for (int t = 0; t < cfg.trials; ++t) {
    const Index n = cfg.n_values[static_cast<std::size_t>(t) % cfg.n_values.size()];
    const auto base = derive_seed(cfg.seed, static_cast<std::uint64_t>(t));
    const auto rho = random_density(n, derive_seed(base, 0));
    const auto a = unit_tangent(n, derive_seed(base, 1));
    const auto b = unit_tangent(n, derive_seed(base, 2));
    const double expected = metric_eval(wy_entry(), rho, a, b).value;
    const double scale = std::sqrt(metric_eval(wy_entry(), rho, a, a).value *
                                   metric_eval(wy_entry(), rho, b, b).value);
    rec.eq("pullback" + tag(n, t), expected, pullback_metric(rho, a, b), 1e-10, scale);
  }
}

void hessian_suite(const SuiteConfig& cfg, Recorder& rec) {
  const auto grid = log_grid(1e-3, 1e3, 100);
  const std::pair<const OperatorConvexG*, const char*> pairs[] = {{&g_wy(), "wy"}, {&g_umegaki(), "bkm"}};
  for (const auto& [g, id] : pairs) {
    const auto f = f_from_g(*g);
    const auto& ref = find_entry(id);
    double worst = 0.0;
    for (double x : grid) worst = std::max(worst, std::abs(f(x) - ref.f(x)) / std::max(1.0, std::abs(ref.f(x))));
    rec.le("f_from_g/" + g->id, 0.0, worst, 1e-12);
  }
  std::uint64_t stream = 0;
  for (const auto& [g, id] : pairs) {
    for (int t = 0; t < cfg.trials; ++t) {
      const Index n = cfg.n_values[static_cast<std::size_t>(t) % cfg.n_values.size()];
      const auto base = derive_seed(cfg.seed, stream++);
      const auto name = "hessian/" + g->id + tag(n, t);
      try {
        const auto rho = random_density_with_floor(n, derive_seed(base, 0), 5e-2);
        const auto a = unit_tangent(n, derive_seed(base, 1));
        const auto b = unit_tangent(n, derive_seed(base, 2));
        const auto h = hessian_check(*g, rho, a, b);
        rec.eq(name, h.analytic, h.numeric, 1e-4, 1.0 + std::abs(h.analytic));
      } catch (const std::exception&) {
        rec.failed(name, 0.0);
      }
    }
  }
}

void monotonicity_suite(const SuiteConfig& cfg, Recorder& rec) {
  for (std::size_t k = 0; k < catalog().size(); ++k) {
    const auto& e = catalog()[k];
    int violations = 0;
    double worst = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < cfg.trials; ++t) {
      const Index n = cfg.n_values[static_cast<std::size_t>(t) % cfg.n_values.size()];
      const auto base = derive_seed(cfg.seed, k * 1000003 + static_cast<std::uint64_t>(t));
      const Index env = 1 + static_cast<Index>(derive_seed(base, 3) % static_cast<std::uint64_t>(n * n));
      const auto channel = random_kraus_channel(n, n, env, derive_seed(base, 0));
      const auto rho = random_density(n, derive_seed(base, 1));
      const auto a = random_tangent(n, derive_seed(base, 2));
      const auto out = contraction_check(e, channel, rho, a);
      if (out.skipped) continue;
      if (out.violates()) ++violations;
      worst = std::max(worst, (out.g_after - out.g_before) / (1.0 + out.g_before));
    }
    rec.eq("contraction/" + e.id, 0.0, violations, 0.0);
    rec.le("contraction-margin/" + e.id, 0.0, worst, kContractionSlack);
    const auto mono = sampled_operator_monotonicity(e, 200, 3, derive_seed(cfg.seed, 7000000 + k));
    rec.eq("operator-monotone/" + e.id, 0.0, mono.violations, 0.0);
  }
}

void geodesic_length_suite(const SuiteConfig& cfg, Recorder& rec) {
  constexpr int kSteps = 10000;
  for (int t = 0; t < cfg.trials; ++t) {
    const Index n = cfg.n_values[static_cast<std::size_t>(t) % cfg.n_values.size()];
    const auto base = derive_seed(cfg.seed, static_cast<std::uint64_t>(t));
    const auto name = "geodesic-length" + tag(n, t);
    try {
      const auto rho = random_density(n, derive_seed(base, 0));
      const auto sigma = random_density(n, derive_seed(base, 1));
      const double d = wy_distance(rho, sigma);
      rec.eq(name, d, path_length(wy_entry(), wy_geodesic(rho, sigma), kSteps), 1e-4, d);
    } catch (const std::exception&) {
      rec.failed(name, 0.0);
    }
  }
  {
    const auto rho = DensityMatrix::diagonal({0.9, 0.1});
    const auto sigma = DensityMatrix::diagonal({0.1, 0.9});
    const double d = wy_distance(rho, sigma);
    rec.eq("geodesic-length/commuting", d, path_length(wy_entry(), wy_geodesic(rho, sigma), kSteps), 1e-4, d);
  }
  const Index n = cfg.n_values.front();
  const auto rho = random_density(n, derive_seed(cfg.seed, 900001));
  const auto sigma = random_density(n, derive_seed(cfg.seed, 900002));
  const double d = wy_distance(rho, sigma);
  const auto path = wy_geodesic(rho, sigma);
  const double coarse = std::abs(path_length(wy_entry(), path, 100) - d);
  const double fine = std::abs(path_length(wy_entry(), path, 200) - d);
  rec.eq("convergence-order", 2.0, std::log2(coarse / fine), 0.25);
}

void dual_pairs_suite(const SuiteConfig& cfg, Recorder& rec) {
  const std::vector<double> grid = {-1.0, -0.5, 0.25, 0.5, 0.75, 1.5, 2.0};
  DualPairOptions options;
  options.seed = cfg.seed;
  options.monotonicity_trials = cfg.trials;
  options.monotonicity_dim = cfg.n_values.front();
  for (const auto& row : self_duality_scan(grid, options)) {
    char label[32];
    std::snprintf(label, sizeof label, "%g", row.p);
    rec.eq(std::string("self-dual/p=") + label, row.p == 0.5 ? 1.0 : 0.0, row.report.passes_all() ? 1.0 : 0.0,
           0.0);
  }
  for (double p : {-1.0, 2.0}) {
    const auto phi = power_function(p);
    const auto f = induced_function(phi, phi);
    char label[32];
    std::snprintf(label, sizeof label, "%g", p);
    rec.ge(std::string("symmetry-margin/p=") + label, 1e-2, std::abs(f(10.0) - 10.0 * f(0.1)));
  }
  const auto bkm = dual_pair_check(identity_function(), log_function(), options);
  rec.eq("dual-pair/x-log", 1.0, bkm.passes_all() ? 1.0 : 0.0, 0.0);
  rec.le("pullback-condition/2sqrt-wy", 0.0, pullback_condition_check(sqrt_embedding_function(), wy_entry()),
         1e-12);
}

void classical_suite(const SuiteConfig& cfg, Recorder& rec) {
  using namespace classical;
  for (int t = 0; t < cfg.trials; ++t) {
    const Index n = cfg.n_values[static_cast<std::size_t>(t) % cfg.n_values.size()];
    const auto size = static_cast<std::size_t>(n);
    const auto base = derive_seed(cfg.seed, static_cast<std::uint64_t>(t));
    const ProbabilityVector p(random_probability(size, derive_seed(base, 0)));
    const ProbabilityVector q(random_probability(size, derive_seed(base, 1)));
    const auto u = random_simplex_tangent(size, derive_seed(base, 2));
    const auto v = random_simplex_tangent(size, derive_seed(base, 3));

    rec.eq("bhattacharyya" + tag(n, t), bhattacharyya_distance(p, q),
           wy_distance(diagonal_state(p.values()), diagonal_state(q.values())), 1e-11);

    const double fisher = fisher_rao_metric(p, u, v);
    const auto du = sphere_map_differential(p, u);
    const auto dv = sphere_map_differential(p, v);
    double sphere = 0.0;
    for (std::size_t i = 0; i < size; ++i) sphere += du[i] * dv[i];
    rec.eq("sphere-pullback" + tag(n, t), fisher, sphere, 1e-12, std::max(1.0, std::abs(fisher)));

    const double wy = metric_eval(wy_entry(), diagonal_state(p.values()), diagonal_tangent(u), diagonal_tangent(v)).value;
    rec.eq("commutative-reduction" + tag(n, t), fisher, wy, 1e-12, std::max(1.0, std::abs(fisher)));

    const auto s = tangent_to_score(p, u);
    const auto r = tangent_to_score(p, v);
    const double before = fisher_rao_scores(s, r);
    const double after = fisher_rao_scores(mixture_transport(s, q), exponential_transport(r, q));
    rec.eq("transport-duality" + tag(n, t), before, after, 1e-12, std::max(1.0, std::abs(before)));
  }
  rec.eq("curvature-constant/n=3", 0.5, fisher_rao_scalar_curvature(3), 0.0);
}

struct SuiteSpec {
  std::string name;
  std::vector<Index> n_values;
  int trials;
  std::function<void(const SuiteConfig&, Recorder&)> run;
};

const std::vector<SuiteSpec>& suites() {
  static const std::vector<SuiteSpec> table = {
      {"wy-curvature", {2, 3, 4}, 20, wy_curvature_suite},
      {"pullback", {2, 3, 4, 5}, 100, pullback_suite},
      {"hessian", {2, 3, 4}, 50, hessian_suite},
      {"monotonicity", {2, 3}, 500, monotonicity_suite},
      {"geodesic-length", {2, 3}, 20, geodesic_length_suite},
      {"dual-pairs", {3}, 200, dual_pairs_suite},
      {"classical", {2, 3, 4, 5}, 20, classical_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    return out;
  }();
  return names;
}

nlohmann::json to_json(const SuiteReport& r, bool timing) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"relation", c.relation},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"tolerance", c.tolerance},
                      {"scale", c.scale},
                      {"pass", c.pass}});
  }
  nlohmann::json config = {{"suite", r.config.suite},
                           {"n_values", r.config.n_values},
                           {"trials", r.config.trials},
                           {"seed", r.config.seed},
                           {"tolerances", r.config.tolerances}};
  nlohmann::json out = {{"version", kVersion},
                        {"suite", r.suite},
                        {"config", config},
                        {"passed", r.passed},
                        {"checks", checks}};
  if (timing) out["wall_time"] = r.wall_time;
  return out;
}

SuiteReport run_suite(const SuiteConfig& config) {
  const auto it = std::find_if(suites().begin(), suites().end(),
                               [&](const SuiteSpec& s) { return s.name == config.suite; });
  if (it == suites().end()) {
    std::string known;
    for (const auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
    throw std::invalid_argument("unknown suite '" + config.suite + "' (known: " + known + ")");
  }
  SuiteConfig effective = config;
  if (effective.n_values.empty()) effective.n_values = it->n_values;
  if (effective.trials == 0) effective.trials = it->trials;
  if (effective.trials < 1) throw std::invalid_argument("trials must be at least 1");
  for (Index n : effective.n_values) {
    if (n < 2 || n > 16) throw std::invalid_argument("n must lie in [2, 16], got " + std::to_string(n));
  }

  const auto start = std::chrono::steady_clock::now();
  Recorder rec(effective);
  it->run(effective, rec);
  SuiteReport report;
  report.suite = effective.suite;
  report.config = effective;
  report.checks = rec.take();
  report.passed = std::all_of(report.checks.begin(), report.checks.end(), [](const Check& c) { return c.pass; });
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qig
