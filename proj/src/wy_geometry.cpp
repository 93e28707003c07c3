#include "qig/wy_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qig/matrix_io.hpp"
#include "qig/spectral.hpp"

namespace qig {

DifferentiableFunction identity_function() {
  return {"x", [](double x) { return x; }, [](double) { return 1.0; }};
}

DifferentiableFunction log_function() {
  return {"log", [](double x) { return std::log(x); }, [](double x) { return 1.0 / x; }};
}

DifferentiableFunction sqrt_embedding_function() {
  return {"2sqrt", [](double x) { return 2.0 * std::sqrt(x); },
          [](double x) { return 1.0 / std::sqrt(x); }};
}

DifferentiableFunction power_function(double p) {
  if (p == 0.0) throw DomainError("power_function: p must be nonzero");
  std::ostringstream id;
  id << "x^" << p << "/" << p;
  return {id.str(), [p](double x) { return std::pow(x, p) / p; },
          [p](double x) { return std::pow(x, p - 1.0); }};
}

double difference_quotient(const DifferentiableFunction& phi, double x, double y) {
  if (std::abs(x - y) <= 1e-4 * std::max(x, y)) {
    return (phi.derivative(x) + 4.0 * phi.derivative(0.5 * (x + y)) + phi.derivative(y)) / 6.0;
  }
  return (phi.value(x) - phi.value(y)) / (x - y);
}

// ---------------------------------------------------------------------------

HermitianMatrix sqrt_pullback(const DensityMatrix& rho) {
  return matrix_function(rho, [](double x) { return 2.0 * std::sqrt(x); });
}

HermitianMatrix pullback_differential(const DensityMatrix& rho, const TangentVector& a) {
  return apply_kernel_superop(
      rho, [](double x, double y) { return 2.0 / (std::sqrt(x) + std::sqrt(y)); }, a.hermitian());
}

double pullback_metric(const DensityMatrix& rho, const TangentVector& a, const TangentVector& b) {
  return hs_inner(pullback_differential(rho, a), pullback_differential(rho, b));
}

HermitianMatrix general_pullback_differential(const DifferentiableFunction& phi,
                                              const DensityMatrix& rho, const TangentVector& a) {
  const TangentSplit split = tangent_split(rho, a);
  const Matrix dphi = matrix_function(rho, phi.derivative).matrix();
  const HermitianMatrix phi_rho = matrix_function(rho, phi.value);
  // φ'(ρ) is scalar on each block of A^c; symmetrise to absorb the
  // near-degenerate tolerance.
  const Matrix& ac = split.commuting.matrix();
  const HermitianMatrix first = HermitianMatrix::hermitian_part(0.5 * (dphi * ac + ac * dphi));
  return first + i_commutator(phi_rho, split.generator);
}

// ---------------------------------------------------------------------------

DistanceResult wy_distance_checked(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("wy_distance: dimension mismatch");
  const auto root = [](double x) { return std::sqrt(x); };
  const Matrix ra = matrix_function(rho, root).matrix();
  const Matrix rb = matrix_function(sigma, root).matrix();

  DistanceResult r;
  r.overlap = hs_product(ra, rb).real();
  const double clamped = std::clamp(r.overlap, -1.0, 1.0);
  r.clamp = std::abs(r.overlap - clamped);
  if (r.clamp > kClampWindow) {
    throw DomainError("wy_distance: overlap " + std::to_string(r.overlap) + " outside [-1, 1]");
  }
  // 2 arccos F = 4 arcsin(√((1-F)/2)) and ‖√ρ-√σ‖² = 2 - 2F for unit-trace states.
  const double half_chord = 0.5 * (ra - rb).norm();
  r.value = 4.0 * std::asin(std::min(1.0, half_chord));
  return r;
}

double wy_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return wy_distance_checked(rho, sigma).value;
}

GeodesicPath::GeodesicPath(DensityMatrix a, DensityMatrix b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.dim() != b_.dim()) throw DimensionError("geodesic endpoints differ in dimension");
  const auto root = [](double x) { return std::sqrt(x); };
  root_a_ = matrix_function(a_, root).matrix();
  root_b_ = matrix_function(b_, root).matrix();
}

DensityMatrix GeodesicPath::operator()(double t) const {
  if (t == 0.0) return a_;
  if (t == 1.0) return b_;
  const Matrix m = (1.0 - t) * root_a_ + t * root_b_;
  Matrix sq = m * m;
  sq /= sq.trace().real();
  return DensityMatrix(HermitianMatrix::hermitian_part(sq));
}

std::vector<DensityMatrix> GeodesicPath::samples(int k) const {
  if (k < 2) throw std::invalid_argument("geodesic: at least 2 samples required");
  std::vector<DensityMatrix> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    out.push_back((*this)(i == k - 1 ? 1.0 : static_cast<double>(i) / (k - 1)));
  }
  return out;
}

GeodesicPath wy_geodesic(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return GeodesicPath(rho, sigma);
}

double path_length(const MonotoneFunctionEntry& e, const StatePath& path, int steps) {
  if (steps < 100) throw std::invalid_argument("path_length: steps must be at least 100");
  const double h = 1.0 / steps;
  std::vector<Matrix> pts;
  std::vector<DensityMatrix> states;
  pts.reserve(static_cast<std::size_t>(steps) + 1);
  states.reserve(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) {
    const double t = (k == steps) ? 1.0 : k * h;
    try {
      states.push_back(path(t));
    } catch (const InvariantError& err) {
      throw InvariantError(err.invariant(), "path sample at t = " + std::to_string(t) + ": " + err.what());
    }
    pts.push_back(states.back().matrix());
  }

  std::vector<double> speed(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) {
    Matrix v;
    if (k == 0) {
      v = (4.0 * (pts[1] - pts[0]) - (pts[2] - pts[0])) / (2.0 * h);
    } else if (k == steps) {
      v = (4.0 * (pts[k] - pts[k - 1]) - (pts[k] - pts[k - 2])) / (2.0 * h);
    } else {
      v = (pts[k + 1] - pts[k - 1]) / (2.0 * h);
    }
    const TangentVector tv = TangentVector::traceless_part(HermitianMatrix::hermitian_part(v));
    const double g = metric_eval(e, states[static_cast<std::size_t>(k)], tv, tv).value;
    speed[static_cast<std::size_t>(k)] = std::sqrt(std::max(0.0, g));
  }

  double sum = 0.5 * (speed.front() + speed.back());
  for (int k = 1; k < steps; ++k) sum += speed[static_cast<std::size_t>(k)];
  return sum * h;
}

nlohmann::json path_to_json(const GeodesicPath& path, int samples) {
  nlohmann::json ts = nlohmann::json::array();
  nlohmann::json states = nlohmann::json::array();
  const auto pts = path.samples(samples);
  for (int i = 0; i < samples; ++i) {
    ts.push_back(i == samples - 1 ? 1.0 : static_cast<double>(i) / (samples - 1));
    states.push_back(matrix_to_json(pts[static_cast<std::size_t>(i)].matrix()));
  }
  return {{"t", ts}, {"states", states}};
}

// ---------------------------------------------------------------------------

double pullback_condition_check(const DifferentiableFunction& phi, const Kernel& c) {
  const auto grid = log_grid(1e-2, 1e2, 100);
  double worst = 0.0;
  for (double x : grid) {
    for (double y : grid) {
      const double q = (x == y) ? phi.derivative(x) : (phi.value(x) - phi.value(y)) / (x - y);
      worst = std::max(worst, std::abs(q * q - c(x, y)));
    }
  }
  return worst;
}

double pullback_condition_check(const DifferentiableFunction& phi, const MonotoneFunctionEntry& e) {
  return pullback_condition_check(phi, e.c);
}

Kernel induced_kernel(const DifferentiableFunction& phi, const DifferentiableFunction& chi) {
  return [phi, chi](double x, double y) {
    return difference_quotient(phi, x, y) * difference_quotient(chi, x, y);
  };
}

ScalarFunction induced_function(const DifferentiableFunction& phi, const DifferentiableFunction& chi) {
  const Kernel c = induced_kernel(phi, chi);
  return [c](double t) { return 1.0 / c(t, 1.0); };
}

nlohmann::json to_json(const DualPairReport& r) {
  return {{"phi_id", r.phi_id},
          {"chi_id", r.chi_id},
          {"induced_c_valid", r.induced_c_valid},
          {"f_normalized", r.f_normalized},
          {"f_symmetric", r.f_symmetric},
          {"monotonicity_violations", r.monotonicity_violations},
          {"normalization_residual", r.normalization_residual},
          {"symmetry_margin", r.symmetry_margin},
          {"worst_monotonicity_margin", r.worst_monotonicity_margin},
          {"passes_all", r.passes_all()}};
}

DualPairReport dual_pair_check(const DifferentiableFunction& phi, const DifferentiableFunction& chi,
                               const DualPairOptions& options) {
  DualPairReport r;
  r.phi_id = phi.id;
  r.chi_id = chi.id;
  const Kernel c = induced_kernel(phi, chi);
  const ScalarFunction f = induced_function(phi, chi);
  const auto grid = log_grid(1e-3, 1e3, 100);

  r.induced_c_valid = true;
  for (double x : grid) {
    for (double y : grid) {
      const double cxy = c(x, y);
      const double cyx = c(y, x);
      if (!(std::isfinite(cxy) && cxy > 0.0 && std::abs(cxy - cyx) <= 1e-12 * cxy)) {
        r.induced_c_valid = false;
      }
    }
  }

  r.normalization_residual = std::abs(f(1.0) - 1.0);
  r.f_normalized = r.normalization_residual <= options.normalization_tolerance;

  double worst_rel = 0.0;
  for (double x : grid) {
    const double fx = f(x);
    const double defect = std::abs(fx - x * f(1.0 / x));
    r.symmetry_margin = std::max(r.symmetry_margin, defect);
    worst_rel = std::max(worst_rel, defect / std::max(1.0, std::abs(fx)));
  }
  r.f_symmetric = std::isfinite(worst_rel) && worst_rel <= options.symmetry_tolerance;

  const auto mono = sampled_operator_monotonicity(entry_from_function(phi.id + "*" + chi.id, f),
                                                  options.monotonicity_trials,
                                                  options.monotonicity_dim, options.seed);
  r.monotonicity_violations = mono.violations + mono.skipped;
  r.worst_monotonicity_margin = mono.worst_margin;
  return r;
}

std::vector<SelfDualityRow> self_duality_scan(std::span<const double> p_grid,
                                              const DualPairOptions& options) {
  std::vector<SelfDualityRow> rows;
  for (double p : p_grid) {
    if (!(p >= -1.0 && p <= 2.0) || p == 0.0 || p == 1.0) {
      throw std::invalid_argument("self_duality_scan: p = " + std::to_string(p) +
                                  " outside [-1, 2] \\ {0, 1}");
    }
    const auto phi = power_function(p);
    rows.push_back({p, dual_pair_check(phi, phi, options)});
  }
  return rows;
}

}  // namespace qig
