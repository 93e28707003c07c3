#pragma once

// Wigner–Yanase geometry through the square-root embedding ρ ↦ 2√ρ onto the
// radius-2 sphere of Hermitian matrices, and the pull-back / dual-pair
// characterisation of monotone metrics.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "qig/linalg.hpp"
#include "qig/monotone.hpp"

namespace qig {

/// A C¹ function on (0,∞) given as a closed-form pair (φ, φ').
struct DifferentiableFunction {
  std::string id;
  ScalarFunction value;
  ScalarFunction derivative;
};

DifferentiableFunction identity_function();
DifferentiableFunction log_function();
DifferentiableFunction sqrt_embedding_function();  // 2√x
/// x^p / p, p ≠ 0.
DifferentiableFunction power_function(double p);

/// (φ(x) - φ(y))/(x - y), with the diagonal limit φ' used (via Simpson's
/// rule on φ') when the points are within a relative 1e-4 of each other.
double difference_quotient(const DifferentiableFunction& phi, double x, double y);

// -- Square-root pull-back -------------------------------------------------

/// φ(ρ) = 2√ρ; Tr φ(ρ)² = 4.
HermitianMatrix sqrt_pullback(const DensityMatrix& rho);

/// D_ρφ(A) = 2 (L_ρ^{1/2} + R_ρ^{1/2})^{-1}(A).
HermitianMatrix pullback_differential(const DensityMatrix& rho, const TangentVector& a);

/// Re ⟨D_ρφ(A), D_ρφ(B)⟩_HS.
double pullback_metric(const DensityMatrix& rho, const TangentVector& a, const TangentVector& b);

/// D_ρφ(A) = φ'(ρ) A^c + i[φ(ρ), U] for A = A^c + i[ρ, U].
HermitianMatrix general_pullback_differential(const DifferentiableFunction& phi,
                                              const DensityMatrix& rho, const TangentVector& a);

// -- Distance and geodesics ------------------------------------------------

inline constexpr double kClampWindow = 1e-12;

struct DistanceResult {
  double value = 0.0;
  double overlap = 0.0;  // Tr(ρ^{1/2} σ^{1/2})
  double clamp = 0.0;    // amount the overlap was pulled back into [-1, 1]
};

/// d = 2 arccos Tr(ρ^{1/2} σ^{1/2}), evaluated through the equivalent chord
/// form 4 arcsin(‖√ρ - √σ‖_HS / 2) so that nearby states keep full accuracy.
/// Throws DomainError if the overlap leaves [-1, 1] by more than kClampWindow.
DistanceResult wy_distance_checked(const DensityMatrix& rho, const DensityMatrix& sigma);
double wy_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// γ(t) = M(t)² / Tr M(t)², M(t) = (1-t)√ρ + t√σ: the image of the great
/// circle through 2√ρ and 2√σ.
class GeodesicPath {
 public:
  GeodesicPath(DensityMatrix a, DensityMatrix b);

  const DensityMatrix& endpoint_a() const noexcept { return a_; }
  const DensityMatrix& endpoint_b() const noexcept { return b_; }

  DensityMatrix operator()(double t) const;

  /// k ≥ 2 equally spaced samples on [0, 1], endpoints included.
  std::vector<DensityMatrix> samples(int k) const;

 private:
  DensityMatrix a_;
  DensityMatrix b_;
  Matrix root_a_;
  Matrix root_b_;
};

GeodesicPath wy_geodesic(const DensityMatrix& rho, const DensityMatrix& sigma);

using StatePath = std::function<DensityMatrix(double)>;

/// ∫₀¹ √g(γ̇, γ̇) dt by the trapezoid rule on `steps` intervals, with γ̇ from
/// second-order differences (central inside, one-sided at the ends).
/// A sample that is not a valid state raises InvariantError naming t.
double path_length(const MonotoneFunctionEntry& e, const StatePath& path, int steps);

nlohmann::json path_to_json(const GeodesicPath& path, int samples);

// -- Pull-back and dual-pair characterisation ------------------------------

/// max over a 100×100 log grid on [1e-2, 1e2] of |((φ(x)-φ(y))/(x-y))² - c(x,y)|.
double pullback_condition_check(const DifferentiableFunction& phi, const Kernel& c);
double pullback_condition_check(const DifferentiableFunction& phi, const MonotoneFunctionEntry& e);

/// c(x,y) = [(φ(x)-φ(y))/(x-y)] · [(χ(x)-χ(y))/(x-y)]
Kernel induced_kernel(const DifferentiableFunction& phi, const DifferentiableFunction& chi);
/// f(t) = 1 / c(t, 1)
ScalarFunction induced_function(const DifferentiableFunction& phi, const DifferentiableFunction& chi);

struct DualPairOptions {
  int monotonicity_trials = 200;
  Index monotonicity_dim = 3;
  std::uint64_t seed = 20030101;
  double symmetry_tolerance = 1e-9;      // relative, on the log grid
  double normalization_tolerance = 1e-12;
};

struct DualPairReport {
  std::string phi_id;
  std::string chi_id;
  bool induced_c_valid = false;  // finite, positive, symmetric on the grid
  bool f_normalized = false;
  bool f_symmetric = false;
  int monotonicity_violations = 0;
  double normalization_residual = 0.0;
  double symmetry_margin = 0.0;  // max |f(x) - x f(1/x)| on the grid
  double worst_monotonicity_margin = 0.0;

  bool passes_all() const {
    return induced_c_valid && f_normalized && f_symmetric && monotonicity_violations == 0;
  }
};

nlohmann::json to_json(const DualPairReport& r);

DualPairReport dual_pair_check(const DifferentiableFunction& phi, const DifferentiableFunction& chi,
                               const DualPairOptions& options = {});

struct SelfDualityRow {
  double p = 0.0;
  DualPairReport report;
};

/// dual_pair_check(x^p/p, x^p/p) for each p; the grid must lie in [-1, 2] \ {0, 1}.
std::vector<SelfDualityRow> self_duality_scan(std::span<const double> p_grid,
                                              const DualPairOptions& options = {});

}  // namespace qig
