#pragma once

// Relative g-entropies through the relative modular operator, the induced
// monotone metric f_g, and the Hessian identity linking the two.

#include <string>
#include <vector>

#include <json.hpp>

#include "qig/linalg.hpp"
#include "qig/monotone.hpp"

namespace qig {

/// Operator convex g on (0,∞) with g(1) = 0, carrying closed-form g''(1) and
/// g'''(1).
struct OperatorConvexG {
  std::string id;
  ScalarFunction g;
  double d2_at_1 = 0.0;
  double d3_at_1 = 0.0;
};

const OperatorConvexG& g_wy();       // 4(1 - √x)
const OperatorConvexG& g_umegaki();  // -log x
const std::vector<OperatorConvexG>& g_catalog();
const OperatorConvexG& find_g(const std::string& id);

/// g(Δ_{σ,ρ})(X) with Δ_{σ,ρ} = L_σ R_ρ^{-1}.
Matrix relative_modular_apply(const DensityMatrix& rho, const DensityMatrix& sigma,
                              const ScalarFunction& g, const Matrix& x);

/// H_g(ρ,σ) = Tr(ρ^{1/2} g(Δ_{σ,ρ})(ρ^{1/2})).
double h_g_divergence(const DensityMatrix& rho, const DensityMatrix& sigma, const ScalarFunction& g);
double h_g_divergence(const DensityMatrix& rho, const DensityMatrix& sigma, const OperatorConvexG& g);

/// f_g(x) = (x-1)² / (g(x) + x g(1/x)). For |x-1| < 2e-3 a cubic is used
/// whose first two coefficients come from g''(1) and whose others are fitted
/// to the direct values at 1 ± 2e-3.
ScalarFunction f_from_g(const OperatorConvexG& g);

/// Monotone-function entry for f_g (kernel only; no ∂c/∂x).
MonotoneFunctionEntry entry_from_g(const OperatorConvexG& g);

class StepTooLargeError : public DomainError {
 public:
  StepTooLargeError(const std::string& what, double suggested)
      : DomainError(what), suggested_step_(suggested) {}
  double suggested_step() const noexcept { return suggested_step_; }

 private:
  double suggested_step_;
};

struct HessianCheck {
  double numeric = 0.0;
  double analytic = 0.0;
  double residual = 0.0;
  double step = 0.0;
};

nlohmann::json to_json(const HessianCheck& h);

/// Compares -∂t∂s H_g(ρ+tA, ρ+sB) at 0 (four-point stencil) with
/// Tr(A c_{f_g}(L_ρ,R_ρ)(B)). Throws StepTooLargeError if a stencil point
/// leaves the positive cone.
HessianCheck hessian_check(const OperatorConvexG& g, const DensityMatrix& rho, const TangentVector& a,
                           const TangentVector& b, double step = 1e-3);

/// α = 3 + 2 g'''(1) / g''(1)
double alpha_from_g(const OperatorConvexG& g);

/// √(2 - 2 Tr (ρ^{1/2} σ ρ^{1/2})^{1/2})
double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace qig
