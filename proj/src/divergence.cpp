#include "qig/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qig/spectral.hpp"

namespace qig {

namespace {

constexpr double kFgWindow = 2e-3;

std::vector<OperatorConvexG> build_g_catalog() {
  return {
      {"g_wy", [](double x) { return 4.0 * (1.0 - std::sqrt(x)); }, 1.0, -1.5},
      {"g_umegaki", [](double x) { return -std::log(x); }, 1.0, -2.0},
  };
}

}  // namespace

const std::vector<OperatorConvexG>& g_catalog() {
  static const std::vector<OperatorConvexG> entries = build_g_catalog();
  return entries;
}

const OperatorConvexG& g_wy() { return g_catalog()[0]; }
const OperatorConvexG& g_umegaki() { return g_catalog()[1]; }

const OperatorConvexG& find_g(const std::string& id) {
  for (const auto& g : g_catalog()) {
    if (g.id == id) return g;
  }
  throw std::invalid_argument("unknown g '" + id + "' (known: g_wy, g_umegaki)");
}

Matrix relative_modular_apply(const DensityMatrix& rho, const DensityMatrix& sigma,
                              const ScalarFunction& g, const Matrix& x) {
  if (rho.dim() != sigma.dim() || x.rows() != rho.dim() || x.cols() != rho.dim()) {
    throw DimensionError("relative_modular_apply: dimension mismatch");
  }
  const auto& u = rho.spectrum();
  const auto& v = sigma.spectrum();
  // σ X ρ^{-1} acts on Y = V†XU as Y_ij ↦ (μ_i / λ_j) Y_ij.
  Matrix y = v.unitary.adjoint() * x * u.unitary;
  for (Index i = 0; i < y.rows(); ++i) {
    for (Index j = 0; j < y.cols(); ++j) {
      const double gij = g(v.eigenvalues(i) / u.eigenvalues(j));
      if (!std::isfinite(gij)) throw DomainError("relative_modular_apply: g not finite");
      y(i, j) *= gij;
    }
  }
  return v.unitary * y * u.unitary.adjoint();
}

double h_g_divergence(const DensityMatrix& rho, const DensityMatrix& sigma, const ScalarFunction& g) {
  const Matrix root = matrix_function(rho, [](double x) { return std::sqrt(x); }).matrix();
  return (root * relative_modular_apply(rho, sigma, g, root)).trace().real();
}

double h_g_divergence(const DensityMatrix& rho, const DensityMatrix& sigma, const OperatorConvexG& g) {
  return h_g_divergence(rho, sigma, g.g);
}

ScalarFunction f_from_g(const OperatorConvexG& g) {
  const auto direct = [g](double x) {
    const double u = x - 1.0;
    const double denom = g.g(x) + x * g.g(1.0 / x);
    if (denom == 0.0 || !std::isfinite(denom)) {
      throw DomainError("f_from_g: denominator vanishes at x = " + std::to_string(x));
    }
    return u * u / denom;
  };
  return [g, direct](double x) {
    const double u = x - 1.0;
    if (std::abs(u) >= kFgWindow) return direct(x);
    // g(x) + x g(1/x) = g''(1) u² (1 - u/2) + O(u⁴), so f = (1 + u/2)/g''(1) + O(u²);
    // g'''(1) cancels. The u² and u³ terms come from direct values at the
    // window edges, where the cancellation costs only ~eps/window².
    const double a = 1.0 / g.d2_at_1;
    const double b = 0.5 * a;
    const double h = kFgWindow;
    const double plus = direct(1.0 + h);
    const double minus = direct(1.0 - h);
    const double c2 = (0.5 * (plus + minus) - a) / (h * h);
    const double c3 = (0.5 * (plus - minus) - b * h) / (h * h * h);
    return a + u * (b + u * (c2 + u * c3));
  };
}

MonotoneFunctionEntry entry_from_g(const OperatorConvexG& g) {
  return entry_from_function("f[" + g.id + "]", f_from_g(g));
}

nlohmann::json to_json(const HessianCheck& h) {
  return {{"numeric", h.numeric}, {"analytic", h.analytic}, {"residual", h.residual}, {"step", h.step}};
}

HessianCheck hessian_check(const OperatorConvexG& g, const DensityMatrix& rho, const TangentVector& a,
                           const TangentVector& b, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("hessian_check: step must be positive");
  const auto op_norm = [](const TangentVector& t) {
    const auto ev = spectral_decompose(t.hermitian()).eigenvalues;
    return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  };
  const double spread = std::max(op_norm(a), op_norm(b));

  const auto shifted = [&](const TangentVector& dir, double s) {
    try {
      return DensityMatrix(rho.hermitian() + dir.hermitian() * s);
    } catch (const InvariantError&) {
      const double suggested = 0.5 * rho.min_eigenvalue() / std::max(spread, 1e-300);
      throw StepTooLargeError("hessian_check: step " + std::to_string(step) +
                                  " leaves the positive cone; try step <= " + std::to_string(suggested),
                              suggested);
    }
  };
  const DensityMatrix ap = shifted(a, step);
  const DensityMatrix am = shifted(a, -step);
  const DensityMatrix bp = shifted(b, step);
  const DensityMatrix bm = shifted(b, -step);

  const double mixed = (h_g_divergence(ap, bp, g) - h_g_divergence(ap, bm, g) -
                        h_g_divergence(am, bp, g) + h_g_divergence(am, bm, g)) /
                       (4.0 * step * step);
  HessianCheck out;
  out.step = step;
  out.numeric = -mixed;
  out.analytic = metric_eval(entry_from_g(g), rho, a, b).value;
  out.residual = std::abs(out.numeric - out.analytic);
  return out;
}

double alpha_from_g(const OperatorConvexG& g) {
  if (g.d2_at_1 == 0.0) throw DomainError("alpha_from_g: g''(1) = 0, alpha undefined");
  return 3.0 + 2.0 * g.d3_at_1 / g.d2_at_1;
}

double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("bures_distance: dimension mismatch");
  const Matrix root = matrix_function(rho, [](double x) { return std::sqrt(x); }).matrix();
  const HermitianMatrix inner = HermitianMatrix::hermitian_part(root * sigma.matrix() * root);
  const auto ev = spectral_decompose(inner).eigenvalues;
  double fidelity_root = 0.0;
  for (Index i = 0; i < ev.size(); ++i) fidelity_root += std::sqrt(std::max(0.0, ev(i)));
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::min(1.0, fidelity_root)));
}

}  // namespace qig
