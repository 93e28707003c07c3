#pragma once

// Petz-classified monotone metrics: operator monotone functions, their
// Chentsov–Morozova kernels, and sampled monotonicity / contraction checks.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qig/channel.hpp"
#include "qig/linalg.hpp"

namespace qig {

using ComplexKernel = std::function<Complex(Complex, Complex)>;

/// A normalised symmetric operator monotone function f together with its
/// kernel c(x,y) = 1/(y·f(x/y)) and ∂c/∂x. `dc_dx` may be empty for test
/// fixtures; `c_complex` is set when the kernel accepts complex arguments
/// near the positive axis (used for complex-step checks of dc_dx).
struct MonotoneFunctionEntry {
  std::string id;
  ScalarFunction f;
  Kernel c;
  Kernel dc_dx;
  ComplexKernel c_complex;
  bool complex_evaluable = false;
};

/// The shipped entries, in order: wy, sld, bkm, rld.
const std::vector<MonotoneFunctionEntry>& catalog();

/// Throws std::invalid_argument listing the catalog ids when `id` is unknown.
const MonotoneFunctionEntry& find_entry(const std::string& id);
std::vector<std::string> catalog_ids();

const MonotoneFunctionEntry& wy_entry();

/// Entry for an arbitrary f with kernel derived as 1/(y f(x/y)); no dc_dx.
MonotoneFunctionEntry entry_from_function(std::string id, ScalarFunction f);

/// Worst-case residuals of the entry invariants over a log grid on [1e-3, 1e3].
struct EntryDiagnostics {
  double normalization = 0.0;  // |f(1) - 1|
  double symmetry = 0.0;       // max |f(x) - x f(1/x)|
  double consistency = 0.0;    // max |c(x,y) - 1/(y f(x/y))|
  double diagonal = 0.0;       // max |c(x,x) - 1/x|
};
EntryDiagnostics diagnose_entry(const MonotoneFunctionEntry& e, int grid_points = 100);

/// Log-spaced grid of `points` values on [lo, hi].
std::vector<double> log_grid(double lo, double hi, int points);

struct MetricValue {
  double value = 0.0;
  std::string function_id;
};

/// ⟨A,B⟩_{ρ,f} = Tr(A · c_f(L_ρ, R_ρ)(B)).
MetricValue metric_eval(const MonotoneFunctionEntry& e, const DensityMatrix& rho,
                        const TangentVector& a, const TangentVector& b);

/// I(ρ,A) = -Tr([ρ^{1/2}, A]^2).
double skew_information(const DensityMatrix& rho, const HermitianMatrix& a);

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

/// Compares ⟨i[ρ,A], i[ρ,A]⟩_wy with 4·I(ρ,A).
IdentityCheck wy_identity_check(const DensityMatrix& rho, const HermitianMatrix& a);

inline constexpr double kMonotonicitySlack = 1e-9;

struct MonotonicityReport {
  std::string function_id;
  int trials = 0;
  int violations = 0;
  double worst_margin = 0.0;  // smallest eigenvalue of f(B) - f(A) seen
  int skipped = 0;
};

nlohmann::json to_json(const MonotonicityReport& r);

/// Draws 0 < A ≤ B = A + P†P and checks λ_min(f(B) - f(A)) ≥ -1e-9.
/// Violations are counted, never thrown.
MonotonicityReport sampled_operator_monotonicity(const MonotoneFunctionEntry& e, int trials, Index n,
                                                 std::uint64_t seed);

inline constexpr double kContractionSlack = 1e-9;

struct ContractionOutcome {
  bool skipped = false;
  std::string skip_reason;
  double g_before = 0.0;
  double g_after = 0.0;
  bool floored = false;  // T(ρ) was mixed toward I/m to restore positivity
  bool violates() const {
    return !skipped && g_after > g_before + kContractionSlack * (1.0 + g_before);
  }
};

/// g_{T(ρ)}(TA, TA) against g_ρ(A, A).
ContractionOutcome contraction_check(const MonotoneFunctionEntry& e, const KrausChannel& t,
                                     const DensityMatrix& rho, const TangentVector& a);

}  // namespace qig
