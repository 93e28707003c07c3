#pragma once

// Scalar curvature of monotone metrics from the spectral triple sum over the
// auxiliary functions h1..h4 of the Chentsov–Morozova kernel.

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "qig/linalg.hpp"
#include "qig/monotone.hpp"

namespace qig {

struct HValues {
  double h1 = 0.0;
  double h2 = 0.0;
  double h3 = 0.0;
  double h4 = 0.0;
  double h = 0.0;  // h1 - h2/2 + 2 h3 - h4
};

/// Generic evaluation from c and ∂c/∂x. Coinciding (or nearly coinciding)
/// arguments are removable singularities; they are resolved by symmetric
/// jitter with Richardson extrapolation.
HValues h_funcs(const MonotoneFunctionEntry& e, double x, double y, double z);

/// Closed forms for the Wigner–Yanase kernel 4/(√x+√y)², regular on (0,∞)³.
HValues wy_h_closed_forms(double x, double y, double z);

/// (n²-1)(n²-2)/4: the difference between the curvature of D¹_n and D_n.
double unit_trace_correction(Index n);

struct CurvatureReport {
  std::string function_id;
  Index n = 0;
  double scal = 0.0;   // scalar curvature of D_n
  double scal1 = 0.0;  // scalar curvature of D¹_n
  std::vector<double> spectrum;
};

nlohmann::json to_json(const CurvatureReport& r);

/// Triple sum over the eigenvalue list (with multiplicity) minus the n
/// diagonal terms.
CurvatureReport scalar_curvature(const MonotoneFunctionEntry& e, const DensityMatrix& rho);
CurvatureReport scalar_curvature_from_spectrum(const MonotoneFunctionEntry& e,
                                               std::span<const double> spectrum);

}  // namespace qig
