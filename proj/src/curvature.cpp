#include "qig/curvature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace qig {

namespace {

using Fn3 = std::function<double(double, double, double)>;
using Vec3 = std::array<double, 3>;

// First-order removable singularities (h2, h3): direct evaluation loses about
// eps/gap, so below the threshold we extrapolate from jittered points.
constexpr double kSimpleGap = 1e-6;
constexpr double kSimpleJitter = 1e-4;
constexpr int kSimpleLevels = 2;

// h1 cancels to O(gap_xz · gap_yz); its jitter must dominate gaps up to 1e-3.
constexpr double kProductGap = 1e-5;
constexpr double kDoubleGap = 1e-3;
constexpr double kWideJitter = 3e-2;
constexpr int kWideLevels = 4;

double rel_gap(double a, double b) { return std::abs(a - b) / std::max(a, b); }

// Limit of g at p along direction e: S(δ) = (g(p+δe) + g(p-δe))/2 has an
// expansion in δ², eliminated term by term over `levels` halvings of δ.
double jitter_limit(const Fn3& g, const Vec3& p, const Vec3& e, double delta, int levels) {
  std::vector<double> t(static_cast<std::size_t>(levels));
  double d = delta;
  for (int k = 0; k < levels; ++k, d *= 0.5) {
    const double plus = g(p[0] + d * e[0], p[1] + d * e[1], p[2] + d * e[2]);
    const double minus = g(p[0] - d * e[0], p[1] - d * e[1], p[2] - d * e[2]);
    t[static_cast<std::size_t>(k)] = 0.5 * (plus + minus);
  }
  double factor = 1.0;
  for (int m = 1; m < levels; ++m) {
    factor *= 4.0;
    for (int k = levels - 1; k >= m; --k) {
      const auto ku = static_cast<std::size_t>(k);
      t[ku] = (factor * t[ku] - t[ku - 1]) / (factor - 1.0);
    }
  }
  return t.back();
}

void require_finite(double v, const char* name, double x, double y, double z) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(name) + " not finite at (" + std::to_string(x) + ", " +
                      std::to_string(y) + ", " + std::to_string(z) + ")");
  }
}

double eval_h1(const Kernel& c, double x, double y, double z) {
  const Fn3 raw = [&c](double a, double b, double w) {
    const double caw = c(a, w);
    const double cbw = c(b, w);
    return (c(a, b) - w * caw * cbw) / ((a - w) * (b - w) * caw * cbw);
  };
  const double gx = rel_gap(x, z);
  const double gy = rel_gap(y, z);
  const Vec3 p{x, y, z};
  if (gx * gy >= kProductGap) return raw(x, y, z);
  if (gx < kDoubleGap && gy < kDoubleGap) {
    return jitter_limit(raw, p, {1.0, -1.0, 0.0}, kWideJitter * std::max({x, y, z}), kWideLevels);
  }
  if (gx < gy) {
    return jitter_limit(raw, p, {1.0, 0.0, 0.0}, kWideJitter * std::max(x, z), kWideLevels);
  }
  return jitter_limit(raw, p, {0.0, 1.0, 0.0}, kWideJitter * std::max(y, z), kWideLevels);
}

double eval_h2(const Kernel& c, double x, double y, double z) {
  const Fn3 raw = [&c](double a, double b, double w) {
    const double q = (c(a, w) - c(b, w)) / (a - b);
    return q * q / (c(a, b) * c(a, w) * c(b, w));
  };
  if (rel_gap(x, y) >= kSimpleGap) return raw(x, y, z);
  return jitter_limit(raw, {x, y, z}, {1.0, -1.0, 0.0}, kSimpleJitter * std::max(x, y),
                      kSimpleLevels);
}

double eval_h3(const Kernel& log_c_prime, double x, double y, double z) {
  const Fn3 raw = [&log_c_prime](double a, double b, double w) {
    return w * (log_c_prime(w, a) - log_c_prime(w, b)) / (a - b);
  };
  if (rel_gap(x, y) >= kSimpleGap) return raw(x, y, z);
  return jitter_limit(raw, {x, y, z}, {1.0, -1.0, 0.0}, kSimpleJitter * std::max(x, y),
                      kSimpleLevels);
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace

HValues h_funcs(const MonotoneFunctionEntry& e, double x, double y, double z) {
  if (!(x > 0.0 && y > 0.0 && z > 0.0)) throw DomainError("h_funcs: arguments must be positive");
  if (!e.dc_dx) throw DomainError("h_funcs: entry '" + e.id + "' has no kernel derivative");
  // (log c)'(a, b) = ∂_a c(a, b) / c(a, b)
  const Kernel log_c_prime = [&e](double a, double b) { return e.dc_dx(a, b) / e.c(a, b); };

  HValues h;
  h.h1 = eval_h1(e.c, x, y, z);
  h.h2 = eval_h2(e.c, x, y, z);
  h.h3 = eval_h3(log_c_prime, x, y, z);
  h.h4 = z * log_c_prime(z, x) * log_c_prime(z, y);
  h.h = h.h1 - 0.5 * h.h2 + 2.0 * h.h3 - h.h4;
  require_finite(h.h1, "h1", x, y, z);
  require_finite(h.h2, "h2", x, y, z);
  require_finite(h.h3, "h3", x, y, z);
  require_finite(h.h4, "h4", x, y, z);
  return h;
}

HValues wy_h_closed_forms(double x, double y, double z) {
  if (!(x > 0.0 && y > 0.0 && z > 0.0)) {
    throw DomainError("wy_h_closed_forms: arguments must be positive");
  }
  const double sx = std::sqrt(x);
  const double sy = std::sqrt(y);
  const double sz = std::sqrt(z);
  const double xy = sx + sy;
  const double xz = sx + sz;
  const double yz = sy + sz;
  HValues h;
  h.h1 = (sx * sy + 3.0 * sx * sz + 3.0 * sy * sz + z) / (4.0 * xy * xy * xz * yz);
  const double s = sx + sy + 2.0 * sz;
  h.h2 = s * s / (4.0 * xz * xz * yz * yz);
  h.h3 = sz / (xy * xz * yz);
  h.h4 = 1.0 / (xz * yz);
  h.h = h.h1 - 0.5 * h.h2 + 2.0 * h.h3 - h.h4;
  return h;
}

double unit_trace_correction(Index n) {
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  return 0.25 * (n2 - 1.0) * (n2 - 2.0);
}

nlohmann::json to_json(const CurvatureReport& r) {
  return {{"function_id", r.function_id},
          {"n", r.n},
          {"scal", r.scal},
          {"scal1", r.scal1},
          {"spectrum", r.spectrum}};
}

CurvatureReport scalar_curvature_from_spectrum(const MonotoneFunctionEntry& e,
                                               std::span<const double> spectrum) {
  const auto n = spectrum.size();
  if (n == 0) throw DimensionError("scalar_curvature: empty spectrum");
  std::vector<double> terms;
  terms.reserve(n * n * n);
  for (double x : spectrum) {
    for (double y : spectrum) {
      for (double z : spectrum) terms.push_back(h_funcs(e, x, y, z).h);
    }
  }
  std::vector<double> diag;
  diag.reserve(n);
  for (double x : spectrum) diag.push_back(h_funcs(e, x, x, x).h);

  CurvatureReport r;
  r.function_id = e.id;
  r.n = static_cast<Index>(n);
  r.scal = pairwise_sum(terms) - pairwise_sum(diag);
  r.scal1 = r.scal + unit_trace_correction(r.n);
  r.spectrum.assign(spectrum.begin(), spectrum.end());
  return r;
}

CurvatureReport scalar_curvature(const MonotoneFunctionEntry& e, const DensityMatrix& rho) {
  const RealVector& lam = rho.eigenvalues();
  std::vector<double> spectrum(lam.data(), lam.data() + lam.size());
  return scalar_curvature_from_spectrum(e, spectrum);
}

}  // namespace qig
