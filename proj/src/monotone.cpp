#include "qig/monotone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "qig/random.hpp"
#include "qig/spectral.hpp"

namespace qig {

namespace {

// log(x) - log(y), accurate both near x = y and for widely separated values.
double log_ratio(double x, double y) {
  const double t = (x - y) / y;
  if (std::abs(t) < 0.5) return std::log1p(t);
  return std::log(x) - std::log(y);
}

double bkm_kernel(double x, double y) {
  const double d = x - y;
  if (std::abs(d) <= 1e-6 * std::max(x, y)) {
    const double t = d / y;
    return (1.0 - t / 2.0 + t * t / 3.0 - t * t * t / 4.0) / y;
  }
  return log_ratio(x, y) / d;
}

double bkm_kernel_dx(double x, double y) {
  const double d = x - y;
  const double t = d / y;
  if (std::abs(t) < 1e-2) {
    // d/dx log(x/y)/(x-y) = y^-2 Σ_{k≥2} (-1)^{k+1} (k-1)/k t^{k-2}
    double sum = 0.0;
    double tp = 1.0;
    for (int k = 2; k <= 10; ++k) {
      const double sign = (k % 2 == 0) ? -1.0 : 1.0;
      sum += sign * (static_cast<double>(k - 1) / k) * tp;
      tp *= t;
    }
    return sum / (y * y);
  }
  return (1.0 / x) / d - log_ratio(x, y) / (d * d);
}

// Near the diagonal log(x/y)/(x-y) = (1/y) Σ (-t)^k/(k+1), t = (x-y)/y; the
// series keeps the imaginary part of a complex step that the quotient loses.
Complex bkm_kernel_complex(Complex x, Complex y) {
  const Complex t = (x - y) / y;
  if (std::abs(t) < 1e-3) {
    Complex sum = 0.0;
    Complex tp = 1.0;
    for (int k = 0; k <= 8; ++k) {
      sum += tp / static_cast<double>(k + 1);
      tp *= -t;
    }
    return sum / y;
  }
  return (std::log(x) - std::log(y)) / (x - y);
}

std::vector<MonotoneFunctionEntry> build_catalog() {
  std::vector<MonotoneFunctionEntry> out;

  out.push_back({"wy",
                 [](double x) {
                   const double s = std::sqrt(x) + 1.0;
                   return 0.25 * s * s;
                 },
                 [](double x, double y) {
                   const double s = std::sqrt(x) + std::sqrt(y);
                   return 4.0 / (s * s);
                 },
                 [](double x, double y) {
                   const double sx = std::sqrt(x);
                   const double s = sx + std::sqrt(y);
                   return -4.0 / (sx * s * s * s);
                 },
                 [](Complex x, Complex y) {
                   const Complex s = std::sqrt(x) + std::sqrt(y);
                   return 4.0 / (s * s);
                 },
                 true});

  out.push_back({"sld", [](double x) { return 0.5 * (1.0 + x); },
                 [](double x, double y) { return 2.0 / (x + y); },
                 [](double x, double y) { return -2.0 / ((x + y) * (x + y)); },
                 [](Complex x, Complex y) { return 2.0 / (x + y); }, true});

  out.push_back({"bkm",
                 [](double x) {
                   const double u = x - 1.0;
                   if (u == 0.0) return 1.0;
                   return u / log_ratio(x, 1.0);
                 },
                 bkm_kernel, bkm_kernel_dx,
                 bkm_kernel_complex, true});

  out.push_back({"rld", [](double x) { return 2.0 * x / (1.0 + x); },
                 [](double x, double y) { return (x + y) / (2.0 * x * y); },
                 [](double x, double) { return -0.5 / (x * x); },
                 [](Complex x, Complex y) { return (x + y) / (2.0 * x * y); }, true});
  return out;
}

}  // namespace

const std::vector<MonotoneFunctionEntry>& catalog() {
  static const std::vector<MonotoneFunctionEntry> entries = build_catalog();
  return entries;
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& e : catalog()) ids.push_back(e.id);
  return ids;
}

const MonotoneFunctionEntry& find_entry(const std::string& id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  std::string known;
  for (const auto& k : catalog_ids()) known += (known.empty() ? "" : ", ") + k;
  throw std::invalid_argument("unknown monotone function '" + id + "' (known: " + known + ")");
}

const MonotoneFunctionEntry& wy_entry() { return catalog().front(); }

MonotoneFunctionEntry entry_from_function(std::string id, ScalarFunction f) {
  MonotoneFunctionEntry e;
  e.id = std::move(id);
  e.f = f;
  e.c = [f](double x, double y) { return 1.0 / (y * f(x / y)); };
  return e;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(points));
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < points; ++i) {
    const double s = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    g.push_back(std::exp(a + s * (b - a)));
  }
  return g;
}

EntryDiagnostics diagnose_entry(const MonotoneFunctionEntry& e, int grid_points) {
  EntryDiagnostics d;
  d.normalization = std::abs(e.f(1.0) - 1.0);
  const auto grid = log_grid(1e-3, 1e3, grid_points);
  for (double x : grid) {
    d.symmetry = std::max(d.symmetry, std::abs(e.f(x) - x * e.f(1.0 / x)));
    d.diagonal = std::max(d.diagonal, std::abs(e.c(x, x) - 1.0 / x));
    for (double y : grid) {
      d.consistency = std::max(d.consistency, std::abs(e.c(x, y) - 1.0 / (y * e.f(x / y))));
    }
  }
  return d;
}

MetricValue metric_eval(const MonotoneFunctionEntry& e, const DensityMatrix& rho,
                        const TangentVector& a, const TangentVector& b) {
  if (a.dim() != rho.dim() || b.dim() != rho.dim()) {
    throw DimensionError("metric_eval: tangent and state dimensions differ");
  }
  const Matrix cb = apply_kernel(rho.spectrum(), e.c, b.matrix());
  return {hs_product(a.matrix(), cb).real(), e.id};
}

double skew_information(const DensityMatrix& rho, const HermitianMatrix& a) {
  if (a.dim() != rho.dim()) throw DimensionError("skew_information: dimension mismatch");
  const HermitianMatrix root = matrix_function(rho, [](double x) { return std::sqrt(x); });
  // C = [√ρ, A] is anti-Hermitian, so -Tr(C²) = Tr(C†C) = ‖C‖²_HS.
  return commutator(root.matrix(), a.matrix()).squaredNorm();
}

IdentityCheck wy_identity_check(const DensityMatrix& rho, const HermitianMatrix& a) {
  const TangentVector x(i_commutator(rho.hermitian(), a));
  IdentityCheck out;
  out.lhs = metric_eval(wy_entry(), rho, x, x).value;
  out.rhs = 4.0 * skew_information(rho, a);
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

nlohmann::json to_json(const MonotonicityReport& r) {
  return {{"function_id", r.function_id},
          {"trials", r.trials},
          {"violations", r.violations},
          {"worst_margin", r.worst_margin},
          {"skipped", r.skipped}};
}

MonotonicityReport sampled_operator_monotonicity(const MonotoneFunctionEntry& e, int trials, Index n,
                                                 std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  MonotonicityReport report{e.id, trials, 0, std::numeric_limits<double>::infinity(), 0};
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_int_distribution<Index> rank_dist(1, n);
    std::uniform_real_distribution<double> log_scale(std::log(1e-2), std::log(1.0));

    auto gaussian = [&](Index rows, Index cols) {
      Matrix g(rows, cols);
      for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) {
          const double re = normal(rng);
          g(i, j) = Complex(re, normal(rng));
        }
      }
      return g;
    };

    const Matrix g = gaussian(n, n);
    const Matrix a = g * g.adjoint() / static_cast<double>(n) + 1e-3 * Matrix::Identity(n, n);
    const Index k = rank_dist(rng);
    const Matrix p = gaussian(k, n) * std::exp(log_scale(rng));
    const Matrix b = a + p.adjoint() * p;

    try {
      const HermitianMatrix fa = matrix_function(HermitianMatrix::hermitian_part(a), e.f);
      const HermitianMatrix fb = matrix_function(HermitianMatrix::hermitian_part(b), e.f);
      const double margin = spectral_decompose(fb - fa).eigenvalues(0);
      report.worst_margin = std::min(report.worst_margin, margin);
      if (margin < -kMonotonicitySlack) ++report.violations;
    } catch (const DomainError&) {
      ++report.skipped;
    }
  }
  return report;
}

ContractionOutcome contraction_check(const MonotoneFunctionEntry& e, const KrausChannel& t,
                                     const DensityMatrix& rho, const TangentVector& a) {
  ContractionOutcome out;
  out.g_before = metric_eval(e, rho, a, a).value;

  HermitianMatrix image = t.apply(rho.hermitian());
  HermitianMatrix tangent_image = t.apply(a.hermitian());
  constexpr double kPositivityFloor = 1e-10;
  constexpr double kFloorMix = 1e-3;
  if (spectral_decompose(image).eigenvalues(0) < kPositivityFloor) {
    // Post-compose with a depolarizing step so the comparison stays a
    // contraction statement about a CPTP map.
    const Index m = t.output_dim();
    image = image * (1.0 - kFloorMix) + HermitianMatrix::identity(m) * (kFloorMix / static_cast<double>(m));
    tangent_image = tangent_image * (1.0 - kFloorMix);
    out.floored = true;
  }
  try {
    const DensityMatrix sigma(image);
    const TangentVector b = TangentVector::traceless_part(tangent_image);
    out.g_after = metric_eval(e, sigma, b, b).value;
  } catch (const InvariantError& err) {
    out.skipped = true;
    out.skip_reason = std::string("image not a full-rank state: ") + err.what();
  }
  return out;
}

}  // namespace qig
