#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qig/curvature.hpp"
#include "qig/random.hpp"

using namespace qig;
using namespace qig::test;
using doctest::Approx;

namespace {

double wy_constant(Index n) {
  const double n2 = static_cast<double>(n * n);
  return (n2 - 1.0) * (n2 - 2.0) / 4.0;
}

/// Scalar curvature of D¹_n at ρ from metric samples only, in affine
/// coordinates ρ(θ) = ρ + Σ θ_k G_k over the Gell-Mann basis.
double fd_curvature(const MonotoneFunctionEntry& e, const DensityMatrix& rho, double step) {
  const auto basis = oracle::gell_mann_basis(rho.dim());
  const Index m = static_cast<Index>(basis.size());
  auto metric = [&](const Eigen::VectorXd& theta) {
    Matrix p = rho.matrix();
    for (Index k = 0; k < m; ++k) p += theta(k) * basis[static_cast<std::size_t>(k)];
    const DensityMatrix at(HermitianMatrix::hermitian_part(p));
    Eigen::MatrixXd g(m, m);
    for (Index i = 0; i < m; ++i) {
      for (Index j = i; j < m; ++j) {
        g(i, j) = g(j, i) = metric_eval(e, at, TangentVector(basis[static_cast<std::size_t>(i)]),
                                        TangentVector(basis[static_cast<std::size_t>(j)]))
                                .value;
      }
    }
    return g;
  };
  return oracle::FiniteDifferenceCurvature(metric, m, step).scalar_at(Eigen::VectorXd::Zero(m));
}

}  // namespace

TEST_SUITE("curvature") {

TEST_CASE("wy h-functions at fixed points") {
  const auto c = wy_h_closed_forms(1.0, 1.0, 1.0);
  CHECK(c.h1 == Approx(1.0 / 8.0).epsilon(1e-14));
  CHECK(c.h3 == Approx(1.0 / 8.0).epsilon(1e-14));
  CHECK(c.h4 == Approx(1.0 / 4.0).epsilon(1e-14));
  CHECK(wy_h_closed_forms(4.0, 1.0, 1.0).h2 == Approx(25.0 / 144.0).epsilon(1e-14));

  const auto g = h_funcs(wy_entry(), 1.0, 1.0, 1.0);
  CHECK(g.h1 == Approx(1.0 / 8.0).epsilon(1e-9));
  CHECK(g.h3 == Approx(1.0 / 8.0).epsilon(1e-9));
  CHECK(g.h4 == Approx(1.0 / 4.0).epsilon(1e-9));
  CHECK(h_funcs(wy_entry(), 4.0, 1.0, 1.0).h2 == Approx(25.0 / 144.0).epsilon(1e-9));
  CHECK(g.h == Approx(g.h1 - 0.5 * g.h2 + 2.0 * g.h3 - g.h4));
}

TEST_CASE("wy symmetrisation vanishes") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(1e-3, 1.0);
  for (int t = 0; t < 200; ++t) {
    const double x = u(rng), y = u(rng), z = u(rng);
    const auto first = [](double a, double b, double c) {
      const auto h = wy_h_closed_forms(a, b, c);
      return h.h1 - 0.5 * h.h2;
    };
    const auto second = [](double a, double b, double c) {
      const auto h = wy_h_closed_forms(a, b, c);
      return 2.0 * h.h3 - h.h4;
    };
    const auto scale = [&](double a, double b, double c) {
      const auto h = wy_h_closed_forms(a, b, c);
      return std::abs(h.h1) + std::abs(h.h2) + std::abs(h.h3) + std::abs(h.h4);
    };
    const double s = 1.0 + scale(x, y, z);
    CHECK(std::abs(oracle::symmetrize(first, x, y, z)) <= 1e-12 * s);
    CHECK(std::abs(oracle::symmetrize(second, x, y, z)) <= 1e-12 * s);
    const auto generic = [](double a, double b, double c) { return h_funcs(wy_entry(), a, b, c).h; };
    CHECK(std::abs(oracle::symmetrize(generic, x, y, z)) <= 1e-10 * s);
  }
}

TEST_CASE("generic h-functions match the wy closed forms") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(1e-3, 1.0);
  double worst = 0.0;
  const auto compare = [&](double x, double y, double z) {
    const auto a = h_funcs(wy_entry(), x, y, z);
    const auto b = wy_h_closed_forms(x, y, z);
    for (auto [p, q] : {std::pair{a.h1, b.h1}, {a.h2, b.h2}, {a.h3, b.h3}, {a.h4, b.h4}}) {
      worst = std::max(worst, std::abs(p - q) / std::max(1.0, std::abs(q)));
    }
  };
  for (int t = 0; t < 1000; ++t) compare(u(rng), u(rng), u(rng));
  // Coinciding and nearly coinciding arguments.
  for (double x : {1e-3, 0.2, 0.7}) {
    for (double gap : {0.0, 1e-12, 1e-9, 1e-7, 1e-5, 1e-3}) {
      compare(x, x * (1 + gap), 0.5);
      compare(x, 0.5, x * (1 + gap));
      compare(0.5, x, x * (1 + gap));
      compare(x, x * (1 + gap), x * (1 - gap));
    }
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("h-functions require a derivative kernel") {
  const auto fixture = entry_from_function("x", [](double x) { return (1.0 + x) / 2.0; });
  CHECK_THROWS(h_funcs(fixture, 0.2, 0.3, 0.4));
}

TEST_CASE("wy scalar curvature is constant") {
  for (Index n : {2, 3, 4}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto r = scalar_curvature(wy_entry(), random_density(n, seed));
      CHECK(r.scal1 == Approx(wy_constant(n)).epsilon(1e-6));
      CHECK(r.scal1 == r.scal + unit_trace_correction(n));
    }
  }
  CHECK(scalar_curvature(wy_entry(), DensityMatrix::maximally_mixed(3)).scal1 == Approx(14.0).epsilon(1e-9));
  const DensityMatrix nearly(diag({0.3, 0.3 + 1e-9, 0.4 - 1e-9}));
  CHECK(scalar_curvature(wy_entry(), nearly).scal1 == Approx(14.0).epsilon(1e-9));
  const DensityMatrix skewed(diag({1e-4, 0.25, 0.75 - 1e-4}));
  CHECK(std::abs(scalar_curvature(wy_entry(), skewed).scal1 - 14.0) <= 1e-6 * 81.0);
}

TEST_CASE("curvature agrees with a finite-difference oracle") {
  const auto rho = random_density_with_floor(2, 42, 0.1);
  for (const char* id : {"bkm", "wy", "sld", "rld"}) {
    CAPTURE(id);
    const auto& e = find_entry(id);
    const double engine = scalar_curvature(e, rho).scal1;
    const double fd = fd_curvature(e, rho, 1e-3);
    CHECK(std::abs(fd - engine) <= 1e-2 * std::abs(engine));
  }
  SUBCASE("n = 3, bkm") {
    const auto rho3 = random_density_with_floor(3, 42, 0.2 / 3.0);
    const auto& e = find_entry("bkm");
    const double engine = scalar_curvature(e, rho3).scal1;
    CHECK(std::abs(fd_curvature(e, rho3, 1e-3) - engine) <= 1e-2 * std::abs(engine));
  }
}

TEST_CASE("sld curvature on qubits") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CHECK(scalar_curvature(find_entry("sld"), random_density(2, seed)).scal1 == Approx(6.0).epsilon(1e-7));
  }
}

TEST_CASE("continuity at a degenerate spectrum fixes the multiplicity convention") {
  for (const char* id : {"bkm", "sld", "rld"}) {
    CAPTURE(id);
    const auto& e = find_entry(id);
    const Index n = 3;
    const auto rho = random_density(n, 77);
    const double limit = scalar_curvature(e, DensityMatrix::maximally_mixed(n)).scal;
    double previous = 0.0;
    bool first = true;
    for (double eps : {1e-2, 1e-4}) {
      const Matrix mixed = (1.0 - eps) * Matrix::Identity(n, n) / static_cast<double>(n) + eps * rho.matrix();
      const double residual =
          std::abs(scalar_curvature(e, DensityMatrix(HermitianMatrix::hermitian_part(mixed))).scal - limit);
      if (!first) CHECK(residual < previous);
      previous = residual;
      first = false;
    }
    CHECK(previous <= 1e-3 * (1.0 + std::abs(limit)));
    // Summing over the eigenvalue set instead would collapse I/n to a single point.
    const std::vector<double> as_set = {1.0 / static_cast<double>(n)};
    const double set_value = scalar_curvature_from_spectrum(e, as_set).scal;
    CHECK(std::abs(set_value - limit) > 1.0);
  }
}

TEST_CASE("unitary invariance and report") {
  const auto rho = random_density(3, 3);
  const auto u = random_unitary(3, 4);
  const DensityMatrix rotated(HermitianMatrix::hermitian_part(conj_by(u, rho.matrix())));
  for (const auto& e : catalog()) {
    const double a = scalar_curvature(e, rho).scal;
    CHECK(std::abs(scalar_curvature(e, rotated).scal - a) <= 1e-9 * (1.0 + std::abs(a)));
  }
  const auto j = to_json(scalar_curvature(wy_entry(), rho));
  for (const char* key : {"function_id", "n", "scal", "scal1", "spectrum"}) CHECK(j.contains(key));
  CHECK(j["spectrum"].size() == 3);
  CHECK(unit_trace_correction(2) == 1.5);
}

}  // TEST_SUITE
