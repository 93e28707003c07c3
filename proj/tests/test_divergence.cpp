#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "qig/divergence.hpp"
#include "qig/random.hpp"
#include "qig/spectral.hpp"
#include "qig/wy_geometry.hpp"

using namespace qig;
using namespace qig::test;
using doctest::Approx;

namespace {

Matrix sqrt_of(const DensityMatrix& rho) {
  return matrix_function(rho, [](double x) { return std::sqrt(x); }).matrix();
}

Matrix log_of(const DensityMatrix& rho) {
  return matrix_function(rho, [](double x) { return std::log(x); }).matrix();
}

}  // namespace

TEST_SUITE("divergences") {

TEST_CASE("catalog g invariants") {
  const auto grid = log_grid(1e-3, 1e3, 40);
  for (const auto& g : g_catalog()) {
    CAPTURE(g.id);
    CHECK(std::abs(g.g(1.0)) <= 1e-12);
    for (double x : grid) {
      for (double y : grid) {
        CHECK(g.g(0.5 * (x + y)) <= 0.5 * (g.g(x) + g.g(y)) + 1e-12);
      }
    }
    // Closed-form derivatives at 1 against central differences.
    const double h = 1e-3;
    const double d2 = (g.g(1 + h) - 2 * g.g(1) + g.g(1 - h)) / (h * h);
    const double d3 = (g.g(1 + 2 * h) - 2 * g.g(1 + h) + 2 * g.g(1 - h) - g.g(1 - 2 * h)) / (2 * h * h * h);
    CHECK(d2 == Approx(g.d2_at_1).epsilon(1e-5));
    CHECK(d3 == Approx(g.d3_at_1).epsilon(1e-4));
  }
  CHECK(find_g("g_wy").id == "g_wy");
  CHECK_THROWS_AS(find_g("kl"), std::invalid_argument);
}

TEST_CASE("relative modular operator") {
  const auto rho = random_density(3, 1);
  const auto sigma = random_density(3, 2);
  const Matrix root = sqrt_of(rho);
  SUBCASE("g(x) = x - 1") {
    const auto y = relative_modular_apply(rho, sigma, [](double x) { return x - 1.0; }, root);
    const Matrix expected = sigma.matrix() * root.inverse() - root;
    CHECK((y - expected).norm() < 1e-12);
  }
  SUBCASE("sigma = rho annihilates the commutant") {
    const auto y = relative_modular_apply(rho, rho, [](double x) { return std::log(x); }, rho.matrix());
    CHECK(y.norm() < 1e-13);
    const auto z = relative_modular_apply(rho, rho, [](double x) { return x - 1.0; }, root);
    CHECK(z.norm() < 1e-13);
  }
  SUBCASE("linearity") {
    const auto g = [](double x) { return 4.0 * (1.0 - std::sqrt(x)); };
    const Matrix x1 = random_hermitian(3, 5).matrix();
    const Matrix x2 = random_hermitian(3, 6).matrix();
    const Matrix lhs = relative_modular_apply(rho, sigma, g, 2.0 * x1 - 0.5 * x2);
    const Matrix rhs = 2.0 * relative_modular_apply(rho, sigma, g, x1) - 0.5 * relative_modular_apply(rho, sigma, g, x2);
    CHECK((lhs - rhs).norm() <= 1e-11 * (1.0 + lhs.norm()));
  }
  CHECK_THROWS(relative_modular_apply(rho, random_density(2, 3), [](double x) { return x; }, root));
}

TEST_CASE("relative g-entropies") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Index n = 2 + static_cast<Index>(seed % 4);
    const auto rho = random_density(n, seed);
    const auto sigma = random_density(n, seed + 500);
    const double wy = h_g_divergence(rho, sigma, g_wy());
    const double closed = 4.0 * (1.0 - (sqrt_of(rho) * sqrt_of(sigma)).trace().real());
    CHECK(std::abs(wy - closed) <= 1e-11);
    CHECK(wy >= 0.0);
    const double d = wy_distance(rho, sigma);
    CHECK(std::abs(wy - 4.0 * (1.0 - std::cos(d / 2.0))) <= 1e-11);

    const double um = h_g_divergence(rho, sigma, g_umegaki());
    const double relent = (rho.matrix() * (log_of(rho) - log_of(sigma))).trace().real();
    CHECK(std::abs(um - relent) <= 1e-10 * (1.0 + std::abs(relent)));
    CHECK(um >= 0.0);

    for (const auto& g : g_catalog()) CHECK(std::abs(h_g_divergence(rho, rho, g)) <= 1e-12);
  }
  SUBCASE("commuting pairs reduce to the classical divergence") {
    const std::vector<double> p = {0.1, 0.2, 0.3, 0.4};
    const std::vector<double> q = {0.4, 0.35, 0.05, 0.2};
    const DensityMatrix rho(diag(p));
    const DensityMatrix sigma(diag(q));
    for (const auto& g : g_catalog()) {
      double classical = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) classical += p[i] * g.g(q[i] / p[i]);
      CHECK(std::abs(h_g_divergence(rho, sigma, g) - classical) <= 1e-11);
    }
    double kl = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) kl += p[i] * std::log(p[i] / q[i]);
    CHECK(h_g_divergence(rho, sigma, g_umegaki()) == Approx(kl).epsilon(1e-12));
  }
  SUBCASE("diagonal fixture value") {
    const DensityMatrix a(diag({0.9, 0.1}));
    const DensityMatrix b(diag({0.1, 0.9}));
    CHECK(h_g_divergence(a, b, g_wy()) == Approx(1.6).epsilon(1e-14));
  }
}

TEST_CASE("data processing") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Index n = 2 + static_cast<Index>(seed % 2);
    const auto rho = random_density(n, 2 * seed);
    const auto sigma = random_density(n, 2 * seed + 1);
    const auto t = random_kraus_channel(n, n, 1 + static_cast<Index>(seed % 4), seed + 77);
    const auto tr = apply_channel(t, rho.hermitian());
    const auto ts = apply_channel(t, sigma.hermitian());
    const auto lo_r = spectral_decompose(tr).eigenvalues(0);
    const auto lo_s = spectral_decompose(ts).eigenvalues(0);
    if (lo_r <= 0.0 || lo_s <= 0.0) continue;
    for (const auto& g : g_catalog()) {
      CHECK(h_g_divergence(DensityMatrix(tr), DensityMatrix(ts), g) <= h_g_divergence(rho, sigma, g) + 1e-9);
    }
  }
}

TEST_CASE("induced monotone function") {
  const auto grid = log_grid(1e-3, 1e3, 100);
  const auto f_wy = f_from_g(g_wy());
  const auto f_um = f_from_g(g_umegaki());
  for (double x : grid) {
    CHECK(f_wy(x) == Approx(std::pow(std::sqrt(x) + 1.0, 2) / 4.0).epsilon(1e-12));
    CHECK(std::abs(f_wy(x) - wy_entry().f(x)) <= 1e-12 * std::max(1.0, wy_entry().f(x)));
    const double bkm = x == 1.0 ? 1.0 : (x - 1.0) / std::log(x);
    CHECK(f_um(x) == Approx(bkm).epsilon(1e-12));
    CHECK(f_wy(x) == Approx(x * f_wy(1.0 / x)).epsilon(1e-12));
  }
  CHECK(f_wy(1.0) == 1.0);
  CHECK(f_um(1.0) == 1.0);
  // Near 1 the direct quotient cancels to ~eps/(x-1)²; 1e-10 is what the
  // window construction guarantees on both sides of its edge.
  for (double u : {1e-14, 1e-12, 1e-8, 5e-5, 1e-4, 1e-3, 1.99e-3, 2.01e-3, 5e-3}) {
    for (double x : {1.0 + u, 1.0 - u}) {
      const double v = x - 1.0;
      CHECK(f_wy(x) == Approx(std::pow(std::sqrt(x) + 1.0, 2) / 4.0).epsilon(1e-10));
      CHECK(f_um(x) == Approx(v / std::log1p(v)).epsilon(1e-10));
    }
  }
  const auto entry = entry_from_g(g_wy());
  CHECK(entry.c(4.0, 1.0) == Approx(4.0 / 9.0).epsilon(1e-14));

  const OperatorConvexG flat{"flat", [](double) { return 0.0; }, 1.0, 0.0};
  CHECK_THROWS_AS(f_from_g(flat)(2.0), DomainError);
}

TEST_CASE("hessian identity") {
  for (const auto* g : {&g_wy(), &g_umegaki()}) {
    CAPTURE(g->id);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Index n = 2 + static_cast<Index>(seed % 3);
      const auto rho = random_density_with_floor(n, seed, 5e-2);
      auto a = random_tangent(n, seed + 10);
      auto b = random_tangent(n, seed + 20);
      a = a * (1.0 / a.hermitian().norm());
      b = b * (1.0 / b.hermitian().norm());
      const auto h = hessian_check(*g, rho, a, b);
      CHECK(h.residual <= 1e-4 * (1.0 + std::abs(h.analytic)));
      CHECK(h.step == 1e-3);
    }
  }
  SUBCASE("zero tangents") {
    const auto rho = random_density_with_floor(3, 1, 5e-2);
    const TangentVector zero(HermitianMatrix::zero(3));
    const auto h = hessian_check(g_wy(), rho, zero, zero);
    CHECK(h.numeric == 0.0);
    CHECK(h.analytic == 0.0);
  }
  SUBCASE("step halving") {
    const auto rho = random_density_with_floor(2, 4, 5e-2);
    const auto a = random_tangent(2, 5) * (1.0 / random_tangent(2, 5).hermitian().norm());
    const auto b = random_tangent(2, 6) * (1.0 / random_tangent(2, 6).hermitian().norm());
    const double r1 = hessian_check(g_umegaki(), rho, a, b, 1e-2).residual;
    const double r2 = hessian_check(g_umegaki(), rho, a, b, 5e-3).residual;
    CHECK(r1 / r2 == Approx(4.0).epsilon(0.1));
  }
  SUBCASE("step too large") {
    const auto rho = random_density_with_floor(2, 4, 5e-2);
    const auto a = random_tangent(2, 5);
    try {
      hessian_check(g_wy(), rho, a, a, 10.0);
      FAIL("stencil left the state space");
    } catch (const StepTooLargeError& e) {
      CHECK(e.suggested_step() > 0.0);
      CHECK(e.suggested_step() < 10.0);
      CHECK_NOTHROW(hessian_check(g_wy(), rho, a, a, e.suggested_step()));
    }
  }
  const auto j = to_json(HessianCheck{1.0, 1.0, 0.0, 1e-3});
  for (const char* key : {"numeric", "analytic", "residual", "step"}) CHECK(j.contains(key));
}

TEST_CASE("alpha from g") {
  CHECK(std::abs(alpha_from_g(g_wy())) <= 1e-12);
  CHECK(std::abs(alpha_from_g(g_umegaki()) + 1.0) <= 1e-12);
  const OperatorConvexG quadratic{"quadratic", [](double x) { return (x - 1.0) * (x - 1.0); }, 2.0, 0.0};
  CHECK(alpha_from_g(quadratic) == 3.0);
  const OperatorConvexG degenerate{"degenerate", [](double) { return 0.0; }, 0.0, 0.0};
  CHECK_THROWS_AS(alpha_from_g(degenerate), DomainError);
}

TEST_CASE("bures distance") {
  const DensityMatrix a(diag({0.9, 0.1}));
  const DensityMatrix b(diag({0.1, 0.9}));
  CHECK(bures_distance(a, a) < 1e-7);
  CHECK(bures_distance(a, b) == Approx(std::sqrt(0.8)).epsilon(1e-14));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Index n = 2 + static_cast<Index>(seed % 3);
    const auto r = random_density(n, seed);
    const auto s = random_density(n, seed + 1000);
    CHECK(std::abs(bures_distance(r, s) - bures_distance(s, r)) <= 1e-10);
    CHECK(bures_distance(r, s) > 0.0);
  }
}

}  // TEST_SUITE
