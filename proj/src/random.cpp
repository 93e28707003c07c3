#include "qig/random.hpp"

#include <random>
#include <string>

namespace qig {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Matrix ginibre(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

// Columns of the Q factor of a Ginibre matrix, phases fixed so the
// distribution is Haar.
Matrix haar_isometry(Index rows, Index cols, std::mt19937_64& rng) {
  const Matrix g = ginibre(rows, cols, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  const Matrix r = qr.matrixQR();
  for (Index j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    if (a > 0.0) q.col(j) *= d / a;
  }
  return q;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

DensityMatrix random_density(Index n, std::uint64_t seed, double mix) {
  if (n < 1) throw DimensionError("random_density: n must be positive");
  if (!(mix > 0.0 && mix <= 1.0)) throw DomainError("random_density: mix must be in (0, 1]");
  std::mt19937_64 rng(seed);
  const Matrix g = ginibre(n, n, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (1.0 - mix) * rho + (mix / static_cast<double>(n)) * Matrix::Identity(n, n);
  return DensityMatrix(HermitianMatrix::hermitian_part(rho));
}

DensityMatrix random_density_with_floor(Index n, std::uint64_t seed, double min_eigenvalue) {
  const double mix = min_eigenvalue * static_cast<double>(n);
  if (!(mix > 0.0 && mix < 1.0)) {
    throw DomainError("random_density_with_floor: floor " + std::to_string(min_eigenvalue) +
                      " not attainable for n = " + std::to_string(n));
  }
  return random_density(n, seed, mix);
}

HermitianMatrix random_hermitian(Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Matrix g = ginibre(n, n, rng);
  return HermitianMatrix::hermitian_part(g);
}

TangentVector random_tangent(Index n, std::uint64_t seed) {
  return TangentVector::traceless_part(random_hermitian(n, seed));
}

Matrix random_unitary(Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_isometry(n, n, rng);
}

KrausChannel random_kraus_channel(Index n_in, Index n_out, Index env_dim, std::uint64_t seed) {
  if (n_in < 1 || n_out < 1 || env_dim < 1) {
    throw DimensionError("random_kraus_channel: dimensions must be positive");
  }
  if (n_out * env_dim < n_in) {
    throw DimensionError("random_kraus_channel: n_out * env_dim must be at least n_in");
  }
  std::mt19937_64 rng(seed);
  const Matrix v = haar_isometry(n_out * env_dim, n_in, rng);
  // Row index of V is (output i, environment e) ↦ i·env_dim + e.
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<std::size_t>(env_dim));
  for (Index e = 0; e < env_dim; ++e) {
    Matrix k(n_out, n_in);
    for (Index i = 0; i < n_out; ++i) k.row(i) = v.row(i * env_dim + e);
    kraus.push_back(std::move(k));
  }
  return KrausChannel(std::move(kraus));
}

}  // namespace qig
