#pragma once

// Value types for points and tangents of the quantum state manifold.
//
// All types are immutable after construction and validate their invariants
// on the way in. Internally computed matrices that are Hermitian up to
// roundoff go through HermitianMatrix::hermitian_part().

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "qig/errors.hpp"

namespace qig {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

using ScalarFunction = std::function<double(double)>;
using Kernel = std::function<double(double, double)>;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-10;

class HermitianMatrix {
 public:
  /// Validates entries[i][j] == conj(entries[j][i]) to kHermitianTolerance and
  /// stores the exact Hermitian part.
  explicit HermitianMatrix(const Matrix& m);

  /// Projection onto the Hermitian part without validation.
  static HermitianMatrix hermitian_part(const Matrix& m);

  static HermitianMatrix zero(Index n) { return hermitian_part(Matrix::Zero(n, n)); }
  static HermitianMatrix identity(Index n) { return hermitian_part(Matrix::Identity(n, n)); }

  Index dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  double trace() const { return m_.trace().real(); }
  double norm() const { return m_.norm(); }

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator-(const HermitianMatrix& o) const;
  HermitianMatrix operator*(double s) const;

 private:
  struct Unchecked {};
  HermitianMatrix(Matrix m, Unchecked) : m_(std::move(m)) {}
  Matrix m_;
};

inline HermitianMatrix operator*(double s, const HermitianMatrix& h) { return h * s; }

/// Maximum of |m(i,j) - conj(m(j,i))|.
double hermitian_asymmetry(const Matrix& m);

/// Eigenvalues ascending; columns of `unitary` are the eigenvectors.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix unitary;

  Matrix reconstruct() const;
  Index dim() const noexcept { return eigenvalues.size(); }
};

SpectralDecomposition spectral_decompose(const HermitianMatrix& h);

/// Strictly positive, unit-trace Hermitian matrix. Carries its spectral
/// decomposition, computed once at construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(const HermitianMatrix& h);
  explicit DensityMatrix(const Matrix& m) : DensityMatrix(HermitianMatrix(m)) {}

  static DensityMatrix maximally_mixed(Index n);
  static DensityMatrix diagonal(const std::vector<double>& p);

  Index dim() const noexcept { return base_.dim(); }
  const HermitianMatrix& hermitian() const noexcept { return base_; }
  const Matrix& matrix() const noexcept { return base_.matrix(); }
  const SpectralDecomposition& spectrum() const noexcept { return spectrum_; }
  const RealVector& eigenvalues() const noexcept { return spectrum_.eigenvalues; }
  double min_eigenvalue() const { return spectrum_.eigenvalues(0); }

 private:
  HermitianMatrix base_;
  SpectralDecomposition spectrum_;
};

/// Traceless Hermitian matrix: an element of the tangent space of D¹_n.
class TangentVector {
 public:
  explicit TangentVector(const HermitianMatrix& h);
  explicit TangentVector(const Matrix& m) : TangentVector(HermitianMatrix(m)) {}

  /// Removes the trace component of `h` instead of rejecting it.
  static TangentVector traceless_part(const HermitianMatrix& h);

  Index dim() const noexcept { return base_.dim(); }
  const HermitianMatrix& hermitian() const noexcept { return base_; }
  const Matrix& matrix() const noexcept { return base_.matrix(); }

  TangentVector operator+(const TangentVector& o) const;
  TangentVector operator*(double s) const;

 private:
  HermitianMatrix base_;
};

/// Commutant/commutator split of a tangent: A = commuting + i[ρ, generator].
struct TangentSplit {
  TangentVector commuting;
  HermitianMatrix generator;
};

}  // namespace qig
