#include "qig/spectral.hpp"

#include <cmath>
#include <string>

namespace qig {

// ---------------------------------------------------------------------------
// HermitianMatrix

double hermitian_asymmetry(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("matrix is not square");
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianMatrix::HermitianMatrix(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvariantError("shape", "expected a non-empty square matrix");
  }
  const double asym = hermitian_asymmetry(m);
  if (!(asym <= kHermitianTolerance)) {
    throw InvariantError("hermitian", "max |a_ij - conj(a_ji)| = " + std::to_string(asym));
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::hermitian_part(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("matrix is not square");
  return HermitianMatrix(Matrix(0.5 * (m + m.adjoint())), Unchecked{});
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  if (dim() != o.dim()) throw DimensionError("dimension mismatch in sum");
  return HermitianMatrix(Matrix(m_ + o.m_), Unchecked{});
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
  if (dim() != o.dim()) throw DimensionError("dimension mismatch in difference");
  return HermitianMatrix(Matrix(m_ - o.m_), Unchecked{});
}

HermitianMatrix HermitianMatrix::operator*(double s) const {
  return HermitianMatrix(Matrix(m_ * s), Unchecked{});
}

// ---------------------------------------------------------------------------
// Spectral decomposition

Matrix SpectralDecomposition::reconstruct() const {
  return unitary * eigenvalues.cast<Complex>().asDiagonal() * unitary.adjoint();
}

SpectralDecomposition spectral_decompose(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("Hermitian eigen-solver did not converge (n = " +
                           std::to_string(h.dim()) + ")");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

// ---------------------------------------------------------------------------
// DensityMatrix / TangentVector

DensityMatrix::DensityMatrix(const HermitianMatrix& h) : base_(h), spectrum_(spectral_decompose(h)) {
  const double tr = h.trace();
  if (!(std::abs(tr - 1.0) <= kTraceTolerance)) {
    throw InvariantError("unit_trace", "trace = " + std::to_string(tr));
  }
  if (!(spectrum_.eigenvalues(0) > 0.0)) {
    throw InvariantError("strictly_positive",
                         "smallest eigenvalue = " + std::to_string(spectrum_.eigenvalues(0)));
  }
}

DensityMatrix DensityMatrix::maximally_mixed(Index n) {
  return DensityMatrix(HermitianMatrix::identity(n) * (1.0 / static_cast<double>(n)));
}

DensityMatrix DensityMatrix::diagonal(const std::vector<double>& p) {
  RealVector d = Eigen::Map<const RealVector>(p.data(), static_cast<Index>(p.size()));
  return DensityMatrix(HermitianMatrix(Matrix(d.cast<Complex>().asDiagonal())));
}

TangentVector::TangentVector(const HermitianMatrix& h) : base_(h) {
  const double tr = h.trace();
  if (!(std::abs(tr) <= kTraceTolerance)) {
    throw InvariantError("traceless", "trace = " + std::to_string(tr));
  }
}

TangentVector TangentVector::traceless_part(const HermitianMatrix& h) {
  const double shift = h.trace() / static_cast<double>(h.dim());
  return TangentVector(h - HermitianMatrix::identity(h.dim()) * shift);
}

TangentVector TangentVector::operator+(const TangentVector& o) const {
  return TangentVector(base_ + o.base_);
}

TangentVector TangentVector::operator*(double s) const { return TangentVector(base_ * s); }

// ---------------------------------------------------------------------------
// Functional calculus and kernel superoperators

HermitianMatrix matrix_function(const SpectralDecomposition& s, const ScalarFunction& phi) {
  RealVector values(s.dim());
  for (Index i = 0; i < s.dim(); ++i) {
    const double v = phi(s.eigenvalues(i));
    if (!std::isfinite(v)) {
      throw DomainError("function undefined at eigenvalue " + std::to_string(s.eigenvalues(i)));
    }
    values(i) = v;
  }
  return HermitianMatrix::hermitian_part(s.unitary * values.cast<Complex>().asDiagonal() *
                                         s.unitary.adjoint());
}

HermitianMatrix matrix_function(const DensityMatrix& rho, const ScalarFunction& phi) {
  return matrix_function(rho.spectrum(), phi);
}

HermitianMatrix matrix_function(const HermitianMatrix& h, const ScalarFunction& phi) {
  return matrix_function(spectral_decompose(h), phi);
}

Matrix apply_kernel(const SpectralDecomposition& rho, const Kernel& k, const Matrix& x) {
  if (x.rows() != rho.dim() || x.cols() != rho.dim()) {
    throw DimensionError("kernel superoperator: operand dimension mismatch");
  }
  Matrix t = rho.unitary.adjoint() * x * rho.unitary;
  for (Index i = 0; i < t.rows(); ++i) {
    for (Index j = 0; j < t.cols(); ++j) {
      const double kij = k(rho.eigenvalues(i), rho.eigenvalues(j));
      if (!std::isfinite(kij)) {
        throw DomainError("kernel undefined at (" + std::to_string(rho.eigenvalues(i)) + ", " +
                          std::to_string(rho.eigenvalues(j)) + ")");
      }
      t(i, j) *= kij;
    }
  }
  return rho.unitary * t * rho.unitary.adjoint();
}

HermitianMatrix apply_kernel_superop(const DensityMatrix& rho, const Kernel& k,
                                     const HermitianMatrix& x) {
  const Matrix y = apply_kernel(rho.spectrum(), k, x.matrix());
  // Scale-aware check: the transform of a large operand carries roundoff
  // proportional to its magnitude.
  const double scale = std::max(1.0, y.cwiseAbs().maxCoeff());
  if (hermitian_asymmetry(y) > kHermitianTolerance * scale) {
    throw InvariantError("hermitian", "kernel superoperator output is not Hermitian; "
                                      "the kernel must be real and symmetric");
  }
  return HermitianMatrix::hermitian_part(y);
}

TangentSplit tangent_split(const DensityMatrix& rho, const TangentVector& a) {
  const auto& s = rho.spectrum();
  const Index n = s.dim();
  const RealVector& lam = s.eigenvalues;
  const double tol = kDegeneracyTolerance * std::max(1.0, lam(n - 1));

  // Eigenvalues are ascending, so blocks are runs of consecutive near-equal values.
  std::vector<Index> block(static_cast<std::size_t>(n), 0);
  for (Index i = 1; i < n; ++i) {
    block[i] = block[i - 1] + ((lam(i) - lam(i - 1) > tol) ? 1 : 0);
  }

  const Matrix at = s.unitary.adjoint() * a.matrix() * s.unitary;
  Matrix ac = Matrix::Zero(n, n);
  Matrix u = Matrix::Zero(n, n);
  const Complex i_unit(0.0, 1.0);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (block[i] == block[j]) {
        ac(i, j) = at(i, j);
      } else {
        // (i[ρ,U])_ij = i(λ_i - λ_j) U_ij in the eigenbasis.
        u(i, j) = at(i, j) / (i_unit * (lam(i) - lam(j)));
      }
    }
  }
  const Matrix& v = s.unitary;
  return {TangentVector(HermitianMatrix::hermitian_part(v * ac * v.adjoint())),
          HermitianMatrix::hermitian_part(v * u * v.adjoint())};
}

Complex hs_product(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("Hilbert-Schmidt product: dimension mismatch");
  }
  return (a.adjoint() * b).trace();
}

double hs_inner(const HermitianMatrix& a, const HermitianMatrix& b) {
  return hs_product(a.matrix(), b.matrix()).real();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

HermitianMatrix i_commutator(const HermitianMatrix& rho, const HermitianMatrix& u) {
  return HermitianMatrix::hermitian_part(Complex(0.0, 1.0) * commutator(rho.matrix(), u.matrix()));
}

}  // namespace qig
