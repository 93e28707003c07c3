#include "qig/channel.hpp"

#include <cmath>
#include <string>

namespace qig {

namespace {
double completeness(const std::vector<Matrix>& kraus, Index n_in) {
  Matrix sum = Matrix::Zero(n_in, n_in);
  for (const auto& k : kraus) sum += k.adjoint() * k;
  return (sum - Matrix::Identity(n_in, n_in)).cwiseAbs().maxCoeff();
}
}  // namespace

KrausChannel::KrausChannel(std::vector<Matrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw InvariantError("kraus_nonempty", "no Kraus operators given");
  output_dim_ = kraus_.front().rows();
  input_dim_ = kraus_.front().cols();
  if (input_dim_ == 0 || output_dim_ == 0) {
    throw InvariantError("shape", "Kraus operators must be non-empty");
  }
  for (const auto& k : kraus_) {
    if (k.rows() != output_dim_ || k.cols() != input_dim_) {
      throw InvariantError("shape", "Kraus operators must share one shape");
    }
  }
  const double r = completeness(kraus_, input_dim_);
  if (!(r <= kTraceTolerance)) {
    throw InvariantError("trace_preserving", "max |sum K^dag K - I| = " + std::to_string(r));
  }
}

double KrausChannel::completeness_residual() const { return completeness(kraus_, input_dim_); }

HermitianMatrix KrausChannel::apply(const HermitianMatrix& x) const {
  if (x.dim() != input_dim_) {
    throw DimensionError("channel input dimension " + std::to_string(input_dim_) +
                         ", operand dimension " + std::to_string(x.dim()));
  }
  Matrix out = Matrix::Zero(output_dim_, output_dim_);
  for (const auto& k : kraus_) out += k * x.matrix() * k.adjoint();
  return HermitianMatrix::hermitian_part(out);
}

HermitianMatrix apply_channel(const KrausChannel& t, const HermitianMatrix& x) { return t.apply(x); }

KrausChannel identity_channel(Index n) { return KrausChannel({Matrix::Identity(n, n)}); }

KrausChannel completely_depolarizing_channel(Index n) {
  std::vector<Matrix> kraus;
  const double w = 1.0 / std::sqrt(static_cast<double>(n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Matrix k = Matrix::Zero(n, n);
      k(i, j) = w;
      kraus.push_back(std::move(k));
    }
  }
  return KrausChannel(std::move(kraus));
}

}  // namespace qig
