#pragma once

#include <vector>

#include "qig/linalg.hpp"

namespace qig {

/// Completely positive trace-preserving map in Kraus form, X ↦ Σ K_i X K_i†.
class KrausChannel {
 public:
  /// Each Kraus operator is output_dim × input_dim; Σ K_i†K_i must equal the
  /// identity to within kTraceTolerance.
  explicit KrausChannel(std::vector<Matrix> kraus);

  Index input_dim() const noexcept { return input_dim_; }
  Index output_dim() const noexcept { return output_dim_; }
  const std::vector<Matrix>& kraus() const noexcept { return kraus_; }

  /// max |Σ K_i†K_i - I|
  double completeness_residual() const;

  HermitianMatrix apply(const HermitianMatrix& x) const;

 private:
  Index input_dim_ = 0;
  Index output_dim_ = 0;
  std::vector<Matrix> kraus_;
};

HermitianMatrix apply_channel(const KrausChannel& t, const HermitianMatrix& x);

KrausChannel identity_channel(Index n);

/// X ↦ Tr(X)·I/n, realised with the n² Kraus operators |i⟩⟨j|/√n.
KrausChannel completely_depolarizing_channel(Index n);

}  // namespace qig
