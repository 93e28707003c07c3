#pragma once

#include <cstdint>

#include "qig/channel.hpp"
#include "qig/linalg.hpp"

namespace qig {

/// Mixing weight toward I/n applied by random_density.
inline constexpr double kDensityFloorMix = 1e-3;

/// Independent stream seed for trial `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// G·G†/Tr(G·G†) for complex Gaussian G, then ρ ← (1-ε)ρ + ε·I/n.
/// The smallest eigenvalue is at least ε/n.
DensityMatrix random_density(Index n, std::uint64_t seed, double mix = kDensityFloorMix);

/// random_density with ε chosen so that the smallest eigenvalue is at least
/// `min_eigenvalue` (requires n·min_eigenvalue < 1).
DensityMatrix random_density_with_floor(Index n, std::uint64_t seed, double min_eigenvalue);

/// Gaussian Hermitian matrix (GUE-like, unit-variance entries).
HermitianMatrix random_hermitian(Index n, std::uint64_t seed);

/// Gaussian Hermitian minus (trace/n)·I.
TangentVector random_tangent(Index n, std::uint64_t seed);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
Matrix random_unitary(Index n, std::uint64_t seed);

/// Haar-random isometry C^{n_in} → C^{n_out} ⊗ C^{env_dim}, sliced into
/// env_dim Kraus operators. Requires n_out·env_dim ≥ n_in.
KrausChannel random_kraus_channel(Index n_in, Index n_out, Index env_dim, std::uint64_t seed);

}  // namespace qig
