#pragma once

// Fisher–Rao geometry of the open probability simplex, realised on the
// radius-2 sphere by p ↦ 2√p.

#include <vector>

namespace qig::classical {

inline constexpr double kSimplexTolerance = 1e-12;

/// Strictly positive probability vector; boundary points are rejected.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> p);

  std::size_t size() const noexcept { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  const std::vector<double>& values() const noexcept { return p_; }

 private:
  std::vector<double> p_;
};

/// Score representation of a tangent at `base`: Σ p_i s_i = 0.
class ScoreVector {
 public:
  ScoreVector(std::vector<double> s, ProbabilityVector base);

  const std::vector<double>& values() const noexcept { return s_; }
  const ProbabilityVector& base() const noexcept { return base_; }

 private:
  std::vector<double> s_;
  ProbabilityVector base_;
};

/// Σ u_i v_i / p_i for tangents with Σ u_i = 0.
double fisher_rao_metric(const ProbabilityVector& p, const std::vector<double>& u,
                         const std::vector<double>& v);

/// Fisher–Rao pairing in score form: Σ p_i s_i t_i.
double fisher_rao_scores(const ScoreVector& s, const ScoreVector& t);

/// 2 arccos Σ √(p_i q_i)
double bhattacharyya_distance(const ProbabilityVector& p, const ProbabilityVector& q);

/// ((1-t)√p + t√q)² normalised to the simplex.
ProbabilityVector classical_geodesic(const ProbabilityVector& p, const ProbabilityVector& q, double t);

/// 2(√p_1, …, √p_n), a point of the radius-2 sphere.
std::vector<double> simplex_sphere_map(const ProbabilityVector& p);

/// Differential of the sphere map: u_i / √p_i.
std::vector<double> sphere_map_differential(const ProbabilityVector& p, const std::vector<double>& u);

/// u = p·s and back.
std::vector<double> score_to_tangent(const ScoreVector& s);
ScoreVector tangent_to_score(const ProbabilityVector& p, const std::vector<double>& u);

/// Mixture transport ρ → σ: s ↦ (ρ/σ)·s.
ScoreVector mixture_transport(const ScoreVector& s, const ProbabilityVector& to);

/// Exponential transport ρ → σ: s ↦ s - E_σ(s).
ScoreVector exponential_transport(const ScoreVector& s, const ProbabilityVector& to);

/// (n-1)(n-2)/4, the constant curvature of the n-point simplex.
double fisher_rao_scalar_curvature(std::size_t n);

}  // namespace qig::classical
