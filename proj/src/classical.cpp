#include "qig/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qig/errors.hpp"

namespace qig::classical {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionError("vector lengths differ");
}

void require_tangent(const std::vector<double>& u) {
  const double s = std::accumulate(u.begin(), u.end(), 0.0);
  if (!(std::abs(s) <= kSimplexTolerance)) {
    throw InvariantError("tangent_sum_zero", "sum of tangent components = " + std::to_string(s));
  }
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw InvariantError("shape", "empty probability vector");
  for (double x : p_) {
    if (!(x > 0.0)) throw InvariantError("strictly_positive", "component " + std::to_string(x));
  }
  const double s = std::accumulate(p_.begin(), p_.end(), 0.0);
  if (!(std::abs(s - 1.0) <= kSimplexTolerance)) {
    throw InvariantError("unit_sum", "sum = " + std::to_string(s));
  }
}

ScoreVector::ScoreVector(std::vector<double> s, ProbabilityVector base)
    : s_(std::move(s)), base_(std::move(base)) {
  require_same_size(s_.size(), base_.size());
  double mean = 0.0;
  for (std::size_t i = 0; i < s_.size(); ++i) mean += base_[i] * s_[i];
  if (!(std::abs(mean) <= kSimplexTolerance)) {
    throw InvariantError("centered_score", "E_p(s) = " + std::to_string(mean));
  }
}

double fisher_rao_metric(const ProbabilityVector& p, const std::vector<double>& u,
                         const std::vector<double>& v) {
  require_same_size(p.size(), u.size());
  require_same_size(p.size(), v.size());
  require_tangent(u);
  require_tangent(v);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += u[i] * v[i] / p[i];
  return s;
}

double fisher_rao_scores(const ScoreVector& s, const ScoreVector& t) {
  require_same_size(s.values().size(), t.values().size());
  double out = 0.0;
  for (std::size_t i = 0; i < s.values().size(); ++i) {
    out += s.base()[i] * s.values()[i] * t.values()[i];
  }
  return out;
}

double bhattacharyya_distance(const ProbabilityVector& p, const ProbabilityVector& q) {
  require_same_size(p.size(), q.size());
  // Chord form of 2 arccos Σ√(p_i q_i): accurate for nearby points as well.
  double chord2 = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = std::sqrt(p[i]) - std::sqrt(q[i]);
    chord2 += d * d;
  }
  return 4.0 * std::asin(std::min(1.0, 0.5 * std::sqrt(chord2)));
}

ProbabilityVector classical_geodesic(const ProbabilityVector& p, const ProbabilityVector& q, double t) {
  require_same_size(p.size(), q.size());
  std::vector<double> out(p.size());
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double m = (1.0 - t) * std::sqrt(p[i]) + t * std::sqrt(q[i]);
    out[i] = m * m;
    total += out[i];
  }
  for (double& x : out) x /= total;
  return ProbabilityVector(std::move(out));
}

std::vector<double> simplex_sphere_map(const ProbabilityVector& p) {
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = 2.0 * std::sqrt(p[i]);
  return out;
}

std::vector<double> sphere_map_differential(const ProbabilityVector& p, const std::vector<double>& u) {
  require_same_size(p.size(), u.size());
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = u[i] / std::sqrt(p[i]);
  return out;
}

std::vector<double> score_to_tangent(const ScoreVector& s) {
  std::vector<double> u(s.values().size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = s.base()[i] * s.values()[i];
  return u;
}

ScoreVector tangent_to_score(const ProbabilityVector& p, const std::vector<double>& u) {
  require_same_size(p.size(), u.size());
  std::vector<double> s(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) s[i] = u[i] / p[i];
  return ScoreVector(std::move(s), p);
}

ScoreVector mixture_transport(const ScoreVector& s, const ProbabilityVector& to) {
  const auto& from = s.base();
  require_same_size(from.size(), to.size());
  std::vector<double> out(to.size());
  for (std::size_t i = 0; i < to.size(); ++i) out[i] = from[i] / to[i] * s.values()[i];
  return ScoreVector(std::move(out), to);
}

ScoreVector exponential_transport(const ScoreVector& s, const ProbabilityVector& to) {
  require_same_size(s.values().size(), to.size());
  double mean = 0.0;
  for (std::size_t i = 0; i < to.size(); ++i) mean += to[i] * s.values()[i];
  std::vector<double> out(to.size());
  for (std::size_t i = 0; i < to.size(); ++i) out[i] = s.values()[i] - mean;
  return ScoreVector(std::move(out), to);
}

double fisher_rao_scalar_curvature(std::size_t n) {
  const double m = static_cast<double>(n);
  return 0.25 * (m - 1.0) * (m - 2.0);
}

}  // namespace qig::classical
