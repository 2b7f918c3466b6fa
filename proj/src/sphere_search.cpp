#include "qdiscord/sphere_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qd {

namespace {

// Orthonormal tangent basis at unit vector k.
std::pair<Vec3, Vec3> tangent_basis(const Vec3& k) {
  const Vec3 helper = std::abs(k.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  Vec3 e1 = (helper - helper.dot(k) * k).normalized();
  Vec3 e2 = k.cross(e1);
  return {e1, e2};
}

struct Chart {
  Vec3 center;
  Vec3 e1;
  Vec3 e2;

  explicit Chart(const Vec3& k) : center(k) { std::tie(e1, e2) = tangent_basis(k); }
  Vec3 point(double a, double b) const { return (center + a * e1 + b * e2).normalized(); }
};

double tangent_norm(const Vec3& grad, const Vec3& k) { return (grad - grad.dot(k) * k).norm(); }

struct LocalResult {
  Vec3 k;
  double value;
};

LocalResult compass_search(const SphereObjective& obj, Vec3 k, double value, double h, double h_min) {
  static constexpr std::array<std::array<double, 2>, 4> kMoves{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
  Chart chart(k);
  for (int iter = 0; iter < 20000 && h > h_min; ++iter) {
    bool moved = false;
    for (const auto& mv : kMoves) {
      const Vec3 trial = chart.point(h * mv[0], h * mv[1]);
      const double v = obj.value(trial);
      if (v < value) {
        k = trial;
        value = v;
        chart = Chart(k);
        moved = true;
        break;
      }
    }
    if (!moved) h *= 0.5;
  }
  return {k, value};
}

LocalResult newton_polish(const SphereObjective& obj, Vec3 k, double value, double grad_tol) {
  constexpr double kDelta = 1e-4;
  for (int iter = 0; iter < 30; ++iter) {
    const Chart chart(k);
    const Vec3 grad = obj.gradient(k);
    const Eigen::Vector2d g(grad.dot(chart.e1), grad.dot(chart.e2));
    if (g.norm() < 1e-3 * grad_tol) break;

    auto f = [&](double a, double b) { return obj.value(chart.point(a, b)); };
    Eigen::Matrix2d hess;
    hess(0, 0) = (f(kDelta, 0) - 2 * value + f(-kDelta, 0)) / (kDelta * kDelta);
    hess(1, 1) = (f(0, kDelta) - 2 * value + f(0, -kDelta)) / (kDelta * kDelta);
    hess(0, 1) = hess(1, 0) =
        (f(kDelta, kDelta) - f(kDelta, -kDelta) - f(-kDelta, kDelta) + f(-kDelta, -kDelta)) / (4 * kDelta * kDelta);

    Eigen::Vector2d step;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(hess);
    if (es.eigenvalues().minCoeff() > 1e-12) {
      step = -hess.ldlt().solve(g);
    } else {
      step = -g;
    }
    if (step.norm() > 0.1) step *= 0.1 / step.norm();

    bool accepted = false;
    for (int back = 0; back < 40; ++back) {
      const Vec3 trial = chart.point(step(0), step(1));
      const double v = obj.value(trial);
      const double gt = tangent_norm(obj.gradient(trial), trial);
      // Near the optimum values stop resolving; accept gradient reductions
      // that do not raise the value beyond roundoff.
      if (v < value || (v <= value + 1e-15 * std::max(1.0, std::abs(value)) && gt < g.norm())) {
        k = trial;
        value = std::min(value, v);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }
  return {k, value};
}

}  // namespace

std::vector<Vec3> fibonacci_hemisphere(int count) {
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(count));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - (i + 0.5) / count;  // (0, 1]
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    pts.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return pts;
}

Vec3 canonical_direction(const Vec3& k) {
  int idx = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(k(i)) > std::abs(k(idx)) + 1e-12) idx = i;
  }
  return k(idx) < 0 ? Vec3(-k) : k;
}

SphereMinimum minimize_on_sphere(const SphereObjective& objective, const std::vector<Vec3>& seeds,
                                 const SphereSearchOptions& options) {
  SphereMinimum out{Vec3::UnitZ(), 0.0, 0.0, {}};
  std::vector<SphereCandidate> starts;
  for (const Vec3& s : seeds) {
    const Vec3 k = s.normalized();
    const double v = objective.value(k);
    out.seeded.push_back({k, v});
    starts.push_back({k, v});
  }
  for (const Vec3& k : fibonacci_hemisphere(options.grid_points)) starts.push_back({k, objective.value(k)});

  std::stable_sort(starts.begin(), starts.end(),
                   [](const SphereCandidate& a, const SphereCandidate& b) { return a.value < b.value; });

  std::vector<SphereCandidate> picked;
  const double min_sep = std::cos(0.05);
  for (const auto& c : starts) {
    if (static_cast<int>(picked.size()) >= options.refine_count) break;
    const bool distinct = std::none_of(picked.begin(), picked.end(), [&](const SphereCandidate& p) {
      return std::abs(p.direction.dot(c.direction)) > min_sep;
    });
    if (distinct) picked.push_back(c);
  }

  SphereCandidate best = starts.front();
  for (const auto& p : picked) {
    LocalResult r = compass_search(objective, p.direction, p.value, 0.05, options.step_tolerance);
    if (objective.gradient) r = newton_polish(objective, r.k, r.value, options.gradient_tolerance);
    if (r.value < best.value) best = {r.k, r.value};
  }
  out.direction = canonical_direction(best.direction);
  out.value = best.value;
  out.gradient_norm = objective.gradient ? tangent_norm(objective.gradient(out.direction), out.direction) : 0.0;
  return out;
}

}  // namespace qd
