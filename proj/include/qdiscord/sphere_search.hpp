#pragma once

// Minimization of an even function on the unit sphere S^2 (k and -k describe
// the same spin measurement).

#include <functional>
#include <vector>

#include "qdiscord/qstate.hpp"

namespace qd {

struct SphereCandidate {
  Vec3 direction;
  double value;
};

struct SphereObjective {
  std::function<double(const Vec3&)> value;
  /// Euclidean gradient; only its component tangent to the sphere is used.
  std::function<Vec3(const Vec3&)> gradient;
};

struct SphereSearchOptions {
  int grid_points = 512;       // Fibonacci points on the upper hemisphere
  int refine_count = 4;        // best distinct starting points refined locally
  double step_tolerance = 1e-9;
  double gradient_tolerance = 1e-8;
};

struct SphereMinimum {
  Vec3 direction;
  double value;
  double gradient_norm;                     // tangent gradient at the optimum
  std::vector<SphereCandidate> seeded;      // values at the supplied seeds
};

/// Deterministic quasi-uniform points on the hemisphere z >= 0.
std::vector<Vec3> fibonacci_hemisphere(int count);

/// Flip sign so the component of largest magnitude is positive (first index
/// wins among equal magnitudes).
Vec3 canonical_direction(const Vec3& k);

/// Seeds are evaluated and kept in `seeded`; the grid is added, and the best
/// `refine_count` distinct starts are refined by compass search on local
/// tangent coordinates followed by Newton polishing with the gradient.
SphereMinimum minimize_on_sphere(const SphereObjective& objective, const std::vector<Vec3>& seeds,
                                 const SphereSearchOptions& options = {});

}  // namespace qd
