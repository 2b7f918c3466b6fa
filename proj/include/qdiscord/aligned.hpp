#pragma once

// Mixtures of two aligned spin-1/2 pairs,
//   rho = (|tt><tt| + |-t-t><-t-t| + eps (|tt><-t-t| + h.c.)) / (2 (1 + eps cos^2 t)),
// with |t> = cos(t/2)|up> + sin(t/2)|down>. eps = 0 is the plain mixture; the
// definite-parity pair state of an n-spin chain has eps = +-cos^(n-2) t.

#include <optional>

#include "qdiscord/qstate.hpp"

namespace qd {

struct AlignedMixtureParams {
  double theta = 0.0;    // [0, pi/2]
  double epsilon = 0.0;  // (-1, 1]
  std::optional<int> n;  // chain size generating epsilon, when known

  /// epsilon = sector * cos^(n-2)(theta).
  static AlignedMixtureParams from_chain(double theta, int n, int sector);
  /// Throws DomainError on out-of-range fields or an inconsistent epsilon.
  void validate() const;
};

enum class MeasurementBranch { Z, X };

struct BranchValue {
  double value;
  MeasurementBranch branch;
};

enum class ConcurrenceType { None, Parallel, Antiparallel };

struct TypedConcurrence {
  double value;
  ConcurrenceType type;
};

TwoQubitBloch aligned_state(const AlignedMixtureParams& p);

/// Quantum discord of the eps = 0 mixture (measurement along x).
double aligned_discord(double theta);

/// cos^2 theta_c2 = 1/3.
double aligned_theta_c2();
/// cos^2 theta_c3 = (sqrt(17) - 3) / 4.
double aligned_theta_c3();

/// Geometric discord; branch z below theta_c2, x at and above it.
BranchValue aligned_I2(double theta);
/// Cubic (Tsallis q = 3) discord; branch z below theta_c3, x at and above it.
BranchValue aligned_I3(double theta);

/// |eps| sin^2 t / (1 + eps cos^2 t).
TypedConcurrence aligned_concurrence(const AlignedMixtureParams& p);

}  // namespace qd
