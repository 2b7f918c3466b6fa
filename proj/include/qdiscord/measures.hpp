#pragma once

// Local projective measurements on one qubit of a pair and the correlation
// measures built on them: quantum discord, generalized information deficits
// I_f (one-way deficit, geometric and cubic discord), their closed forms,
// and stationarity residuals.

#include <array>
#include <vector>

#include "qdiscord/entropy.hpp"
#include "qdiscord/qstate.hpp"
#include "qdiscord/sphere_search.hpp"

namespace qd {

/// Unit vector defining the spin measurement {(1 +- k.sigma)/2}.
class MeasurementDirection {
 public:
  /// Throws DomainError unless |k| = 1 within 1e-12.
  explicit MeasurementDirection(const Vec3& k);
  static MeasurementDirection normalized(const Vec3& k);

  const Vec3& vec() const { return k_; }

 private:
  struct Unchecked {};
  MeasurementDirection(const Vec3& k, Unchecked) : k_(k) {}
  Vec3 k_;
};

struct MeasureResult {
  double value = 0.0;
  Vec3 optimal_direction = Vec3::UnitZ();
  double stationarity_residual = 0.0;
  std::vector<SphereCandidate> candidate_values;  // stationary-axis candidates
  bool tie = false;                 // degenerate optimal direction
  bool residual_divergent = false;  // residual evaluated with a clamped f'
};

struct StationarityResidual {
  double value = 0.0;
  bool divergent = false;
};

/// Post-measurement state on B: r_B -> (r_B.k) k, J -> J k k^t.
TwoQubitBloch post_measurement_state(const TwoQubitBloch& b, const MeasurementDirection& k);

/// Eigenvalues p_nu^nu' = (1 + nu r_B.k + nu' lambda_nu)/4 with
/// lambda_nu = |r_A + nu J k|, ordered (++, +-, -+, --).
std::array<double, 4> post_measurement_spectrum(const TwoQubitBloch& b, const MeasurementDirection& k);

/// S(rho_AB) - S(rho_B) in bits; negative for entangled pure states.
double conditional_entropy_quantum(const DensityMatrix& rho, int dim_a, int dim_b);

/// S(rho'_AB) - S(rho'_B) after measuring B along k; never negative.
double conditional_entropy_measured(const TwoQubitBloch& b, const MeasurementDirection& k);

double mutual_information(const DensityMatrix& rho, int dim_a, int dim_b);

MeasureResult quantum_discord(const TwoQubitBloch& b, Side side = Side::B);
MeasureResult info_deficit(const EntropyKind& kind, const TwoQubitBloch& b, Side side = Side::B);
MeasureResult one_way_deficit(const TwoQubitBloch& b, Side side = Side::B);

/// I_f after measuring B along k (no minimization).
double deficit_at(const EntropyKind& kind, const TwoQubitBloch& b, const MeasurementDirection& k);
/// Quantum discord objective S_{M_B}(A|B) - S(A|B) along k.
double discord_at(const TwoQubitBloch& b, const MeasurementDirection& k);

/// I_2 from the top eigenvector of M_2 = r_B r_B^t + J^t J.
MeasureResult geometric_discord_closed(const TwoQubitBloch& b);
/// I_3 (Tsallis q = 3) from the top eigenvector of M_3.
MeasureResult cubic_discord_closed(const TwoQubitBloch& b);

/// I_f for states with maximally mixed marginals. Throws PreconditionError
/// when |r_A| or |r_B| exceeds 1e-12.
double mmm_deficit(const EntropyKind& kind, const TwoQubitBloch& b);

StationarityResidual stationarity_residual_deficit(const EntropyKind& kind, const TwoQubitBloch& b,
                                                   const MeasurementDirection& k);
StationarityResidual stationarity_residual_discord(const TwoQubitBloch& b, const MeasurementDirection& k);

/// Closed I_f for x |Psi><Psi| + (1-x) I/n with Schmidt probabilities `schmidt_probs`.
double deficit_pure_plus_noise(const EntropyKind& kind, double x, const std::vector<double>& schmidt_probs,
                               int dim_a, int dim_b);

}  // namespace qd
