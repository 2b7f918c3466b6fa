#include "qdiscord/pair_states.hpp"

#include <cmath>

#include <fmt/format.h>

#include "qdiscord/aligned.hpp"
#include "qdiscord/errors.hpp"

namespace qd {

DensityMatrix pair_rdm_from_observables(const PairObservables& obs) {
  TwoQubitBloch b;
  b.r_a = Vec3(0, 0, obs.mz_i);
  b.r_b = Vec3(0, 0, obs.mz_j);
  b.j.diagonal() = Vec3(obs.cxx, obs.cyy, obs.czz);
  b.j(0, 1) = obs.cxy_anti;
  b.j(1, 0) = -obs.cxy_anti;
  DensityMatrix rho = bloch_compose(b);
  const double lmin = rho.min_eigenvalue();
  if (lmin < -1e-9) throw InvalidState(fmt::format("observables give a non-positive pair state (min eigenvalue {:.3e})", lmin));
  return rho;
}

PairObservables pair_observables_from_rdm(const DensityMatrix& rho) {
  const TwoQubitBloch b = bloch_decompose(rho);
  PairObservables o;
  o.mz_i = b.r_a(2);
  o.mz_j = b.r_b(2);
  o.cxx = b.j(0, 0);
  o.cyy = b.j(1, 1);
  o.czz = b.j(2, 2);
  o.cxy_anti = 0.5 * (b.j(0, 1) - b.j(1, 0));
  return o;
}

DensityMatrix definite_parity_pair_state(double theta, int n, int sector) {
  if (!(theta > 0.0) || theta > M_PI / 2 + 1e-15) throw DomainError("theta must lie in (0, pi/2]");
  if (n < 3) throw DomainError("need n >= 3");
  if (sector != 1 && sector != -1) throw DomainError("sector must be +1 or -1");
  const AlignedMixtureParams p = AlignedMixtureParams::from_chain(theta, n, sector);
  const double c = std::cos(theta);
  if (1.0 + p.epsilon * c * c <= 0.0) throw DomainError("1 + eps cos^2 theta must be positive");
  // (-i sigma_y) on each qubit maps the up reference onto the down one:
  // r -> -r, J unchanged (for the diagonal form used here).
  TwoQubitBloch b = aligned_state(p);
  b.r_a(0) = -b.r_a(0);
  b.r_a(2) = -b.r_a(2);
  b.r_b(0) = -b.r_b(0);
  b.r_b(2) = -b.r_b(2);
  const Mat3 rot = Vec3(-1, 1, -1).asDiagonal();
  b.j = rot * b.j * rot;
  return bloch_compose(b);
}

}  // namespace qd
