#pragma once

#include "qdiscord/jw_solver.hpp"
#include "qdiscord/qstate.hpp"

namespace qd {

/// X state with r_A = (0,0,mz_i), r_B = (0,0,mz_j), J = diag(cxx, cyy, czz).
/// Throws InvalidState when the result is not positive within -1e-9.
DensityMatrix pair_rdm_from_observables(const PairObservables& obs);

PairObservables pair_observables_from_rdm(const DensityMatrix& rho);

/// Pair state of |Theta_sector> = (|Theta> + sector |-Theta>)/norm for a
/// uniform spin-1/2 product |Theta> with the chain reference (spin down at
/// theta = 0): eps = sector cos^(n-2) theta.
DensityMatrix definite_parity_pair_state(double theta, int n, int sector);

}  // namespace qd
