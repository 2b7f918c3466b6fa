#pragma once

// Cyclic nearest-neighbour spin-1/2 XY chain in a uniform transverse field,
// solved exactly per parity sector through Jordan-Wigner fermionization.
//
// Majoranas gx_i = (prod_{l<i} sz_l) sx_i, gy_i = (prod_{l<i} sz_l) sy_i, so
// sz_i = -i gx_i gy_i. The Hamiltonian is (i/2) sum_ab M_ab gx_a gy_b with the
// boundary bond twisted by the fermion parity Z = prod sz = (-1)^n P.

#include "qdiscord/chain_spec.hpp"
#include "qdiscord/ground_state.hpp"

namespace qd {

struct PairObservables {
  double mz_i = 0.0;  // <sigma_z>
  double mz_j = 0.0;
  double czz = 0.0;
  double cxx = 0.0;
  double cyy = 0.0;
  double cxy_anti = 0.0;  // <sx sy> - <sy sx>-type term, zero for real Hamiltonians
};

/// Throws UnsupportedSpec unless the spec is cyclic_nn, s = 1/2, J_z = 0,
/// uniform field and n >= 3.
void require_jw_family(const ChainSpec& spec);

/// Sector ground energy from the free-fermion momentum sum.
double jw_sector_energy(int n, double jx, double jy, double b, Parity sector);

/// Sector ground state (energy and Majorana covariance) from the real-space
/// twisted Bogoliubov problem.
GroundStateResult ground_state_jw_sector(const ChainSpec& spec, Parity sector);

/// Global ground state. The sector comparison is done in extended precision
/// so the parity label stays exact where the sector gap underflows double.
GroundStateResult ground_state_jw(const ChainSpec& spec);

/// Magnetizations and Pauli correlators of sites i != j via Wick contractions.
PairObservables pair_observables_jw(const GroundStateResult& state, int i, int j);

}  // namespace qd
