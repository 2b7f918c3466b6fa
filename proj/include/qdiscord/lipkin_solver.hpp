#pragma once

// Fully connected spin-1/2 array, J_mu^{ij} = 2 J_mu/(n-1), restricted to the
// permutation-symmetric block S = n/2. Block basis index k = number of raised
// spins (S_z = k - n/2); parity of |k> is (-1)^k.

#include "qdiscord/ground_state.hpp"
#include "qdiscord/qstate.hpp"

namespace qd {

/// Block Hamiltonian of dimension n + 1.
Eigen::MatrixXd lipkin_block_hamiltonian(int n, double jx, double jy, double jz, double b);

GroundStateResult lipkin_sector_ground_state(int n, double jx, double jy, double b, Parity sector);
/// Global ground state; sectors compared in extended precision.
GroundStateResult lipkin_ground_state(int n, double jx, double jy, double b);

/// Pair reduced state of a permutation-symmetric state given by its block
/// vector (same for every pair).
DensityMatrix pair_rdm_symmetric(const Eigen::VectorXd& block, int n);

/// Embed a block vector into the full 2^n space (n <= 14).
Eigen::VectorXd symmetric_block_to_ket(const Eigen::VectorXd& block, int n);

}  // namespace qd
