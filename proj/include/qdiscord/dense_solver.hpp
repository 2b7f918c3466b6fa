#pragma once

// Exact diagonalization in the full tensor-product basis. Basis index: site 0
// is the most significant digit; local index a has s_z = s - a.

#include <Eigen/Sparse>

#include "qdiscord/chain_spec.hpp"
#include "qdiscord/ground_state.hpp"
#include "qdiscord/qstate.hpp"

namespace qd {

using SparseMatrix = Eigen::SparseMatrix<double>;

inline constexpr long kMaxDenseDim = 1L << 14;

/// Full Hamiltonian (real symmetric). Throws UnsupportedSpec when
/// (2s+1)^n > 2^14.
SparseMatrix build_hamiltonian(const ChainSpec& spec);
/// Dense copy; additionally limited to dimension 2^12.
Eigen::MatrixXd build_hamiltonian_dense(const ChainSpec& spec);

/// Diagonal of prod_j exp(i pi (s_jz + s)) in the standard basis.
Eigen::VectorXd parity_diagonal(int n, double s);
Eigen::MatrixXd parity_operator(int n, double s);

/// Lowest state within one parity sector (dense eigensolver up to sector
/// dimension 4096, Lanczos above).
GroundStateResult ground_state_dense_sector(const ChainSpec& spec, Parity sector);
/// Global ground state with both sector minima and the degeneracy flag.
GroundStateResult ground_state_dense(const ChainSpec& spec);

/// Reduced state of sites (i, j) of a spin-1/2 chain ket, i != j, ordered
/// (i, j) as (A, B).
DensityMatrix pair_rdm_from_ket(const Eigen::VectorXd& ket, int n, int i, int j);
DensityMatrix pair_rdm_from_ket(const CVector& ket, int n, int i, int j);

}  // namespace qd
