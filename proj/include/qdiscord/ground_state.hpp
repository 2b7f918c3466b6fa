#pragma once

#include <Eigen/Dense>

#include "qdiscord/chain_spec.hpp"

namespace qd {

enum class Representation { DenseKet, FermionicCovariance, CollectiveBlockVector };

/// Lowest state of one parity sector, or the global ground state.
struct GroundStateResult {
  double energy = 0.0;
  Parity parity = Parity::Plus;
  Representation representation = Representation::DenseKet;
  bool degeneracy_flag = false;
  double energy_plus = 0.0;   // lowest energy in each sector
  double energy_minus = 0.0;
  int n = 0;

  Eigen::VectorXd ket;         // DenseKet: full 2^n amplitude vector
  Eigen::MatrixXd majorana_g;  // FermionicCovariance: G_ab = <i gx_a gy_b>
  Eigen::VectorXd block;       // CollectiveBlockVector: amplitudes over k = 0..n raised spins
};

/// Sector degeneracy test used throughout: |E+ - E-| <= 1e-9 max(1, |E|).
bool sectors_degenerate(double e_plus, double e_minus);

}  // namespace qd
