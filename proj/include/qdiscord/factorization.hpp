#pragma once

// Conditions for an exact separable eigenstate
// |Theta> = prod_j exp(-i theta_j s_jy) |0_j>, s_jz |0_j> = -s |0_j>.

#include "qdiscord/chain_spec.hpp"
#include "qdiscord/qstate.hpp"

namespace qd {

struct FactorizationResiduals {
  Eigen::MatrixXd pair;  // J_y - J_x cos t_i cos t_j - J_z sin t_i sin t_j, zero diagonal
  Eigen::VectorXd site;  // field condition per site
  double max_pair = 0.0;
  double max_site = 0.0;

  bool satisfied(double tol = 1e-10) const { return max_pair < tol && max_site < tol; }
};

FactorizationResiduals check_factorization(const ChainSpec& spec, const Eigen::VectorXd& thetas);

struct FactorizingField {
  double chi = 0.0;          // after any x <-> y swap, in [0, 1]
  double theta = 0.0;        // cos^2 theta = chi
  double b_s = 0.0;          // largest site field
  Eigen::VectorXd fields;    // per-site factorizing fields
  bool axes_swapped = false; // chi > 1 mapped to 1/chi by x <-> y
  ChainSpec spec;            // input (possibly axis-swapped) with `fields` applied
};

/// Uniform-angle solution for constant anisotropy
/// chi = (J_y - J_z)/(J_x - J_z). Throws DomainError for chi < 0 or when
/// J_x = J_z on a coupled pair.
FactorizingField uniform_factorizing_field(const ChainSpec& spec);

/// Dense product ket |theta_1 ... theta_n>; site 0 is the most significant
/// tensor factor, local index 0 is s_z = +s.
CVector product_state(int n, double s, const Eigen::VectorXd& thetas);

}  // namespace qd
