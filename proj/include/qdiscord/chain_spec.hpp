#pragma once

// H = sum_i B_i s_iz - 1/2 sum_mu sum_{i,j} J_mu^{ij} s_imu s_jmu
// for n spins of magnitude s.

#include <Eigen/Dense>

#include <string>

namespace qd {

enum class Geometry { General, CyclicNN, OpenNN, FullyConnected };

std::string to_string(Geometry g);

/// Eigenvalue of the total S_z parity (phase flip).
enum class Parity : int { Minus = -1, Plus = +1 };

inline int sign(Parity p) { return static_cast<int>(p); }
inline Parity opposite(Parity p) { return p == Parity::Plus ? Parity::Minus : Parity::Plus; }

struct ChainSpec {
  int n = 0;
  double s = 0.5;
  Eigen::MatrixXd jx, jy, jz;  // symmetric, zero diagonal
  Eigen::VectorXd field;       // B_i
  Geometry geometry = Geometry::General;
  // Bond strengths for the structured geometries (0 for General).
  double jx_bond = 0.0, jy_bond = 0.0, jz_bond = 0.0;

  /// Nearest neighbours with J_mu^{i,i+1 mod n} = J_mu.
  static ChainSpec cyclic_nn(int n, double s, double jx, double jy, double jz, double b);
  static ChainSpec open_nn(int n, double s, double jx, double jy, double jz, double b);
  /// All pairs with J_mu^{ij} = 2 J_mu / (n - 1).
  static ChainSpec fully_connected(int n, double s, double jx, double jy, double jz, double b);
  static ChainSpec general(int n, double s, Eigen::MatrixXd jx, Eigen::MatrixXd jy, Eigen::MatrixXd jz,
                           Eigen::VectorXd field);

  /// Throws DomainError if any structural invariant fails.
  void validate() const;

  ChainSpec with_uniform_field(double b) const;
  ChainSpec with_fields(Eigen::VectorXd b) const;
  /// Exchange the x and y axes (rotation by pi/2 about z).
  ChainSpec swapped_xy() const;

  bool has_uniform_field(double tol = 0.0) const;
  /// Local Hilbert space dimension 2s + 1.
  int local_dim() const;
};

}  // namespace qd
