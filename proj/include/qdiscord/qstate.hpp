#pragma once

// Dense state algebra for small quantum systems.
//
// Pauli convention: sigma_z = diag(+1, -1), basis |0> = spin up. Tensor order
// is A (x) B, so the basis index of |a b> is a * d_B + b.

#include <Eigen/Dense>

#include <complex>
#include <utility>
#include <vector>

namespace qd {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4c = Eigen::Matrix4cd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPositivityTol = 1e-10;

enum class Side { A, B };

/// Hermitian unit-trace matrix. Positivity is checked separately through
/// is_positive()/require_valid() because Bloch composition may produce
/// non-positive matrices that callers need to inspect.
class DensityMatrix {
 public:
  DensityMatrix() = default;

  /// Throws InvalidState unless `m` is square, hermitian and unit trace.
  static DensityMatrix from_matrix(CMatrix m);
  /// Projector onto a normalized ket; throws InvalidState for |psi| != 1.
  static DensityMatrix pure(const CVector& ket);
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }

  double min_eigenvalue() const;
  bool is_positive(double tol = kPositivityTol) const;
  /// Throws InvalidState when the minimum eigenvalue is below -tol.
  const DensityMatrix& require_valid(double tol = kPositivityTol) const;

 private:
  explicit DensityMatrix(CMatrix m) : m_(std::move(m)) {}
  CMatrix m_;
};

/// rho = (1/4)(I + r_A.sigma_A + r_B.sigma_B + sigma_A^t J sigma_B).
struct TwoQubitBloch {
  Vec3 r_a = Vec3::Zero();
  Vec3 r_b = Vec3::Zero();
  Mat3 j = Mat3::Zero();  // j(mu, nu) = <sigma_A,mu sigma_B,nu>

  /// Exchange the roles of A and B.
  TwoQubitBloch swapped() const { return {r_b, r_a, j.transpose()}; }
};

struct SchmidtDecomposition {
  std::vector<double> probs;  // descending
  CMatrix basis_a;            // columns |k_A>
  CMatrix basis_b;            // columns |k_B>

  /// Number of coefficients above `tol`.
  int rank(double tol = 1e-12) const;
};

struct EigenSystem {
  RVector values;   // descending
  CMatrix vectors;  // column k pairs with values(k)
};

// Pauli matrices indexed 0..2 = x, y, z.
const Eigen::Matrix2cd& pauli(int axis);

CMatrix kron(const CMatrix& a, const CMatrix& b);

TwoQubitBloch bloch_decompose(const DensityMatrix& rho);
/// Hermitian and unit trace by construction; positivity is not guaranteed.
DensityMatrix bloch_compose(const TwoQubitBloch& b);

DensityMatrix partial_trace(const DensityMatrix& rho, int dim_a, int dim_b, Side keep);

/// Hermitian eigendecomposition, eigenvalues sorted descending.
EigenSystem eigh(const CMatrix& m);
inline EigenSystem eigh(const DensityMatrix& rho) { return eigh(rho.matrix()); }

/// Descending eigenvalues only.
RVector eigenvalues(const DensityMatrix& rho);

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

SchmidtDecomposition schmidt(const CVector& psi, int dim_a, int dim_b);

/// Apply (u_a (x) u_b) rho (u_a (x) u_b)^dagger.
DensityMatrix apply_local_unitary(const DensityMatrix& rho, const CMatrix& u_a, const CMatrix& u_b);

/// SU(2) matrix exp(-i angle n.sigma/2) for unit axis n.
Eigen::Matrix2cd spin_half_rotation(const Vec3& axis, double angle);
/// SO(3) rotation matching spin_half_rotation acting on Bloch vectors.
Mat3 bloch_rotation(const Eigen::Matrix2cd& u);

}  // namespace qd
