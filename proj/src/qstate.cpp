#include "qdiscord/qstate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "qdiscord/errors.hpp"

namespace qd {

namespace {

double hermiticity_defect(const CMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(CMatrix m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw InvalidState("density matrix must be square and non-empty");
  }
  if (hermiticity_defect(m) > kHermitianTol) {
    throw InvalidState("density matrix is not hermitian");
  }
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > kTraceTol) {
    throw InvalidState("density matrix trace differs from 1");
  }
  // Exact hermitian symmetrization removes sub-tolerance asymmetry.
  CMatrix h = 0.5 * (m + m.adjoint());
  return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::pure(const CVector& ket) {
  const double norm = ket.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    throw InvalidState("pure state ket is not normalized");
  }
  CMatrix m = ket * ket.adjoint();
  m /= m.trace().real();
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim <= 0) throw InvalidState("dimension must be positive");
  return DensityMatrix(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool DensityMatrix::is_positive(double tol) const { return min_eigenvalue() >= -tol; }

const DensityMatrix& DensityMatrix::require_valid(double tol) const {
  if (m_.rows() == 0) throw InvalidState("empty density matrix");
  const double lo = min_eigenvalue();
  if (lo < -tol) {
    throw InvalidState("density matrix is not positive semidefinite (min eigenvalue " +
                       std::to_string(lo) + ")");
  }
  return *this;
}

int SchmidtDecomposition::rank(double tol) const {
  return static_cast<int>(std::count_if(probs.begin(), probs.end(), [tol](double p) { return p > tol; }));
}

const Eigen::Matrix2cd& pauli(int axis) {
  static const auto mats = [] {
    std::array<Eigen::Matrix2cd, 3> s;
    const Complex i(0.0, 1.0);
    s[0] << 0, 1, 1, 0;
    s[1] << 0, -i, i, 0;
    s[2] << 1, 0, 0, -1;
    return s;
  }();
  return mats.at(static_cast<std::size_t>(axis));
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

TwoQubitBloch bloch_decompose(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw InvalidState("bloch_decompose requires a two-qubit state");
  const CMatrix& m = rho.matrix();
  const CMatrix id2 = CMatrix::Identity(2, 2);
  auto expect = [&m](const CMatrix& op) { return (m * op).trace().real(); };
  TwoQubitBloch b;
  for (int mu = 0; mu < 3; ++mu) {
    b.r_a(mu) = expect(kron(pauli(mu), id2));
    b.r_b(mu) = expect(kron(id2, pauli(mu)));
    for (int nu = 0; nu < 3; ++nu) b.j(mu, nu) = expect(kron(pauli(mu), pauli(nu)));
  }
  return b;
}

DensityMatrix bloch_compose(const TwoQubitBloch& b) {
  const CMatrix id2 = CMatrix::Identity(2, 2);
  CMatrix m = CMatrix::Identity(4, 4);
  for (int mu = 0; mu < 3; ++mu) {
    m += b.r_a(mu) * kron(pauli(mu), id2);
    m += b.r_b(mu) * kron(id2, pauli(mu));
    for (int nu = 0; nu < 3; ++nu) m += b.j(mu, nu) * kron(pauli(mu), pauli(nu));
  }
  return DensityMatrix::from_matrix(0.25 * m);
}

DensityMatrix partial_trace(const DensityMatrix& rho, int dim_a, int dim_b, Side keep) {
  if (dim_a <= 0 || dim_b <= 0 || dim_a * dim_b != rho.dim()) {
    throw DimensionMismatch("partial_trace: subsystem dimensions do not match state dimension");
  }
  const CMatrix& m = rho.matrix();
  if (keep == Side::B) {
    CMatrix out = CMatrix::Zero(dim_b, dim_b);
    for (int a = 0; a < dim_a; ++a) out += m.block(a * dim_b, a * dim_b, dim_b, dim_b);
    return DensityMatrix::from_matrix(std::move(out));
  }
  CMatrix out = CMatrix::Zero(dim_a, dim_a);
  for (int a = 0; a < dim_a; ++a) {
    for (int a2 = 0; a2 < dim_a; ++a2) {
      out(a, a2) = m.block(a * dim_b, a2 * dim_b, dim_b, dim_b).trace();
    }
  }
  return DensityMatrix::from_matrix(std::move(out));
}

EigenSystem eigh(const CMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidState("eigh: matrix is not square");
  if (m.size() > 0 && hermiticity_defect(m) > 1e-10 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
    throw InvalidState("eigh: matrix is not hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
  if (es.info() != Eigen::Success) throw InvalidState("eigh: eigensolver did not converge");
  const Eigen::Index n = m.rows();
  EigenSystem out{RVector(n), CMatrix(n, n)};
  // Eigen returns ascending order.
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = es.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = es.eigenvectors().col(n - 1 - k);
  }
  return out;
}

RVector eigenvalues(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().reverse();
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw InvalidState("concurrence requires a two-qubit state");
  rho.require_valid();
  // lambda_i are the singular values of X^t (sy sy) X with rho = X X^dagger;
  // avoids square roots of tiny eigenvalues of rho rho~.
  const CMatrix yy = kron(pauli(1), pauli(1));
  const EigenSystem es = eigh(rho.matrix());
  const CMatrix x = es.vectors * es.values.cwiseMax(0.0).cwiseSqrt().asDiagonal();
  const CMatrix m = x.transpose() * yy * x;
  RVector lam = Eigen::JacobiSVD<CMatrix>(m).singularValues();
  std::sort(lam.data(), lam.data() + lam.size(), std::greater<>());
  return std::max(0.0, lam(0) - lam(1) - lam(2) - lam(3));
}

SchmidtDecomposition schmidt(const CVector& psi, int dim_a, int dim_b) {
  if (dim_a * dim_b != psi.size()) throw DimensionMismatch("schmidt: dimensions do not match ket size");
  if (std::abs(psi.norm() - 1.0) > 1e-10) throw InvalidState("schmidt: ket is not normalized");
  CMatrix c(dim_a, dim_b);
  for (int a = 0; a < dim_a; ++a) {
    for (int b = 0; b < dim_b; ++b) c(a, b) = psi(a * dim_b + b);
  }
  Eigen::JacobiSVD<CMatrix> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Index k = std::min(dim_a, dim_b);
  SchmidtDecomposition out;
  out.probs.resize(static_cast<std::size_t>(k));
  for (Eigen::Index i = 0; i < k; ++i) {
    const double s = svd.singularValues()(i);
    out.probs[static_cast<std::size_t>(i)] = s * s;
  }
  out.basis_a = svd.matrixU().leftCols(k);
  out.basis_b = svd.matrixV().leftCols(k).conjugate();
  return out;
}

DensityMatrix apply_local_unitary(const DensityMatrix& rho, const CMatrix& u_a, const CMatrix& u_b) {
  const CMatrix u = kron(u_a, u_b);
  if (u.rows() != rho.dim()) throw DimensionMismatch("apply_local_unitary: dimension mismatch");
  return DensityMatrix::from_matrix(u * rho.matrix() * u.adjoint());
}

Eigen::Matrix2cd spin_half_rotation(const Vec3& axis, double angle) {
  const Vec3 n = axis.normalized();
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd gen = n(0) * pauli(0) + n(1) * pauli(1) + n(2) * pauli(2);
  return std::cos(angle / 2) * Eigen::Matrix2cd::Identity() - i * std::sin(angle / 2) * gen;
}

Mat3 bloch_rotation(const Eigen::Matrix2cd& u) {
  Mat3 r;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      r(a, b) = 0.5 * (pauli(a) * u * pauli(b) * u.adjoint()).trace().real();
    }
  }
  return r;
}

}  // namespace qd
