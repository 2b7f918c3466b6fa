#include "qdiscord/factorization.hpp"

#include <cmath>
#include <optional>

#include <fmt/format.h>

#include "qdiscord/errors.hpp"

namespace qd {

FactorizationResiduals check_factorization(const ChainSpec& spec, const Eigen::VectorXd& thetas) {
  spec.validate();
  if (thetas.size() != spec.n) throw DimensionMismatch("need one angle per site");
  const int n = spec.n;
  const Eigen::ArrayXd c = thetas.array().cos();
  const Eigen::ArrayXd sn = thetas.array().sin();

  FactorizationResiduals r;
  r.pair = Eigen::MatrixXd::Zero(n, n);
  r.site = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      r.pair(i, j) = spec.jy(i, j) - spec.jx(i, j) * c(i) * c(j) - spec.jz(i, j) * sn(i) * sn(j);
    }
  }
  for (int i = 0; i < n; ++i) {
    double rhs = 0.0;
    for (int j = 0; j < n; ++j) {
      const double w = spec.s - (i == j ? 0.5 : 0.0);
      rhs += w * (spec.jx(i, j) * c(i) * sn(j) - spec.jz(i, j) * sn(i) * c(j));
    }
    r.site(i) = spec.field(i) * sn(i) - rhs;
  }
  r.max_pair = r.pair.cwiseAbs().maxCoeff();
  r.max_site = r.site.cwiseAbs().maxCoeff();
  return r;
}

FactorizingField uniform_factorizing_field(const ChainSpec& spec) {
  spec.validate();
  const int n = spec.n;
  std::optional<double> chi;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double jx = spec.jx(i, j), jy = spec.jy(i, j), jz = spec.jz(i, j);
      if (jx == 0.0 && jy == 0.0 && jz == 0.0) continue;
      if (std::abs(jx - jz) < 1e-14) throw DomainError(fmt::format("anisotropy undefined on pair ({}, {}): J_x = J_z", i, j));
      const double c = (jy - jz) / (jx - jz);
      if (!chi) {
        chi = c;
      } else if (std::abs(c - *chi) > 1e-12 * std::max(1.0, std::abs(c))) {
        throw DomainError("anisotropy is not constant over coupled pairs");
      }
    }
  }
  if (!chi) throw DomainError("no coupled pairs");
  if (*chi < 0.0) throw DomainError(fmt::format("chi = {} < 0 has no real uniform solution", *chi));

  FactorizingField out;
  out.spec = spec;
  out.chi = *chi;
  if (out.chi > 1.0) {
    out.spec = spec.swapped_xy();
    out.chi = 1.0 / out.chi;
    out.axes_swapped = true;
  }
  out.theta = std::acos(std::sqrt(out.chi));
  out.fields = Eigen::VectorXd::Zero(n);
  const double root = std::sqrt(out.chi);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += (out.spec.jx(i, j) - out.spec.jz(i, j)) * (out.spec.s - (i == j ? 0.5 : 0.0));
    out.fields(i) = root * acc;
  }
  out.b_s = out.fields.maxCoeff();
  out.spec = out.spec.with_fields(out.fields);
  return out;
}

CVector product_state(int n, double s, const Eigen::VectorXd& thetas) {
  if (thetas.size() != n) throw DimensionMismatch("need one angle per site");
  const int d = static_cast<int>(std::lround(2 * s)) + 1;
  // s_y in the basis a = 0..d-1 with s_z = s - a.
  CMatrix sy = CMatrix::Zero(d, d);
  for (int a = 1; a < d; ++a) {
    const double m = s - a;
    const double c = std::sqrt(s * (s + 1) - m * (m + 1));  // <a-1| s_+ |a>
    sy(a - 1, a) = Complex(0, -0.5 * c);
    sy(a, a - 1) = Complex(0, 0.5 * c);
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sy);
  CVector down = CVector::Zero(d);
  down(d - 1) = 1.0;

  CVector ket = CVector::Ones(1);
  for (int i = 0; i < n; ++i) {
    const CVector phases = (es.eigenvalues().cast<Complex>() * Complex(0, -thetas(i))).array().exp();
    const CVector local = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint() * down;
    ket = kron(ket, local);
  }
  return ket;
}

}  // namespace qd
