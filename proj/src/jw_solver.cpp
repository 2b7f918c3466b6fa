#include "qdiscord/jw_solver.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "momentum_energy.hpp"
#include "qdiscord/crossings.hpp"
#include "qdiscord/errors.hpp"

namespace qd {

namespace {

// Fermion parity Z = prod sigma_z of a spin parity sector.
int fermion_parity(int n, Parity sector) { return (n % 2 == 0 ? 1 : -1) * sign(sector); }

}  // namespace

void require_jw_family(const ChainSpec& spec) {
  spec.validate();
  if (spec.geometry != Geometry::CyclicNN) throw UnsupportedSpec("fermionic solver needs a cyclic nearest-neighbour chain");
  if (spec.s != 0.5) throw UnsupportedSpec("fermionic solver needs s = 1/2");
  if (spec.jz_bond != 0.0 || spec.jz.cwiseAbs().maxCoeff() != 0.0) throw UnsupportedSpec("fermionic solver needs J_z = 0");
  if (!spec.has_uniform_field()) throw UnsupportedSpec("fermionic solver needs a uniform field");
  if (spec.n < 3) throw UnsupportedSpec("fermionic solver needs n >= 3");
}

double jw_sector_energy(int n, double jx, double jy, double b, Parity sector) {
  if (n < 3) throw UnsupportedSpec("fermionic solver needs n >= 3");
  return detail::xy_sector_energy<double>(n, jx, jy, b, fermion_parity(n, sector));
}

GroundStateResult ground_state_jw_sector(const ChainSpec& spec, Parity sector) {
  require_jw_family(spec);
  const int n = spec.n;
  const int z = fermion_parity(n, sector);
  const double b = spec.field(0);
  const double jx = spec.jx_bond;
  const double jy = spec.jy_bond;
  const double twist = -z;  // boundary bond sign in the fermion picture

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int l = 0; l < n; ++l) {
    m(l, l) = -b;
    const int r = (l + 1) % n;
    const double t = r == 0 ? twist : 1.0;
    m(r, l) += -t * jx / 2;
    m(l, r) += -t * jy / 2;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const Eigen::MatrixXd& u = svd.matrixU();
  const Eigen::MatrixXd& v = svd.matrixV();
  const double det_uv = u.determinant() * v.determinant();
  const int vacuum_z = det_uv > 0 ? 1 : -1;

  Eigen::VectorXd tau = Eigen::VectorXd::Ones(n);
  double energy = -0.5 * sv.sum();
  if (vacuum_z != z) {
    tau(n - 1) = -1.0;  // singular values are descending
    energy += sv(n - 1);
  }

  GroundStateResult r;
  r.n = n;
  r.parity = sector;
  r.representation = Representation::FermionicCovariance;
  r.majorana_g = -u * tau.asDiagonal() * v.transpose();
  // The momentum sum is the reference energy; the real-space value is kept
  // only through the covariance.
  r.energy = jw_sector_energy(n, jx, jy, b, sector);
  if (std::abs(r.energy - energy) > 1e-8 * std::max(1.0, std::abs(energy))) {
    throw ConsistencyError(fmt::format("fermionic sector energies disagree: {} vs {}", r.energy, energy));
  }
  (sector == Parity::Plus ? r.energy_plus : r.energy_minus) = r.energy;
  return r;
}

GroundStateResult ground_state_jw(const ChainSpec& spec) {
  require_jw_family(spec);
  const double ep = jw_sector_energy(spec.n, spec.jx_bond, spec.jy_bond, spec.field(0), Parity::Plus);
  const double em = jw_sector_energy(spec.n, spec.jx_bond, spec.jy_bond, spec.field(0), Parity::Minus);
  const int gap = jw_sector_gap_sign(spec.n, spec.jx_bond, spec.jy_bond, spec.field(0));
  const Parity ground = gap <= 0 ? Parity::Plus : Parity::Minus;
  GroundStateResult r = ground_state_jw_sector(spec, ground);
  r.energy_plus = ep;
  r.energy_minus = em;
  r.degeneracy_flag = sectors_degenerate(ep, em);
  return r;
}

PairObservables pair_observables_jw(const GroundStateResult& state, int i, int j) {
  if (state.representation != Representation::FermionicCovariance) throw PreconditionError("state has no fermionic covariance");
  const Eigen::MatrixXd& g = state.majorana_g;
  const int n = static_cast<int>(g.rows());
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw DomainError("pair sites must be distinct and in range");
  if (i > j) std::swap(i, j);
  const int len = j - i;

  PairObservables o;
  o.mz_i = -g(i, i);
  o.mz_j = -g(j, j);
  o.czz = g(i, i) * g(j, j) - g(i, j) * g(j, i);
  Eigen::MatrixXd ax(len, len), ay(len, len);
  for (int p = 0; p < len; ++p) {
    for (int q = 0; q < len; ++q) {
      ax(p, q) = g(i + 1 + q, i + p);
      ay(p, q) = g(i + p, i + q + 1);
    }
  }
  o.cxx = ax.determinant();
  o.cyy = ay.determinant();
  o.cxy_anti = 0.0;
  return o;
}

}  // namespace qd
