#include "qdiscord/lipkin_solver.hpp"

#include <cmath>

#include "momentum_energy.hpp"
#include "qdiscord/crossings.hpp"
#include "qdiscord/errors.hpp"

namespace qd {

namespace {

// Collective operators over the block basis k = 0..n.
struct BlockOps {
  Eigen::MatrixXd sz, sp;  // S_z, S_+
};

BlockOps block_ops(int n) {
  const double big_s = n / 2.0;
  BlockOps ops{Eigen::MatrixXd::Zero(n + 1, n + 1), Eigen::MatrixXd::Zero(n + 1, n + 1)};
  for (int k = 0; k <= n; ++k) {
    const double m = k - big_s;
    ops.sz(k, k) = m;
    if (k < n) ops.sp(k + 1, k) = std::sqrt(big_s * (big_s + 1) - m * (m + 1));
  }
  return ops;
}

}  // namespace

Eigen::MatrixXd lipkin_block_hamiltonian(int n, double jx, double jy, double jz, double b) {
  if (n < 2) throw DomainError("need n >= 2");
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int bit = 0; bit < 2; ++bit) {
    std::vector<double> d, off;
    detail::lipkin_sector_tridiagonal<double>(n, jx, jy, jz, b, bit, d, off);
    for (std::size_t a = 0; a < d.size(); ++a) {
      const int k = bit + 2 * static_cast<int>(a);
      h(k, k) = d[a];
      if (a < off.size()) h(k, k + 2) = h(k + 2, k) = off[a];
    }
  }
  return h;
}

GroundStateResult lipkin_sector_ground_state(int n, double jx, double jy, double b, Parity sector) {
  const int bit = sector == Parity::Plus ? 0 : 1;
  std::vector<double> d, off;
  detail::lipkin_sector_tridiagonal<double>(n, jx, jy, 0.0, b, bit, d, off);
  const auto m = static_cast<Eigen::Index>(d.size());
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    t(a, a) = d[static_cast<std::size_t>(a)];
    if (a + 1 < m) t(a, a + 1) = t(a + 1, a) = off[static_cast<std::size_t>(a)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);

  GroundStateResult r;
  r.n = n;
  r.parity = sector;
  r.representation = Representation::CollectiveBlockVector;
  r.energy = es.eigenvalues()(0);
  r.block = Eigen::VectorXd::Zero(n + 1);
  for (Eigen::Index a = 0; a < m; ++a) r.block(bit + 2 * a) = es.eigenvectors()(a, 0);
  Eigen::Index imax;
  r.block.cwiseAbs().maxCoeff(&imax);
  if (r.block(imax) < 0) r.block = -r.block;
  if (m > 1) r.degeneracy_flag = es.eigenvalues()(1) - r.energy <= 1e-9 * std::max(1.0, std::abs(r.energy));
  (sector == Parity::Plus ? r.energy_plus : r.energy_minus) = r.energy;
  return r;
}

GroundStateResult lipkin_ground_state(int n, double jx, double jy, double b) {
  GroundStateResult plus = lipkin_sector_ground_state(n, jx, jy, b, Parity::Plus);
  GroundStateResult minus = lipkin_sector_ground_state(n, jx, jy, b, Parity::Minus);
  const double ep = plus.energy, em = minus.energy;
  const int gap = lipkin_sector_gap_sign(n, jx, jy, b);
  GroundStateResult r = gap <= 0 ? std::move(plus) : std::move(minus);
  r.energy_plus = ep;
  r.energy_minus = em;
  r.degeneracy_flag = r.degeneracy_flag || sectors_degenerate(ep, em);
  return r;
}

DensityMatrix pair_rdm_symmetric(const Eigen::VectorXd& block, int n) {
  if (n < 2 || block.size() != n + 1) throw DimensionMismatch("block vector must have n + 1 entries");
  const double norm = block.norm();
  if (std::abs(norm - 1.0) > 1e-10) throw InvalidState("block vector is not normalized");
  const BlockOps ops = block_ops(n);
  const CMatrix sz = ops.sz.cast<Complex>();
  const CMatrix sp = ops.sp.cast<Complex>();
  const CMatrix sm = sp.adjoint();
  const CMatrix sx = (sp + sm) / 2.0;
  const CMatrix sy = (sp - sm) / Complex(0, 2);
  const CMatrix s[3] = {sx, sy, sz};
  const CVector psi = block.cast<Complex>();

  TwoQubitBloch bl;
  Vec3 mean;
  for (int mu = 0; mu < 3; ++mu) mean(mu) = psi.dot(s[mu] * psi).real();
  bl.r_a = bl.r_b = 2.0 * mean / n;
  const double pairs = static_cast<double>(n) * (n - 1);
  for (int mu = 0; mu < 3; ++mu) {
    for (int nu = 0; nu < 3; ++nu) {
      // sum_{i != j} <s_i,mu s_j,nu> is symmetric, so the commutator part drops.
      const Complex prod = psi.dot(s[mu] * s[nu] * psi);
      bl.j(mu, nu) = (4.0 * prod.real() - (mu == nu ? n : 0.0)) / pairs;
    }
  }
  bl.j = 0.5 * (bl.j + bl.j.transpose()).eval();
  return bloch_compose(bl);
}

Eigen::VectorXd symmetric_block_to_ket(const Eigen::VectorXd& block, int n) {
  if (n > 14) throw UnsupportedSpec("dense embedding limited to n <= 14");
  if (block.size() != n + 1) throw DimensionMismatch("block vector must have n + 1 entries");
  const long dim = 1L << n;
  Eigen::VectorXd ket = Eigen::VectorXd::Zero(dim);
  std::vector<double> binom(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) binom[static_cast<std::size_t>(k)] = std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
  for (long x = 0; x < dim; ++x) {
    const int down = __builtin_popcountl(static_cast<unsigned long>(x));  // bit 1 = spin down
    const int k = n - down;
    ket(x) = block(k) / std::sqrt(binom[static_cast<std::size_t>(k)]);
  }
  return ket;
}

}  // namespace qd
