#include "qdiscord/dense_solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <tuple>
#include <vector>

#include <fmt/format.h>

#include "qdiscord/errors.hpp"

namespace qd {

namespace {

constexpr long kMaxDenseMatrixDim = 1L << 12;
constexpr long kMaxDenseSectorDim = 4096;

struct LocalOps {
  int d;
  std::vector<double> sz;     // s_z of local index a
  std::vector<double> raise;  // <a-1| s_+ |a>
  std::vector<double> lower;  // <a+1| s_- |a>
};

LocalOps local_ops(double s) {
  LocalOps ops;
  ops.d = static_cast<int>(std::lround(2 * s)) + 1;
  for (int a = 0; a < ops.d; ++a) {
    const double m = s - a;
    ops.sz.push_back(m);
    ops.raise.push_back(a > 0 ? std::sqrt(s * (s + 1) - m * (m + 1)) : 0.0);
    ops.lower.push_back(a + 1 < ops.d ? std::sqrt(s * (s + 1) - m * (m - 1)) : 0.0);
  }
  return ops;
}

long checked_dim(const ChainSpec& spec, long limit) {
  spec.validate();
  long dim = 1;
  for (int i = 0; i < spec.n; ++i) {
    dim *= spec.local_dim();
    if (dim > limit) {
      throw UnsupportedSpec(fmt::format("Hilbert space dimension exceeds {} for n = {}, s = {}", limit, spec.n, spec.s));
    }
  }
  return dim;
}

std::vector<int> digits_of(long index, int n, int d) {
  std::vector<int> a(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    a[static_cast<std::size_t>(i)] = static_cast<int>(index % d);
    index /= d;
  }
  return a;
}

long index_of(const std::vector<int>& a, int d) {
  long idx = 0;
  for (int v : a) idx = idx * d + v;
  return idx;
}

// Lowest eigenpair of a symmetric sparse matrix by Lanczos with full
// reorthogonalization and restarts from the current Ritz vector.
std::pair<double, Eigen::VectorXd> lanczos_lowest(const SparseMatrix& h) {
  const Eigen::Index dim = h.rows();
  const int krylov = static_cast<int>(std::min<Eigen::Index>(dim, 250));
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd start(dim);
  for (Eigen::Index i = 0; i < dim; ++i) start(i) = gauss(rng);
  start.normalize();

  double energy = 0.0;
  Eigen::VectorXd ritz = start;
  for (int restart = 0; restart < 20; ++restart) {
    Eigen::MatrixXd basis(dim, krylov);
    Eigen::VectorXd alpha(krylov), beta(krylov);
    basis.col(0) = ritz;
    int m = 0;
    for (; m < krylov; ++m) {
      Eigen::VectorXd w = h * basis.col(m);
      alpha(m) = basis.col(m).dot(w);
      w -= basis.leftCols(m + 1) * (basis.leftCols(m + 1).transpose() * w);
      w -= basis.leftCols(m + 1) * (basis.leftCols(m + 1).transpose() * w);
      beta(m) = w.norm();
      if (m + 1 == krylov || beta(m) < 1e-13) {
        ++m;
        break;
      }
      basis.col(m + 1) = w / beta(m);
    }
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      t(i, i) = alpha(i);
      if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta(i);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    energy = es.eigenvalues()(0);
    ritz = (basis.leftCols(m) * es.eigenvectors().col(0)).normalized();
    const double residual = (h * ritz - energy * ritz).norm();
    if (residual < 1e-11 * std::max(1.0, std::abs(energy))) break;
  }
  return {energy, ritz};
}

}  // namespace

bool sectors_degenerate(double e_plus, double e_minus) {
  return std::abs(e_plus - e_minus) <= 1e-9 * std::max({1.0, std::abs(e_plus), std::abs(e_minus)});
}

SparseMatrix build_hamiltonian(const ChainSpec& spec) {
  const long dim = checked_dim(spec, kMaxDenseDim);
  const LocalOps ops = local_ops(spec.s);
  const int n = spec.n;
  const int d = ops.d;
  std::vector<Eigen::Triplet<double>> trips;

  for (long x = 0; x < dim; ++x) {
    const std::vector<int> a = digits_of(x, n, d);
    double diag = 0.0;
    for (int i = 0; i < n; ++i) diag += spec.field(i) * ops.sz[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])];
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double szi = ops.sz[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])];
        const double szj = ops.sz[static_cast<std::size_t>(a[static_cast<std::size_t>(j)])];
        diag -= spec.jz(i, j) * szi * szj;

        const double jx = spec.jx(i, j);
        const double jy = spec.jy(i, j);
        if (jx == 0.0 && jy == 0.0) continue;
        // s_x = (s+ + s-)/2, s_y = -i (s+ - s-)/2, so
        // -jx s_ix s_jx - jy s_iy s_jy = -jx A_i A_j + jy Bm_i Bm_j.
        for (int di : {-1, +1}) {
          const int ai = a[static_cast<std::size_t>(i)];
          const int bi = ai + di;
          if (bi < 0 || bi >= d) continue;
          const double ci = di < 0 ? ops.raise[static_cast<std::size_t>(ai)] : ops.lower[static_cast<std::size_t>(ai)];
          const double sgn_i = di < 0 ? 1.0 : -1.0;
          for (int dj : {-1, +1}) {
            const int aj = a[static_cast<std::size_t>(j)];
            const int bj = aj + dj;
            if (bj < 0 || bj >= d) continue;
            const double cj = dj < 0 ? ops.raise[static_cast<std::size_t>(aj)] : ops.lower[static_cast<std::size_t>(aj)];
            const double sgn_j = dj < 0 ? 1.0 : -1.0;
            const double amp = 0.25 * ci * cj * (-jx + jy * sgn_i * sgn_j);
            if (amp == 0.0) continue;
            std::vector<int> b = a;
            b[static_cast<std::size_t>(i)] = bi;
            b[static_cast<std::size_t>(j)] = bj;
            trips.emplace_back(index_of(b, d), x, amp);
          }
        }
      }
    }
    trips.emplace_back(x, x, diag);
  }
  SparseMatrix h(dim, dim);
  h.setFromTriplets(trips.begin(), trips.end());
  return h;
}

Eigen::MatrixXd build_hamiltonian_dense(const ChainSpec& spec) {
  checked_dim(spec, kMaxDenseMatrixDim);
  return Eigen::MatrixXd(build_hamiltonian(spec));
}

Eigen::VectorXd parity_diagonal(int n, double s) {
  const int d = static_cast<int>(std::lround(2 * s)) + 1;
  long dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= d;
    if (dim > kMaxDenseDim) throw UnsupportedSpec("parity operator dimension exceeds 2^14");
  }
  Eigen::VectorXd p(dim);
  for (long x = 0; x < dim; ++x) {
    long quanta = 0;  // raised quanta above the s_z = -s reference
    for (int a : digits_of(x, n, d)) quanta += (d - 1) - a;
    p(x) = quanta % 2 == 0 ? 1.0 : -1.0;
  }
  return p;
}

Eigen::MatrixXd parity_operator(int n, double s) { return parity_diagonal(n, s).asDiagonal(); }

GroundStateResult ground_state_dense_sector(const ChainSpec& spec, Parity sector) {
  const SparseMatrix h = build_hamiltonian(spec);
  const Eigen::VectorXd par = parity_diagonal(spec.n, spec.s);
  std::vector<Eigen::Index> idx;
  for (Eigen::Index x = 0; x < par.size(); ++x) {
    if (static_cast<int>(par(x)) == sign(sector)) idx.push_back(x);
  }
  const auto sdim = static_cast<Eigen::Index>(idx.size());
  std::vector<Eigen::Index> pos(static_cast<std::size_t>(par.size()), -1);
  for (Eigen::Index k = 0; k < sdim; ++k) pos[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])] = k;

  std::vector<Eigen::Triplet<double>> trips;
  for (int col = 0; col < h.outerSize(); ++col) {
    const Eigen::Index pc = pos[static_cast<std::size_t>(col)];
    if (pc < 0) continue;
    for (SparseMatrix::InnerIterator it(h, col); it; ++it) {
      const Eigen::Index pr = pos[static_cast<std::size_t>(it.row())];
      if (pr < 0) throw ConsistencyError("Hamiltonian couples opposite parity sectors");
      trips.emplace_back(pr, pc, it.value());
    }
  }
  SparseMatrix hs(sdim, sdim);
  hs.setFromTriplets(trips.begin(), trips.end());

  GroundStateResult r;
  r.n = spec.n;
  r.parity = sector;
  r.representation = Representation::DenseKet;
  Eigen::VectorXd vec;
  if (sdim <= kMaxDenseSectorDim) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es{Eigen::MatrixXd(hs)};
    r.energy = es.eigenvalues()(0);
    vec = es.eigenvectors().col(0);
    if (sdim > 1) r.degeneracy_flag = es.eigenvalues()(1) - r.energy <= 1e-9 * std::max(1.0, std::abs(r.energy));
  } else {
    std::tie(r.energy, vec) = lanczos_lowest(hs);
  }
  r.ket = Eigen::VectorXd::Zero(par.size());
  for (Eigen::Index k = 0; k < sdim; ++k) r.ket(idx[static_cast<std::size_t>(k)]) = vec(k);
  // Fix the global sign: largest-magnitude amplitude positive.
  Eigen::Index imax;
  r.ket.cwiseAbs().maxCoeff(&imax);
  if (r.ket(imax) < 0) r.ket = -r.ket;
  (sector == Parity::Plus ? r.energy_plus : r.energy_minus) = r.energy;
  return r;
}

GroundStateResult ground_state_dense(const ChainSpec& spec) {
  GroundStateResult plus = ground_state_dense_sector(spec, Parity::Plus);
  GroundStateResult minus = ground_state_dense_sector(spec, Parity::Minus);
  const double ep = plus.energy;
  const double em = minus.energy;
  GroundStateResult out = ep <= em ? std::move(plus) : std::move(minus);
  out.energy_plus = ep;
  out.energy_minus = em;
  out.degeneracy_flag = out.degeneracy_flag || sectors_degenerate(ep, em);
  return out;
}

DensityMatrix pair_rdm_from_ket(const CVector& ket, int n, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw DomainError("pair sites must be distinct and in range");
  if (ket.size() != (1L << n)) throw DimensionMismatch("ket size is not 2^n");
  const int bi = n - 1 - i;
  const int bj = n - 1 - j;
  CMatrix rho = CMatrix::Zero(4, 4);
  const long mask = ~((1L << bi) | (1L << bj));
  for (long x = 0; x < ket.size(); ++x) {
    const int ai = static_cast<int>((x >> bi) & 1);
    const int aj = static_cast<int>((x >> bj) & 1);
    const long rest = x & mask;
    for (int ci = 0; ci < 2; ++ci) {
      for (int cj = 0; cj < 2; ++cj) {
        const long y = rest | (static_cast<long>(ci) << bi) | (static_cast<long>(cj) << bj);
        rho(ai * 2 + aj, ci * 2 + cj) += ket(x) * std::conj(ket(y));
      }
    }
  }
  return DensityMatrix::from_matrix(rho / rho.trace().real());
}

DensityMatrix pair_rdm_from_ket(const Eigen::VectorXd& ket, int n, int i, int j) {
  return pair_rdm_from_ket(CVector(ket.cast<Complex>()), n, i, j);
}

}  // namespace qd
