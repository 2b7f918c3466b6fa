#pragma once

// Sector energies shared by the double-precision solvers and the
// extended-precision crossing scans.

#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <vector>

namespace qd::detail {

using std::abs;
using std::cos;
using std::sin;
using std::sqrt;

// Momentum table of the cyclic XY chain in the sector with fermion parity
// z = prod sigma_z: antiperiodic momenta for z = +1, periodic for z = -1.
template <class Real>
struct XyMomenta {
  int n = 0;
  int z = 1;
  std::vector<Real> cos_k, sin_k;
  std::vector<char> real_k;  // k = 0 or pi

  XyMomenta(int n_, int z_) : n(n_), z(z_) {
    const Real pi = boost::math::constants::pi<Real>();
    for (int m = 0; m < n; ++m) {
      const Real k = (z == +1 ? Real(2 * m + 1) : Real(2 * m)) * pi / n;
      cos_k.push_back(cos(k));
      sin_k.push_back(sin(k));
      real_k.push_back((z == -1 && (m == 0 || 2 * m == n)) || (z == +1 && 2 * m + 1 == n));
    }
  }

  Real energy(const Real& jx, const Real& jy, const Real& b) const {
    const Real jbar = (jx + jy) / 2;
    const Real delta = (jx - jy) / 2;
    Real sum = 0;
    Real min_abs = -1;
    int neg_real = 0;  // sign of prod mu_k comes from the real momenta only
    for (int m = 0; m < n; ++m) {
      const Real re = -b - jbar * cos_k[static_cast<std::size_t>(m)];
      const Real im = real_k[static_cast<std::size_t>(m)] ? Real(0) : Real(delta * sin_k[static_cast<std::size_t>(m)]);
      const Real mag = real_k[static_cast<std::size_t>(m)] ? Real(abs(re)) : Real(sqrt(re * re + im * im));
      sum += mag;
      if (min_abs < 0 || mag < min_abs) min_abs = mag;
      if (real_k[static_cast<std::size_t>(m)] && re < 0) ++neg_real;
    }
    const int vacuum_z = neg_real % 2 == 0 ? +1 : -1;
    Real e = -sum / 2;
    if (vacuum_z != z) e += min_abs;
    return e;
  }
};

template <class Real>
Real xy_sector_energy(int n, Real jx, Real jy, Real b, int z) {
  return XyMomenta<Real>(n, z).energy(jx, jy, b);
}

// Lowest eigenvalue of a real symmetric tridiagonal matrix by Sturm
// bisection.
template <class Real>
Real tridiagonal_lowest(const std::vector<Real>& diag, const std::vector<Real>& off, int iterations) {
  const std::size_t m = diag.size();
  Real lo = diag[0], hi = diag[0];
  for (std::size_t i = 0; i < m; ++i) {
    Real radius = 0;
    if (i > 0) radius += abs(off[i - 1]);
    if (i + 1 < m) radius += abs(off[i]);
    if (diag[i] - radius < lo) lo = diag[i] - radius;
    if (diag[i] + radius > hi) hi = diag[i] + radius;
  }
  // number of eigenvalues below x
  auto count_below = [&](const Real& x) {
    int count = 0;
    Real q = diag[0] - x;
    if (q < 0) ++count;
    for (std::size_t i = 1; i < m; ++i) {
      Real prev = q;
      if (prev == 0) prev = Real(1e-300) * (abs(off[i - 1]) + 1);
      q = diag[i] - x - off[i - 1] * off[i - 1] / prev;
      if (q < 0) ++count;
    }
    return count;
  };
  for (int it = 0; it < iterations; ++it) {
    const Real mid = (lo + hi) / 2;
    if (count_below(mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return (lo + hi) / 2;
}

// Polish an isolated eigenvalue estimate x0 of a symmetric tridiagonal
// matrix by Newton steps on its characteristic polynomial (continuant).
template <class Real>
Real tridiagonal_newton(const std::vector<Real>& diag, const std::vector<Real>& off, Real x, int iterations) {
  const std::size_t m = diag.size();
  for (int it = 0; it < iterations; ++it) {
    Real p_prev = 1, p = diag[0] - x;
    Real dp_prev = 0, dp = -1;
    for (std::size_t i = 1; i < m; ++i) {
      const Real o2 = off[i - 1] * off[i - 1];
      const Real p_next = (diag[i] - x) * p - o2 * p_prev;
      const Real dp_next = -p + (diag[i] - x) * dp - o2 * dp_prev;
      p_prev = p;
      p = p_next;
      dp_prev = dp;
      dp = dp_next;
    }
    if (dp == 0) break;
    const Real step = p / dp;
    x -= step;
    if (abs(step) <= abs(x) * Real(1e-90)) break;
  }
  return x;
}

// Parity sector of the symmetric-block Lipkin Hamiltonian as a tridiagonal
// matrix over k = parity_bit, parity_bit + 2, ... (k raised spins).
template <class Real>
void lipkin_sector_tridiagonal(int n, Real jx, Real jy, Real jz, Real b, int parity_bit, std::vector<Real>& diag,
                               std::vector<Real>& off) {
  diag.clear();
  off.clear();
  const Real big_s = Real(n) / 2;
  const Real casimir = big_s * (big_s + 1);
  const Real inv = Real(1) / Real(n - 1);
  for (int k = parity_bit; k <= n; k += 2) {
    const Real m = Real(k) - big_s;
    const Real sx2_plus_sy2_avg = (casimir - m * m) / 2;  // (S_x^2 + S_y^2)/2 on |k>
    Real d = b * m - inv * ((jx + jy) * sx2_plus_sy2_avg - (jx + jy) * Real(n) / 4 + jz * (m * m - Real(n) / 4));
    diag.push_back(d);
    if (k + 2 <= n) {
      const Real m1 = m + 1;
      const Real c1 = sqrt(casimir - m * (m + 1));
      const Real c2 = sqrt(casimir - m1 * (m1 + 1));
      off.push_back(-inv * (jx - jy) / 4 * c1 * c2);
    }
  }
}

}  // namespace qd::detail
