#include "qdiscord/crossings.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>

#include "momentum_energy.hpp"
#include "qdiscord/errors.hpp"

namespace qd {

namespace {

using Big = boost::multiprecision::cpp_bin_float_100;

// Double-precision gaps above this (relative) are trusted as they are.
constexpr double kTrustDouble = 1e-9;

int sign_of(const Big& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

Big lipkin_sector_energy_big(int n, double jx, double jy, double b, int bit) {
  std::vector<Big> d, off;
  detail::lipkin_sector_tridiagonal<Big>(n, Big(jx), Big(jy), Big(0), Big(b), bit, d, off);
  if (d.size() == 1) return d[0];
  std::vector<double> dd, od;
  detail::lipkin_sector_tridiagonal<double>(n, jx, jy, 0.0, b, bit, dd, od);
  const double x0 = detail::tridiagonal_lowest<double>(dd, od, 80);
  return detail::tridiagonal_newton<Big>(d, off, Big(x0), 12);
}

int jw_gap_sign_cached(const detail::XyMomenta<double>& plus, const detail::XyMomenta<double>& minus,
                       const detail::XyMomenta<Big>& plus_big, const detail::XyMomenta<Big>& minus_big, double jx,
                       double jy, double b) {
  const double ep = plus.energy(jx, jy, b);
  const double em = minus.energy(jx, jy, b);
  if (std::abs(ep - em) > kTrustDouble * std::max(1.0, std::abs(ep))) return ep > em ? 1 : -1;
  return sign_of(plus_big.energy(Big(jx), Big(jy), Big(b)) - minus_big.energy(Big(jx), Big(jy), Big(b)));
}

template <class GapSign>
CrossingScan scan(GapSign gap_sign, double b_lo, double b_hi, int grid) {
  if (grid < 2 || !(b_hi > b_lo)) throw DomainError("scan needs b_hi > b_lo and at least two grid points");
  CrossingScan out;
  double prev_b = b_lo;
  int prev = gap_sign(b_lo);
  for (int g = 1; g <= grid; ++g) {
    const double b = b_lo + (b_hi - b_lo) * g / grid;
    const int cur = gap_sign(b);
    if (cur == 0) {
      out.fields.push_back(b);
      prev = 0;  // an exact zero is counted once
      prev_b = b;
      continue;
    }
    if (prev != 0 && cur != prev) {
      double lo = prev_b, hi = b;
      for (int it = 0; it < 60 && hi - lo > 1e-13 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const int s = gap_sign(mid);
        if (s == 0) {
          lo = hi = mid;
          break;
        }
        (s == prev ? lo : hi) = mid;
      }
      out.fields.push_back(0.5 * (lo + hi));
    }
    prev = cur;
    prev_b = b;
  }
  return out;
}

}  // namespace

int jw_sector_gap_sign(int n, double jx, double jy, double b) {
  if (n < 3) throw DomainError("need n >= 3");
  const int zp = n % 2 == 0 ? 1 : -1;  // fermion parity of spin parity +
  return jw_gap_sign_cached(detail::XyMomenta<double>(n, zp), detail::XyMomenta<double>(n, -zp),
                            detail::XyMomenta<Big>(n, zp), detail::XyMomenta<Big>(n, -zp), jx, jy, b);
}

int lipkin_sector_gap_sign(int n, double jx, double jy, double b) {
  if (n < 2) throw DomainError("need n >= 2");
  {
    std::vector<double> d, off;
    detail::lipkin_sector_tridiagonal<double>(n, jx, jy, 0.0, b, 0, d, off);
    const double ep = d.size() == 1 ? d[0] : detail::tridiagonal_lowest<double>(d, off, 80);
    detail::lipkin_sector_tridiagonal<double>(n, jx, jy, 0.0, b, 1, d, off);
    const double em = d.size() == 1 ? d[0] : detail::tridiagonal_lowest<double>(d, off, 80);
    if (std::abs(ep - em) > kTrustDouble * std::max(1.0, std::abs(ep))) return ep > em ? 1 : -1;
  }
  const Big ep = lipkin_sector_energy_big(n, jx, jy, b, 0);
  const Big em = lipkin_sector_energy_big(n, jx, jy, b, 1);
  return sign_of(ep - em);
}

CrossingScan scan_parity_transitions_jw(int n, double jx, double jy, double b_lo, double b_hi, int grid) {
  if (n < 3) throw DomainError("need n >= 3");
  const int zp = n % 2 == 0 ? 1 : -1;
  const detail::XyMomenta<double> p(n, zp), m(n, -zp);
  const detail::XyMomenta<Big> pb(n, zp), mb(n, -zp);
  return scan([&](double b) { return jw_gap_sign_cached(p, m, pb, mb, jx, jy, b); }, b_lo, b_hi, grid);
}

CrossingScan scan_parity_transitions_lipkin(int n, double jx, double jy, double b_lo, double b_hi, int grid) {
  return scan([&](double b) { return lipkin_sector_gap_sign(n, jx, jy, b); }, b_lo, b_hi, grid);
}

}  // namespace qd
