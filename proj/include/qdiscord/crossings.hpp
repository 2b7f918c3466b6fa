#pragma once

// Ground-state parity transitions along a field sweep. Sector gaps of large
// chains fall far below double precision at small fields, so the sector
// energies are evaluated in 100-digit arithmetic here.

#include <vector>

namespace qd {

struct CrossingScan {
  std::vector<double> fields;  // located transitions, ascending
  int transitions() const { return static_cast<int>(fields.size()); }
};

/// Sign of E_plus - E_minus in extended precision (-1, 0, +1).
int jw_sector_gap_sign(int n, double jx, double jy, double b);
int lipkin_sector_gap_sign(int n, double jx, double jy, double b);

/// Transitions in (b_lo, b_hi] on a uniform grid refined by bisection.
CrossingScan scan_parity_transitions_jw(int n, double jx, double jy, double b_lo, double b_hi, int grid);
CrossingScan scan_parity_transitions_lipkin(int n, double jx, double jy, double b_lo, double b_hi, int grid);

}  // namespace qd
