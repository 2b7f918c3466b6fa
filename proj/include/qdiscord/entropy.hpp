#pragma once

// Trace-form entropies S_f(rho) = Tr f(rho), normalized so that 2 f(1/2) = 1
// (a maximally mixed qubit pair, or the marginal of a Bell pair, has entropy 1).

#include <span>
#include <string>

#include "qdiscord/qstate.hpp"

namespace qd {

class EntropyKind {
 public:
  enum class Family { VonNeumann, Linear, Tsallis };

  static EntropyKind von_neumann() { return EntropyKind(Family::VonNeumann, 1.0); }
  static EntropyKind linear() { return EntropyKind(Family::Linear, 2.0); }
  /// Throws DomainError unless q > 0 and q != 1.
  static EntropyKind tsallis(double q);

  Family family() const { return family_; }
  /// Entropic index; 1 for von Neumann, 2 for linear.
  double q() const { return q_; }
  std::string name() const;

  friend bool operator==(const EntropyKind&, const EntropyKind&) = default;

 private:
  EntropyKind(Family f, double q) : family_(f), q_(q) {}
  Family family_;
  double q_;
};

/// f(p) for p in [0,1]; values up to 1e-12 outside are clipped, further ones
/// throw DomainError.
double f_value(const EntropyKind& kind, double p);

/// f'(p). Throws DomainError at p <= 0 for von Neumann (divergent).
double f_derivative(const EntropyKind& kind, double p);

/// f''(p). Throws DomainError at p <= 0 for von Neumann.
double f_second_derivative(const EntropyKind& kind, double p);

/// Sum_k f(p_k) over a spectrum; entries within -1e-10 of zero count as zero.
double entropy_of_spectrum(const EntropyKind& kind, std::span<const double> probs);
double entropy_of_spectrum(const EntropyKind& kind, const RVector& probs);

double entropy(const EntropyKind& kind, const DensityMatrix& rho);

/// Von Neumann relative entropy S(rho || sigma) in bits; +inf when the support
/// of rho is not contained in that of sigma.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace qd
