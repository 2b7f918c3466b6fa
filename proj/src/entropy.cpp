#include "qdiscord/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "qdiscord/errors.hpp"

namespace qd {

namespace {

constexpr double kDomainTol = 1e-12;
constexpr double kClipTol = 1e-10;

double clip_probability(double p) {
  if (p < -kDomainTol || p > 1.0 + kDomainTol || std::isnan(p)) {
    throw DomainError(fmt::format("entropy argument {} outside [0,1]", p));
  }
  return std::clamp(p, 0.0, 1.0);
}

double tsallis_norm(double q) { return 1.0 - std::exp2(1.0 - q); }

}  // namespace

EntropyKind EntropyKind::tsallis(double q) {
  if (!(q > 0.0) || q == 1.0) throw DomainError(fmt::format("Tsallis index must be > 0 and != 1 (got {})", q));
  return EntropyKind(Family::Tsallis, q);
}

std::string EntropyKind::name() const {
  switch (family_) {
    case Family::VonNeumann:
      return "von_neumann";
    case Family::Linear:
      return "linear";
    case Family::Tsallis:
      return fmt::format("tsallis({})", q_);
  }
  return "unknown";
}

double f_value(const EntropyKind& kind, double p) {
  p = clip_probability(p);
  switch (kind.family()) {
    case EntropyKind::Family::VonNeumann:
      return p > 0.0 ? -p * std::log2(p) : 0.0;
    case EntropyKind::Family::Linear:
      return 2.0 * p * (1.0 - p);
    case EntropyKind::Family::Tsallis:
      return (p - std::pow(p, kind.q())) / tsallis_norm(kind.q());
  }
  return 0.0;
}

double f_derivative(const EntropyKind& kind, double p) {
  p = clip_probability(p);
  switch (kind.family()) {
    case EntropyKind::Family::VonNeumann:
      if (p <= 0.0) throw DomainError("von Neumann f'(0) diverges");
      return -(std::log2(p) + 1.0 / std::log(2.0));
    case EntropyKind::Family::Linear:
      return 2.0 - 4.0 * p;
    case EntropyKind::Family::Tsallis: {
      const double q = kind.q();
      if (p <= 0.0 && q < 1.0) throw DomainError("Tsallis f'(0) diverges for q < 1");
      return (1.0 - q * std::pow(p, q - 1.0)) / tsallis_norm(q);
    }
  }
  return 0.0;
}

double f_second_derivative(const EntropyKind& kind, double p) {
  p = clip_probability(p);
  switch (kind.family()) {
    case EntropyKind::Family::VonNeumann:
      if (p <= 0.0) throw DomainError("von Neumann f''(0) diverges");
      return -1.0 / (p * std::log(2.0));
    case EntropyKind::Family::Linear:
      return -4.0;
    case EntropyKind::Family::Tsallis: {
      const double q = kind.q();
      if (p <= 0.0 && q < 2.0) throw DomainError("Tsallis f''(0) diverges for q < 2");
      return -q * (q - 1.0) * std::pow(p, q - 2.0) / tsallis_norm(q);
    }
  }
  return 0.0;
}

double entropy_of_spectrum(const EntropyKind& kind, std::span<const double> probs) {
  double s = 0.0;
  for (double p : probs) {
    if (p < 0.0 && p >= -kClipTol) p = 0.0;
    s += f_value(kind, p);
  }
  return s;
}

double entropy_of_spectrum(const EntropyKind& kind, const RVector& probs) {
  return entropy_of_spectrum(kind, std::span<const double>(probs.data(), static_cast<std::size_t>(probs.size())));
}

double entropy(const EntropyKind& kind, const DensityMatrix& rho) {
  rho.require_valid();
  return entropy_of_spectrum(kind, eigenvalues(rho));
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionMismatch("relative_entropy: dimension mismatch");
  rho.require_valid();
  sigma.require_valid();
  const double neg_s = -entropy(EntropyKind::von_neumann(), rho);  // Tr rho log rho
  const EigenSystem es = eigh(sigma.matrix());
  double cross = 0.0;  // Tr rho log sigma
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    const double weight = (es.vectors.col(k).adjoint() * rho.matrix() * es.vectors.col(k))(0, 0).real();
    const double lam = es.values(k);
    if (weight <= kClipTol) continue;
    if (lam <= kClipTol) return std::numeric_limits<double>::infinity();
    cross += weight * std::log2(lam);
  }
  return neg_s - cross;
}

}  // namespace qd
