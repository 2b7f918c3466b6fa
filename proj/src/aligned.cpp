#include "qdiscord/aligned.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "qdiscord/entropy.hpp"
#include "qdiscord/errors.hpp"

namespace qd {

namespace {

constexpr double kAngleTol = 1e-12;

void check_theta(double theta) {
  if (!(theta >= -kAngleTol && theta <= std::numbers::pi / 2 + kAngleTol)) {
    throw DomainError(fmt::format("theta = {} outside [0, pi/2]", theta));
  }
}

}  // namespace

AlignedMixtureParams AlignedMixtureParams::from_chain(double theta, int n, int sector) {
  if (n < 2) throw DomainError("chain size must be >= 2");
  if (sector != 1 && sector != -1) throw DomainError("parity sector must be +1 or -1");
  AlignedMixtureParams p{theta, sector * std::pow(std::cos(theta), n - 2), n};
  p.validate();
  return p;
}

void AlignedMixtureParams::validate() const {
  check_theta(theta);
  if (!(epsilon > -1.0 && epsilon <= 1.0)) throw DomainError(fmt::format("epsilon = {} outside (-1, 1]", epsilon));
  if (n) {
    if (*n < 2) throw DomainError("chain size must be >= 2");
    const double expected = std::pow(std::cos(theta), *n - 2);
    if (std::abs(std::abs(epsilon) - expected) > 1e-12) {
      throw DomainError(fmt::format("|epsilon| = {} inconsistent with cos^(n-2) theta = {}", std::abs(epsilon), expected));
    }
  }
}

TwoQubitBloch aligned_state(const AlignedMixtureParams& p) {
  p.validate();
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  const double eps = p.epsilon;
  const double norm = 1.0 + eps * c * c;
  if (!(norm > 0.0)) throw DomainError("aligned state normalization 1 + eps cos^2 theta must be positive");
  TwoQubitBloch b;
  b.r_a = Vec3(0, 0, c * (1 + eps) / norm);
  b.r_b = b.r_a;
  b.j.diagonal() << s * s / norm, -eps * s * s / norm, (c * c + eps) / norm;
  return b;
}

double aligned_discord(double theta) {
  check_theta(theta);
  const EntropyKind vn = EntropyKind::von_neumann();
  auto f = [&vn](double p) { return f_value(vn, p); };
  const double c = std::cos(theta);
  const double root = std::sqrt(1.0 - 0.25 * std::pow(std::sin(2 * theta), 2));
  double sum = 0.0;
  for (int nu : {+1, -1}) {
    sum += 2 * f((1 + nu * root) / 4) - f((1 + nu * c * c) / 2) + f((1 + nu * c) / 2);
  }
  return std::max(0.0, sum - 1.0);
}

double aligned_theta_c2() { return std::acos(std::sqrt(1.0 / 3.0)); }

double aligned_theta_c3() { return std::acos(std::sqrt((std::sqrt(17.0) - 3.0) / 4.0)); }

BranchValue aligned_I2(double theta) {
  check_theta(theta);
  const double c2 = std::pow(std::cos(theta), 2);
  const double s4 = std::pow(std::sin(theta), 4);
  if (theta < aligned_theta_c2()) return {0.5 * s4, MeasurementBranch::Z};
  return {0.5 * (c2 + c2 * c2), MeasurementBranch::X};
}

BranchValue aligned_I3(double theta) {
  check_theta(theta);
  const double c2 = std::pow(std::cos(theta), 2);
  const double s4 = std::pow(std::sin(theta), 4);
  if (theta < aligned_theta_c3()) return {0.25 * s4, MeasurementBranch::Z};
  return {0.25 * (c2 + 3 * c2 * c2), MeasurementBranch::X};
}

TypedConcurrence aligned_concurrence(const AlignedMixtureParams& p) {
  p.validate();
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  const double value = std::abs(p.epsilon) * s * s / (1 + p.epsilon * c * c);
  ConcurrenceType type = ConcurrenceType::None;
  if (value > 0.0) type = p.epsilon > 0 ? ConcurrenceType::Parallel : ConcurrenceType::Antiparallel;
  return {value, type};
}

}  // namespace qd
