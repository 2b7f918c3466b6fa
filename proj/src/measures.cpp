#include "qdiscord/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "qdiscord/errors.hpp"

namespace qd {

namespace {

constexpr double kUnitTol = 1e-12;
constexpr double kLambdaFloor = 1e-12;
constexpr double kDivergentP = 1e-14;
constexpr double kClampP = 1e-300;

const EntropyKind kVonNeumann = EntropyKind::von_neumann();

bool derivative_diverges_at_zero(const EntropyKind& kind) {
  return kind.family() == EntropyKind::Family::VonNeumann ||
         (kind.family() == EntropyKind::Family::Tsallis && kind.q() < 1.0);
}

struct ClampedDerivative {
  const EntropyKind& kind;
  bool divergent = false;

  double first(double p) {
    p = std::clamp(p, 0.0, 1.0);
    if (derivative_diverges_at_zero(kind)) {
      if (p < kDivergentP) divergent = true;
      p = std::max(p, kClampP);
    }
    return f_derivative(kind, p);
  }
  double second(double p) {
    p = std::clamp(p, 0.0, 1.0);
    if (derivative_diverges_at_zero(kind) || (kind.family() == EntropyKind::Family::Tsallis && kind.q() < 2.0)) {
      if (p < kDivergentP) divergent = true;
      p = std::max(p, kClampP);
    }
    return f_second_derivative(kind, p);
  }
};

double entropy_of(const EntropyKind& kind, const std::array<double, 4>& p) {
  return entropy_of_spectrum(kind, std::span<const double>(p.data(), p.size()));
}

double state_entropy(const EntropyKind& kind, const TwoQubitBloch& b) {
  return entropy(kind, bloch_compose(b));
}

double qubit_entropy(const EntropyKind& kind, const Vec3& r) {
  const double len = std::min(1.0, r.norm());
  return f_value(kind, 0.5 * (1.0 + len)) + f_value(kind, 0.5 * (1.0 - len));
}

std::array<double, 4> spectrum_raw(const TwoQubitBloch& b, const Vec3& k) {
  const double rbk = b.r_b.dot(k);
  const Vec3 jk = b.j * k;
  const double lp = (b.r_a + jk).norm();
  const double lm = (b.r_a - jk).norm();
  return {0.25 * (1 + rbk + lp), 0.25 * (1 + rbk - lp), 0.25 * (1 - rbk + lm), 0.25 * (1 - rbk - lm)};
}

// (alpha1, alpha2, alpha3) of the stationarity equation.
Vec3 alphas(ClampedDerivative& d, const TwoQubitBloch& b, const Vec3& k) {
  const double rbk = b.r_b.dot(k);
  const Vec3 jk = b.j * k;
  Vec3 a = Vec3::Zero();
  for (int nu : {+1, -1}) {
    const double lam = (b.r_a + nu * jk).norm();
    const double base = 0.25 * (1 + nu * rbk);
    const double fp = d.first(base + 0.25 * lam);
    const double fm = d.first(base - 0.25 * lam);
    a(0) += 0.25 * nu * (fp + fm);
    double ratio;  // sum_nu' nu' f'(p_nu^nu') / lambda_nu
    if (lam > kLambdaFloor) {
      ratio = (fp - fm) / lam;
    } else {
      ratio = 0.5 * d.second(base);
    }
    a(1) += 0.25 * nu * ratio;
    a(2) += 0.25 * ratio;
  }
  return a;
}

Vec3 deficit_gradient(ClampedDerivative& d, const TwoQubitBloch& b, const Vec3& k) {
  const Vec3 a = alphas(d, b, k);
  return a(0) * b.r_b + a(1) * (b.j.transpose() * b.r_a) + a(2) * (b.j.transpose() * b.j * k);
}

double discord_eta(ClampedDerivative& d, const TwoQubitBloch& b, const Vec3& k) {
  const double rbk = std::clamp(b.r_b.dot(k), -1.0, 1.0);
  return 0.5 * (d.first(0.5 * (1 + rbk)) - d.first(0.5 * (1 - rbk)));
}

Vec3 discord_gradient(ClampedDerivative& d, const TwoQubitBloch& b, const Vec3& k) {
  return deficit_gradient(d, b, k) - discord_eta(d, b, k) * b.r_b;
}

std::vector<Vec3> stationary_seeds(const TwoQubitBloch& b) {
  std::vector<Vec3> seeds{Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
  const Mat3 jtj = b.j.transpose() * b.j;
  const Mat3 m2 = b.r_b * b.r_b.transpose() + jtj;
  const Mat3 m3 = m2 + b.r_b * (b.r_a.transpose() * b.j) + (b.j.transpose() * b.r_a) * b.r_b.transpose();
  for (const Mat3& m : {m2, Mat3(0.5 * (m3 + m3.transpose()))}) {
    Eigen::SelfAdjointEigenSolver<Mat3> es(m);
    for (int i = 2; i >= 0; --i) seeds.push_back(es.eigenvectors().col(i));
  }
  return seeds;
}

bool has_tie(const std::vector<SphereCandidate>& cands, const Vec3& k, double value) {
  const double same = std::cos(1e-3);
  return std::any_of(cands.begin(), cands.end(), [&](const SphereCandidate& c) {
    return std::abs(c.value - value) < 1e-10 && std::abs(c.direction.dot(k)) < same;
  });
}

MeasureResult closed_form_result(const Mat3& m, double offset, double scale, const EntropyKind& kind,
                                 const TwoQubitBloch& b) {
  Eigen::SelfAdjointEigenSolver<Mat3> es(m);
  const double tr = m.trace();
  MeasureResult r;
  const double top = es.eigenvalues()(2);
  r.value = std::max(0.0, scale * (tr + offset - top));
  r.optimal_direction = canonical_direction(es.eigenvectors().col(2));
  r.tie = top - es.eigenvalues()(1) < 1e-10 * std::max(1.0, std::abs(top));
  for (int i = 2; i >= 0; --i) {
    r.candidate_values.push_back(
        {canonical_direction(es.eigenvectors().col(i)), scale * (tr + offset - es.eigenvalues()(i))});
  }
  const auto res = stationarity_residual_deficit(kind, b, MeasurementDirection::normalized(r.optimal_direction));
  r.stationarity_residual = res.value;
  r.residual_divergent = res.divergent;
  return r;
}

void require_state(const TwoQubitBloch& b) { bloch_compose(b).require_valid(); }

}  // namespace

MeasurementDirection::MeasurementDirection(const Vec3& k) : k_(k) {
  if (!k.allFinite() || std::abs(k.norm() - 1.0) > kUnitTol) {
    throw DomainError(fmt::format("measurement direction must be a unit vector (|k| = {})", k.norm()));
  }
}

MeasurementDirection MeasurementDirection::normalized(const Vec3& k) {
  const double n = k.norm();
  if (!(n > 0.0) || !k.allFinite()) throw DomainError("measurement direction must be non-zero");
  return MeasurementDirection(k / n, Unchecked{});
}

TwoQubitBloch post_measurement_state(const TwoQubitBloch& b, const MeasurementDirection& k) {
  const Vec3& kv = k.vec();
  return {b.r_a, kv * kv.dot(b.r_b), b.j * kv * kv.transpose()};
}

std::array<double, 4> post_measurement_spectrum(const TwoQubitBloch& b, const MeasurementDirection& k) {
  auto p = spectrum_raw(b, k.vec());
  for (double& x : p) x = std::clamp(x, 0.0, 1.0);
  return p;
}

double conditional_entropy_quantum(const DensityMatrix& rho, int dim_a, int dim_b) {
  rho.require_valid();
  return entropy(kVonNeumann, rho) - entropy(kVonNeumann, partial_trace(rho, dim_a, dim_b, Side::B));
}

double conditional_entropy_measured(const TwoQubitBloch& b, const MeasurementDirection& k) {
  const double rbk = std::clamp(b.r_b.dot(k.vec()), -1.0, 1.0);
  const double marginal = f_value(kVonNeumann, 0.5 * (1 + rbk)) + f_value(kVonNeumann, 0.5 * (1 - rbk));
  return std::max(0.0, entropy_of(kVonNeumann, post_measurement_spectrum(b, k)) - marginal);
}

double mutual_information(const DensityMatrix& rho, int dim_a, int dim_b) {
  rho.require_valid();
  const double v = entropy(kVonNeumann, partial_trace(rho, dim_a, dim_b, Side::A)) +
                   entropy(kVonNeumann, partial_trace(rho, dim_a, dim_b, Side::B)) - entropy(kVonNeumann, rho);
  return v > -1e-12 ? std::max(0.0, v) : v;
}

double deficit_at(const EntropyKind& kind, const TwoQubitBloch& b, const MeasurementDirection& k) {
  return entropy_of(kind, post_measurement_spectrum(b, k)) - state_entropy(kind, b);
}

double discord_at(const TwoQubitBloch& b, const MeasurementDirection& k) {
  const double unmeasured = state_entropy(kVonNeumann, b) - qubit_entropy(kVonNeumann, b.r_b);
  return conditional_entropy_measured(b, k) - unmeasured;
}

MeasureResult info_deficit(const EntropyKind& kind, const TwoQubitBloch& state, Side side) {
  const TwoQubitBloch b = side == Side::B ? state : state.swapped();
  require_state(b);
  const double s_rho = state_entropy(kind, b);

  SphereObjective obj;
  obj.value = [&](const Vec3& k) { return entropy_of(kind, spectrum_raw(b, k)); };
  obj.gradient = [&](const Vec3& k) {
    ClampedDerivative d{kind};
    return deficit_gradient(d, b, k);
  };
  const SphereMinimum m = minimize_on_sphere(obj, stationary_seeds(b));

  MeasureResult r;
  r.value = std::max(0.0, m.value - s_rho);
  r.optimal_direction = m.direction;
  for (const auto& c : m.seeded) r.candidate_values.push_back({canonical_direction(c.direction), c.value - s_rho});
  r.tie = has_tie(m.seeded, m.direction, m.value);
  const auto res = stationarity_residual_deficit(kind, b, MeasurementDirection::normalized(m.direction));
  r.stationarity_residual = res.value;
  r.residual_divergent = res.divergent;
  return r;
}

MeasureResult one_way_deficit(const TwoQubitBloch& b, Side side) { return info_deficit(kVonNeumann, b, side); }

MeasureResult quantum_discord(const TwoQubitBloch& state, Side side) {
  const TwoQubitBloch b = side == Side::B ? state : state.swapped();
  require_state(b);
  const double unmeasured = state_entropy(kVonNeumann, b) - qubit_entropy(kVonNeumann, b.r_b);

  SphereObjective obj;
  obj.value = [&](const Vec3& k) {
    const double rbk = std::clamp(b.r_b.dot(k), -1.0, 1.0);
    return entropy_of(kVonNeumann, spectrum_raw(b, k)) - f_value(kVonNeumann, 0.5 * (1 + rbk)) -
           f_value(kVonNeumann, 0.5 * (1 - rbk));
  };
  obj.gradient = [&](const Vec3& k) {
    ClampedDerivative d{kVonNeumann};
    return discord_gradient(d, b, k);
  };
  const SphereMinimum m = minimize_on_sphere(obj, stationary_seeds(b));

  MeasureResult r;
  r.value = std::max(0.0, m.value - unmeasured);
  r.optimal_direction = m.direction;
  for (const auto& c : m.seeded) {
    r.candidate_values.push_back({canonical_direction(c.direction), c.value - unmeasured});
  }
  r.tie = has_tie(m.seeded, m.direction, m.value);
  const auto res = stationarity_residual_discord(b, MeasurementDirection::normalized(m.direction));
  r.stationarity_residual = res.value;
  r.residual_divergent = res.divergent;
  return r;
}

MeasureResult geometric_discord_closed(const TwoQubitBloch& b) {
  require_state(b);
  const Mat3 m2 = b.r_b * b.r_b.transpose() + b.j.transpose() * b.j;
  return closed_form_result(m2, 0.0, 0.5, EntropyKind::linear(), b);
}

MeasureResult cubic_discord_closed(const TwoQubitBloch& b) {
  require_state(b);
  Mat3 m3 = b.r_b * b.r_b.transpose() + b.j.transpose() * b.j + b.r_b * (b.r_a.transpose() * b.j) +
            (b.j.transpose() * b.r_a) * b.r_b.transpose();
  m3 = 0.5 * (m3 + m3.transpose());
  return closed_form_result(m3, -2.0 * b.j.determinant(), 0.25, EntropyKind::tsallis(3.0), b);
}

double mmm_deficit(const EntropyKind& kind, const TwoQubitBloch& b) {
  if (b.r_a.norm() > 1e-12 || b.r_b.norm() > 1e-12) {
    throw PreconditionError("mmm_deficit requires maximally mixed marginals");
  }
  const DensityMatrix rho = bloch_compose(b);
  rho.require_valid();
  const RVector p = eigenvalues(rho);  // descending
  const double v = 2 * f_value(kind, 0.5 * (p(0) + p(1))) + 2 * f_value(kind, 0.5 * (p(2) + p(3))) -
                   entropy_of_spectrum(kind, p);
  return std::max(0.0, v);
}

StationarityResidual stationarity_residual_deficit(const EntropyKind& kind, const TwoQubitBloch& b,
                                                   const MeasurementDirection& k) {
  ClampedDerivative d{kind};
  const Vec3 g = deficit_gradient(d, b, k.vec());
  return {k.vec().cross(g).norm(), d.divergent};
}

StationarityResidual stationarity_residual_discord(const TwoQubitBloch& b, const MeasurementDirection& k) {
  ClampedDerivative d{kVonNeumann};
  const Vec3 g = discord_gradient(d, b, k.vec());
  return {k.vec().cross(g).norm(), d.divergent};
}

double deficit_pure_plus_noise(const EntropyKind& kind, double x, const std::vector<double>& schmidt_probs,
                               int dim_a, int dim_b) {
  const int n = dim_a * dim_b;
  if (dim_a < 2 || dim_b < 2) throw PreconditionError("deficit_pure_plus_noise: need n_A, n_B >= 2");
  if (x < 0.0 || x > 1.0) throw DomainError("deficit_pure_plus_noise: x outside [0,1]");
  if (schmidt_probs.empty() || static_cast<int>(schmidt_probs.size()) > std::min(dim_a, dim_b)) {
    throw InvalidState("deficit_pure_plus_noise: Schmidt rank exceeds min(n_A, n_B)");
  }
  const double total = std::accumulate(schmidt_probs.begin(), schmidt_probs.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) throw InvalidState("deficit_pure_plus_noise: probabilities do not sum to 1");
  for (std::size_t i = 0; i < schmidt_probs.size(); ++i) {
    if (schmidt_probs[i] < 0.0) throw InvalidState("deficit_pure_plus_noise: negative probability");
    if (i > 0 && schmidt_probs[i] > schmidt_probs[i - 1] + 1e-15) {
      throw InvalidState("deficit_pure_plus_noise: probabilities must be descending");
    }
  }
  const double nd = n;
  const int ns = static_cast<int>(schmidt_probs.size());
  double v = 0.0;
  for (double pk : schmidt_probs) v += f_value(kind, (x * (nd * pk - 1.0) + 1.0) / nd);
  v -= f_value(kind, (x * (nd - 1.0) + 1.0) / nd);
  v -= (ns - 1) * f_value(kind, (1.0 - x) / nd);
  return v;
}

}  // namespace qd
