#include "qdiscord/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include <fmt/format.h>

#include "qdiscord/aligned.hpp"
#include "qdiscord/dense_solver.hpp"
#include "qdiscord/errors.hpp"
#include "qdiscord/factorization.hpp"
#include "qdiscord/jw_solver.hpp"
#include "qdiscord/lipkin_solver.hpp"
#include "qdiscord/measures.hpp"
#include "qdiscord/pair_states.hpp"

namespace qd {

namespace {

// closed form vs. search on the aligned mixture
constexpr double kClosedTolerance = 1e-8;

template <class Fn>
void parallel_for(int count, int threads, const ProgressFn& progress, Fn fn) {
  threads = std::max(1, std::min(threads, count));
  std::atomic<int> next{0};
  std::atomic<int> done{0};
  std::exception_ptr error;
  std::mutex mu;
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (error) return;
      }
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        return;
      }
      const int d = done.fetch_add(1) + 1;
      if (progress) {
        std::lock_guard<std::mutex> lock(mu);
        progress(d, count);
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

void note(OutputRecord& r, const std::string& flag) {
  if (std::find(r.flags.begin(), r.flags.end(), flag) == r.flags.end()) r.flags.push_back(flag);
}

void absorb(OutputRecord& r, const MeasureResult& m) {
  if (!r.direction) r.direction = m.optimal_direction;
  if (m.tie) note(r, "tie");
  if (m.residual_divergent) note(r, "divergent_residual");
}

// Fill the requested measure columns. `closed` selects the exact M_2 / M_3
// eigenvector forms for I2 and I3 instead of the sphere search.
void evaluate_measures(const std::vector<MeasureSpec>& measures, const DensityMatrix& rho, bool closed,
                       OutputRecord& r) {
  const TwoQubitBloch b = bloch_decompose(rho);
  for (const MeasureSpec& m : measures) {
    switch (m.kind) {
      case MeasureSpec::Kind::D: {
        const MeasureResult res = quantum_discord(b);
        r.d = res.value;
        absorb(r, res);
        break;
      }
      case MeasureSpec::Kind::I1: {
        const MeasureResult res = one_way_deficit(b);
        r.i1 = res.value;
        absorb(r, res);
        break;
      }
      case MeasureSpec::Kind::I2: {
        const MeasureResult res = closed ? geometric_discord_closed(b) : info_deficit(EntropyKind::linear(), b);
        r.i2 = res.value;
        absorb(r, res);
        break;
      }
      case MeasureSpec::Kind::I3: {
        const MeasureResult res = closed ? cubic_discord_closed(b) : info_deficit(EntropyKind::tsallis(3.0), b);
        r.i3 = res.value;
        absorb(r, res);
        break;
      }
      case MeasureSpec::Kind::Iq: {
        const EntropyKind kind = m.q == 2.0 ? EntropyKind::linear() : EntropyKind::tsallis(m.q);
        const MeasureResult res = info_deficit(kind, b);
        r.iq = res.value;
        absorb(r, res);
        break;
      }
      case MeasureSpec::Kind::C:
        r.c = concurrence(rho);
        break;
    }
  }
}

bool wants(const std::vector<MeasureSpec>& measures, MeasureSpec::Kind kind) {
  return std::any_of(measures.begin(), measures.end(), [&](const MeasureSpec& m) { return m.kind == kind; });
}

// Aligned-mixture columns at the mean-field angle cos(theta) = |B| / J_x.
void mean_field_reference(const SweepConfig& cfg, double b_over_jx, OutputRecord& r) {
  const double c = std::abs(b_over_jx);
  if (c > 1.0) return;
  const double theta = std::acos(c);
  if (wants(cfg.measures, MeasureSpec::Kind::D)) r.d_ref = aligned_discord(theta);
  if (wants(cfg.measures, MeasureSpec::Kind::I2)) r.i2_ref = aligned_I2(theta).value;
  if (wants(cfg.measures, MeasureSpec::Kind::I3)) r.i3_ref = aligned_I3(theta).value;
}

OutputRecord base_record(const SweepConfig& cfg, double x) {
  OutputRecord r;
  r.model = to_string(cfg.model);
  r.n = cfg.model == Model::Aligned ? 0 : cfg.n;
  r.chi = cfg.model == Model::Aligned ? 0.0 : cfg.chi;
  r.x = x;
  return r;
}

}  // namespace

std::string to_string(Model m) {
  switch (m) {
    case Model::Aligned:
      return "aligned";
    case Model::CyclicNN:
      return "cyclic_nn";
    case Model::FullyConnected:
      return "fully_connected";
  }
  return "unknown";
}

std::string MeasureSpec::label() const {
  switch (kind) {
    case Kind::D:
      return "D";
    case Kind::I1:
      return "I1";
    case Kind::I2:
      return "I2";
    case Kind::I3:
      return "I3";
    case Kind::Iq:
      return fmt::format("Iq({})", q);
    case Kind::C:
      return "C";
  }
  return "?";
}

void SweepConfig::validate() const {
  if (grid_points < 1) throw ConfigError("grid needs at least one point");
  if (grid_points > 1 && !(grid_max > grid_min)) throw ConfigError("grid must be strictly increasing (max > min)");
  if (!std::isfinite(grid_min) || !std::isfinite(grid_max)) throw ConfigError("grid bounds must be finite");
  if (measures.empty()) throw ConfigError("no measures requested");
  int iq = 0;
  for (const MeasureSpec& m : measures) {
    if (m.kind == MeasureSpec::Kind::Iq) {
      ++iq;
      if (!(m.q > 0.0) || m.q == 1.0) throw ConfigError(fmt::format("Tsallis index q = {} must be > 0 and != 1", m.q));
    }
  }
  if (iq > 1) throw ConfigError("at most one Iq measure per sweep");
  if (!(jx > 0.0)) throw ConfigError("J_x must be positive");
  if (model == Model::Aligned) {
    if (grid_min < 0.0 || grid_max > M_PI / 2 + 1e-12) throw ConfigError("theta grid must lie in [0, pi/2]");
    if (epsilon <= -1.0 || epsilon > 1.0) throw ConfigError("epsilon must lie in (-1, 1]");
    return;
  }
  if (n < 3) throw ConfigError("n must be at least 3");
  if (!std::isfinite(chi)) throw ConfigError("chi must be finite");
  if (model == Model::CyclicNN && !all_separations) {
    if (separations.empty()) throw ConfigError("no separations requested");
    for (int l : separations) {
      if (l < 1 || l > n / 2) throw ConfigError(fmt::format("separation {} outside [1, n/2] = [1, {}]", l, n / 2));
    }
  }
  if (solver == SolverChoice::Dense && n > 14) throw ConfigError("dense solver limited to n <= 14");
  if (threads < 0) throw ConfigError("threads must be >= 0");
}

std::vector<double> SweepConfig::grid() const {
  std::vector<double> g;
  if (grid_points == 1) return {grid_min};
  for (int i = 0; i < grid_points; ++i) {
    g.push_back(i + 1 == grid_points ? grid_max : grid_min + (grid_max - grid_min) * i / (grid_points - 1));
  }
  return g;
}

std::vector<int> SweepConfig::separation_list() const {
  if (!all_separations) {
    std::vector<int> l = separations;
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    return l;
  }
  std::vector<int> l;
  for (int i = 1; i <= n / 2; ++i) l.push_back(i);
  return l;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QDISCORD_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<OutputRecord> run_aligned_sweep(const SweepConfig& cfg, const ProgressFn& progress) {
  if (cfg.model != Model::Aligned) throw ConfigError("aligned sweep needs model = aligned");
  cfg.validate();
  const std::vector<double> grid = cfg.grid();
  std::vector<OutputRecord> out(grid.size());
  parallel_for(static_cast<int>(grid.size()), resolve_threads(cfg.threads), progress, [&](int i) {
    const double theta = grid[static_cast<std::size_t>(i)];
    OutputRecord r = base_record(cfg, theta);
    AlignedMixtureParams p{theta, cfg.epsilon, std::nullopt};
    p.validate();
    const DensityMatrix rho = bloch_compose(aligned_state(p));
    evaluate_measures(cfg.measures, rho, false, r);
    if (cfg.epsilon == 0.0) {
      double diff = 0.0;
      bool any = false;
      if (r.d) {
        r.d_ref = aligned_discord(theta);
        diff = std::max(diff, std::abs(*r.d - *r.d_ref));
        any = true;
      }
      if (r.i2) {
        r.i2_ref = aligned_I2(theta).value;
        diff = std::max(diff, std::abs(*r.i2 - *r.i2_ref));
        any = true;
      }
      if (r.i3) {
        r.i3_ref = aligned_I3(theta).value;
        diff = std::max(diff, std::abs(*r.i3 - *r.i3_ref));
        any = true;
      }
      if (any) r.closed_diff = diff;
      if (diff > kClosedTolerance) {
        throw ConsistencyError(fmt::format("closed form and search differ by {:.3e} at theta = {}", diff, theta));
      }
    }
    out[static_cast<std::size_t>(i)] = std::move(r);
  });
  return out;
}

std::vector<OutputRecord> run_chain_sweep(const SweepConfig& cfg, const ProgressFn& progress) {
  if (cfg.model != Model::CyclicNN) throw ConfigError("chain sweep needs model = cyclic_nn");
  cfg.validate();
  const std::vector<double> grid = cfg.grid();
  const std::vector<int> seps = cfg.separation_list();
  const double jy = cfg.chi * cfg.jx;
  std::vector<std::vector<OutputRecord>> rows(grid.size());

  parallel_for(static_cast<int>(grid.size()), resolve_threads(cfg.threads), progress, [&](int gi) {
    const double x = grid[static_cast<std::size_t>(gi)];
    const ChainSpec spec = ChainSpec::cyclic_nn(cfg.n, 0.5, cfg.jx, jy, 0.0, x * cfg.jx);
    const bool dense = cfg.solver == SolverChoice::Dense;
    const GroundStateResult gs = dense ? ground_state_dense(spec) : ground_state_jw(spec);
    for (int l : seps) {
      OutputRecord r = base_record(cfg, x);
      r.separation = l;
      r.parity = sign(gs.parity);
      r.e_minus = gs.energy_minus;
      r.e_plus = gs.energy_plus;
      if (gs.degeneracy_flag) note(r, "degenerate");
      const DensityMatrix rho = dense ? pair_rdm_from_ket(gs.ket, cfg.n, 0, l)
                                      : pair_rdm_from_observables(pair_observables_jw(gs, 0, l));
      evaluate_measures(cfg.measures, rho, true, r);
      mean_field_reference(cfg, x, r);
      rows[static_cast<std::size_t>(gi)].push_back(std::move(r));
    }
  });
  std::vector<OutputRecord> out;
  for (auto& row : rows) {
    for (auto& r : row) out.push_back(std::move(r));
  }
  return out;
}

std::vector<OutputRecord> run_lipkin_sweep(const SweepConfig& cfg, const ProgressFn& progress) {
  if (cfg.model != Model::FullyConnected) throw ConfigError("lipkin sweep needs model = fully_connected");
  cfg.validate();
  const std::vector<double> grid = cfg.grid();
  const double jy = cfg.chi * cfg.jx;
  std::vector<OutputRecord> out(grid.size());
  parallel_for(static_cast<int>(grid.size()), resolve_threads(cfg.threads), progress, [&](int gi) {
    const double x = grid[static_cast<std::size_t>(gi)];
    OutputRecord r = base_record(cfg, x);
    DensityMatrix rho;
    if (cfg.solver == SolverChoice::Dense) {
      const GroundStateResult gs = ground_state_dense(ChainSpec::fully_connected(cfg.n, 0.5, cfg.jx, jy, 0.0, x * cfg.jx));
      r.parity = sign(gs.parity);
      r.e_minus = gs.energy_minus;
      r.e_plus = gs.energy_plus;
      if (gs.degeneracy_flag) note(r, "degenerate");
      rho = pair_rdm_from_ket(gs.ket, cfg.n, 0, 1);
    } else {
      const GroundStateResult gs = lipkin_ground_state(cfg.n, cfg.jx, jy, x * cfg.jx);
      r.parity = sign(gs.parity);
      r.e_minus = gs.energy_minus;
      r.e_plus = gs.energy_plus;
      if (gs.degeneracy_flag) note(r, "degenerate");
      rho = pair_rdm_symmetric(gs.block, cfg.n);
    }
    evaluate_measures(cfg.measures, rho, true, r);
    mean_field_reference(cfg, x, r);
    out[static_cast<std::size_t>(gi)] = std::move(r);
  });
  return out;
}

std::vector<OutputRecord> run_sweep(const SweepConfig& cfg, const ProgressFn& progress) {
  switch (cfg.model) {
    case Model::Aligned:
      return run_aligned_sweep(cfg, progress);
    case Model::CyclicNN:
      return run_chain_sweep(cfg, progress);
    case Model::FullyConnected:
      return run_lipkin_sweep(cfg, progress);
  }
  throw UnsupportedSpec("unknown model");
}

FactorizeReport run_factorize(const FactorizeConfig& cfg) {
  ChainSpec spec;
  switch (cfg.geometry) {
    case Geometry::CyclicNN:
      spec = ChainSpec::cyclic_nn(cfg.n, cfg.s, cfg.jx, cfg.jy, cfg.jz, 0.0);
      break;
    case Geometry::OpenNN:
      spec = ChainSpec::open_nn(cfg.n, cfg.s, cfg.jx, cfg.jy, cfg.jz, 0.0);
      break;
    case Geometry::FullyConnected:
      spec = ChainSpec::fully_connected(cfg.n, cfg.s, cfg.jx, cfg.jy, cfg.jz, 0.0);
      break;
    case Geometry::General:
      throw UnsupportedSpec("factorize needs cyclic_nn, open_nn or fully_connected");
  }
  const FactorizingField ff = uniform_factorizing_field(spec);
  FactorizeReport rep;
  rep.config = cfg;
  rep.chi = ff.chi;
  rep.axes_swapped = ff.axes_swapped;
  rep.theta = ff.theta;
  rep.b_s = ff.b_s;
  rep.fields = ff.fields;
  const Eigen::VectorXd thetas = Eigen::VectorXd::Constant(cfg.n, ff.theta);
  const FactorizationResiduals res = check_factorization(ff.spec, thetas);
  rep.site_residuals = res.site;
  rep.max_pair_residual = res.max_pair;
  rep.max_site_residual = res.max_site;
  const double dim = std::pow(2.0 * cfg.s + 1.0, cfg.n);
  if (dim <= 4096.0) {
    const SparseMatrix h = build_hamiltonian(ff.spec);
    const CVector ket = product_state(cfg.n, cfg.s, thetas);
    const CVector hk = h.cast<Complex>() * ket;
    const Complex e = ket.dot(hk);
    rep.eigen_residual = (hk - e * ket).norm();
  }
  return rep;
}

}  // namespace qd
