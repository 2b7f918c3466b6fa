// qdiscord: sweeps of discord-type measures over the aligned mixture and XY
// chain ground states, plus the factorizing-field report.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "qdiscord/errors.hpp"
#include "qdiscord/record_io.hpp"
#include "qdiscord/sweep_config.hpp"

namespace {

enum Exit { kOk = 0, kConfig = 2, kUnsupported = 3, kConsistency = 4 };

struct SweepFlags {
  std::string config;
  std::optional<int> n;
  std::optional<double> chi, jx, epsilon;
  std::optional<std::string> grid, measures, separations, out, format, solver;
  std::optional<int> threads;
  bool quiet = false;
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& f, bool chain_like) {
  cmd->add_option("--config", f.config, "JSON config file");
  cmd->add_option("--grid", f.grid, chain_like ? "B/J_x grid min:max:points" : "theta grid min:max:points");
  cmd->add_option("--measures", f.measures, "comma list of D,I1,I2,I3,Iq(q),C");
  cmd->add_option("--out", f.out, "output path, - for stdout");
  cmd->add_option("--format", f.format, "csv or json (default from --out suffix)");
  cmd->add_option("--threads", f.threads, "worker threads (default QDISCORD_THREADS or all cores)");
  cmd->add_flag("--quiet", f.quiet, "no progress on stderr");
  if (chain_like) {
    cmd->add_option("--n", f.n, "number of spins");
    cmd->add_option("--chi", f.chi, "anisotropy J_y/J_x");
    cmd->add_option("--Jx", f.jx, "coupling J_x (energy scale)");
    cmd->add_option("--solver", f.solver, "auto or dense");
  } else {
    cmd->add_option("--epsilon", f.epsilon, "coherence weight of the mixture");
  }
}

void add_separation_flag(CLI::App* cmd, SweepFlags& f) {
  cmd->add_option("--separations", f.separations, "\"all\" or comma list of L");
}

qd::SweepConfig build_config(const SweepFlags& f, qd::Model model) {
  qd::SweepConfig cfg = f.config.empty() ? qd::default_sweep_config(model) : qd::load_sweep_config(f.config, model);
  if (f.n) cfg.n = *f.n;
  if (f.chi) cfg.chi = *f.chi;
  if (f.jx) cfg.jx = *f.jx;
  if (f.epsilon) cfg.epsilon = *f.epsilon;
  if (f.grid) {
    const qd::GridSpec g = qd::parse_grid(*f.grid);
    cfg.grid_min = g.min;
    cfg.grid_max = g.max;
    cfg.grid_points = g.points;
  }
  if (f.measures) cfg.measures = qd::parse_measures(*f.measures);
  if (f.separations) qd::parse_separations(*f.separations, cfg);
  if (f.out) cfg.output = *f.out;
  if (f.out || f.format) cfg.format = qd::parse_format(f.format, cfg.output);
  if (f.solver) {
    if (*f.solver == "auto") {
      cfg.solver = qd::SolverChoice::Auto;
    } else if (*f.solver == "dense") {
      cfg.solver = qd::SolverChoice::Dense;
    } else {
      throw qd::ConfigError(fmt::format("unknown solver '{}'", *f.solver));
    }
  }
  if (f.threads) cfg.threads = *f.threads;
  cfg.validate();
  return cfg;
}

template <class Writer>
void emit(const std::string& path, Writer write) {
  if (path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw qd::ConfigError(fmt::format("cannot write '{}'", path));
  write(out);
  if (!out) throw qd::ConfigError(fmt::format("write to '{}' failed", path));
}

int run_sweep_command(const SweepFlags& f, qd::Model model) {
  const qd::SweepConfig cfg = build_config(f, model);
  const std::string tag = qd::to_string(model);
  qd::ProgressFn progress;
  if (!f.quiet) {
    progress = [&tag](int done, int total) {
      std::cerr << fmt::format("\r[{}] {}/{}", tag, done, total);
      if (done == total) std::cerr << "\n";
    };
  }
  const auto records = qd::run_sweep(cfg, progress);
  emit(cfg.output, [&](std::ostream& os) { qd::write_records(os, records, cfg.format); });
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discord-type correlation sweeps for two-qubit states and XY spin chains"};
  app.require_subcommand(1);

  SweepFlags aligned_flags, chain_flags, lipkin_flags;
  auto* aligned = app.add_subcommand("aligned", "theta sweep of the aligned two-spin mixture");
  add_sweep_flags(aligned, aligned_flags, false);
  auto* chain = app.add_subcommand("chain", "field sweep of the cyclic XY chain (pairs at separation L)");
  add_sweep_flags(chain, chain_flags, true);
  add_separation_flag(chain, chain_flags);
  auto* lipkin = app.add_subcommand("lipkin", "field sweep of the fully connected XY array");
  add_sweep_flags(lipkin, lipkin_flags, true);

  auto* factorize = app.add_subcommand("factorize", "uniform factorizing field and its residuals");
  std::string fz_config;
  std::optional<std::string> fz_geometry, fz_out, fz_format;
  std::optional<int> fz_n;
  std::optional<double> fz_s, fz_jx, fz_jy, fz_jz, fz_chi;
  factorize->add_option("--config", fz_config, "JSON config file");
  factorize->add_option("--geometry", fz_geometry, "cyclic_nn, open_nn or fully_connected");
  factorize->add_option("--n", fz_n, "number of spins");
  factorize->add_option("--s", fz_s, "spin magnitude");
  factorize->add_option("--Jx", fz_jx, "coupling J_x");
  factorize->add_option("--Jy", fz_jy, "coupling J_y");
  factorize->add_option("--Jz", fz_jz, "coupling J_z");
  factorize->add_option("--chi", fz_chi, "anisotropy (J_y - J_z)/(J_x - J_z), sets J_y");
  factorize->add_option("--out", fz_out, "output path, - for stdout");
  factorize->add_option("--format", fz_format, "csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (aligned->parsed()) return run_sweep_command(aligned_flags, qd::Model::Aligned);
    if (chain->parsed()) return run_sweep_command(chain_flags, qd::Model::CyclicNN);
    if (lipkin->parsed()) return run_sweep_command(lipkin_flags, qd::Model::FullyConnected);

    qd::FactorizeConfig cfg = fz_config.empty() ? qd::FactorizeConfig{} : qd::load_factorize_config(fz_config);
    if (fz_geometry) cfg.geometry = qd::parse_geometry(*fz_geometry);
    if (fz_n) cfg.n = *fz_n;
    if (fz_s) cfg.s = *fz_s;
    if (fz_jx) cfg.jx = *fz_jx;
    if (fz_jz) cfg.jz = *fz_jz;
    if (fz_jy && fz_chi) throw qd::ConfigError("give either --Jy or --chi, not both");
    if (fz_jy) cfg.jy = *fz_jy;
    if (fz_chi) cfg.jy = cfg.jz + *fz_chi * (cfg.jx - cfg.jz);
    if (fz_out) cfg.output = *fz_out;
    if (fz_out || fz_format) cfg.format = qd::parse_format(fz_format, cfg.output);
    const qd::FactorizeReport rep = qd::run_factorize(cfg);
    emit(cfg.output, [&](std::ostream& os) { qd::write_factorize(os, rep, cfg.format); });
    return kOk;
  } catch (const qd::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const qd::ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kConsistency;
  } catch (const qd::InvalidState& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kConsistency;
  } catch (const qd::Error& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kConsistency;
  }
}
