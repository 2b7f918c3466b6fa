#pragma once

// Parameter sweeps producing tabular records for the aligned mixture, the
// cyclic XY chain and the fully connected array, plus the factorization report.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qdiscord/chain_spec.hpp"
#include "qdiscord/qstate.hpp"

namespace qd {

enum class Model { Aligned, CyclicNN, FullyConnected };

std::string to_string(Model m);

struct MeasureSpec {
  enum class Kind { D, I1, I2, I3, Iq, C };
  Kind kind = Kind::D;
  double q = 0.0;  // Iq only

  std::string label() const;
};

enum class OutputFormat { Csv, Json };
enum class SolverChoice { Auto, Dense };

struct SweepConfig {
  Model model = Model::Aligned;
  int n = 50;
  double chi = 0.5;  // J_y / J_x
  double jx = 1.0;
  double epsilon = 0.0;  // aligned model only
  // theta range for the aligned model, B / J_x otherwise
  double grid_min = 0.0;
  double grid_max = 1.0;
  int grid_points = 101;
  bool all_separations = false;
  std::vector<int> separations{1};
  std::vector<MeasureSpec> measures;
  std::string output = "-";
  OutputFormat format = OutputFormat::Csv;
  SolverChoice solver = SolverChoice::Auto;
  int threads = 0;  // 0: QDISCORD_THREADS or hardware concurrency

  /// Throws ConfigError on an invalid grid, separation or measure list.
  void validate() const;
  std::vector<double> grid() const;
  std::vector<int> separation_list() const;
};

struct OutputRecord {
  std::string model;
  int n = 0;
  double chi = 0.0;
  double x = 0.0;  // theta (aligned) or B / J_x
  std::optional<int> separation;
  std::optional<int> parity;
  std::optional<double> e_minus, e_plus;
  std::optional<double> d, i1, i2, i3, iq, c;
  std::optional<Vec3> direction;  // of the first direction-bearing measure
  std::optional<double> d_ref, i2_ref, i3_ref, closed_diff;
  std::vector<std::string> flags;
};

/// Called after each finished grid point with (done, total).
using ProgressFn = std::function<void(int, int)>;

std::vector<OutputRecord> run_aligned_sweep(const SweepConfig& cfg, const ProgressFn& progress = {});
std::vector<OutputRecord> run_chain_sweep(const SweepConfig& cfg, const ProgressFn& progress = {});
std::vector<OutputRecord> run_lipkin_sweep(const SweepConfig& cfg, const ProgressFn& progress = {});
std::vector<OutputRecord> run_sweep(const SweepConfig& cfg, const ProgressFn& progress = {});

struct FactorizeConfig {
  Geometry geometry = Geometry::CyclicNN;
  int n = 8;
  double s = 0.5;
  double jx = 1.0, jy = 0.5, jz = 0.0;
  std::string output = "-";
  OutputFormat format = OutputFormat::Csv;
};

struct FactorizeReport {
  FactorizeConfig config;
  double chi = 0.0;
  bool axes_swapped = false;
  double theta = 0.0;
  double b_s = 0.0;
  Eigen::VectorXd fields;
  Eigen::VectorXd site_residuals;
  double max_pair_residual = 0.0;
  double max_site_residual = 0.0;
  std::optional<double> eigen_residual;  // ||(H - E)|Theta>|| when the dense size allows
};

FactorizeReport run_factorize(const FactorizeConfig& cfg);

/// Thread count: explicit value, else QDISCORD_THREADS, else hardware.
int resolve_threads(int requested);

}  // namespace qd
