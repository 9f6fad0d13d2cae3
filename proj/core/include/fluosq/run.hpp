#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fluosq/params.hpp"
#include "fluosq/spectra.hpp"

namespace fluosq {

enum class OutputFormat { Csv, Json };

struct GridSpec {
  double omega_min = -10.0;
  double omega_max = 10.0;
  int n_points = 1201;

  void validate() const;
  std::vector<double> make() const;
};

struct SweepRange {
  std::string name;  // omega-a | omega-b | delta | theta | phi | gamma12
  double lo = 0.0, hi = 0.0;
  int n = 0;
};

// Fully resolved description of one invocation: parameters, channel, grid,
// methods, output destination, and the optional sweep axes.
struct RunConfig {
  SystemParams params;
  Transition transition = Transition::Pi;
  GridSpec grid;
  std::vector<Method> methods = {Method::ExactResolvent};
  std::string preset;  // empty when assembled from individual flags
  std::filesystem::path out_dir = ".";
  OutputFormat format = OutputFormat::Csv;
  bool emit_plot_script = false;

  std::vector<SweepRange> sweeps;
  int sweep_cap = 10000;
  bool sweep_curves = false;  // also write one curve file per sweep tuple

  void validate() const;
};

// One curve of a run: label feeds the output file name; vic_on feeds the
// vic<on|off> name component.
struct Curve {
  std::string label;
  SpectrumResult spectrum;
  bool vic_on = true;
};

std::string curve_filename(const Curve& c, OutputFormat format);

// Evaluate every method of the config on its grid.  Multiple curves come
// from methods, not parameters (presets expand to several configs instead).
std::vector<Curve> evaluate(const RunConfig& config);

// Preset expansion: each figure preset pins parameters, grid, channel and the
// curve variants (drive off / no cross-damping / second phase).  Throws
// std::invalid_argument for unknown names.
std::vector<RunConfig> preset_configs(const std::string& name,
                                      const RunConfig& base);
std::vector<std::string> preset_names();

// Run a preset and write every curve under config.out_dir.  Returns the paths
// written, in emission order.  Re-runs are byte-identical.
std::vector<std::filesystem::path> run_preset(const std::string& name,
                                              const RunConfig& base);

// Direct single run (no preset): evaluates and writes one file per method.
std::vector<std::filesystem::path> run_single(const RunConfig& config);

struct SweepRecord {
  std::vector<double> values;  // one per sweep axis, in axis order
  double min_s = 0.0;
  double omega_at_min = 0.0;
};

// Cartesian sweep over the configured axes (last axis fastest).  Entries are
// evaluated in parallel; the summary file (and optional per-tuple curves) are
// written serially in declaration order.  Throws std::invalid_argument on an
// empty range or when the tuple count exceeds sweep_cap.
std::vector<std::filesystem::path> run_sweep(const RunConfig& config);

}  // namespace fluosq
