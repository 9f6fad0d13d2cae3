#include "fluosq/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <thread>

#include "fluosq/dressed.hpp"
#include "fluosq/output.hpp"
#include "fluosq/version.hpp"

namespace fluosq {

void GridSpec::validate() const {
  if (n_points < 2)
    throw std::invalid_argument("grid: need at least 2 points");
  if (!(omega_min < omega_max))
    throw std::invalid_argument("grid: omega_min must be below omega_max");
  if (!std::isfinite(omega_min) || !std::isfinite(omega_max))
    throw std::invalid_argument("grid: bounds must be finite");
}

std::vector<double> GridSpec::make() const {
  validate();
  std::vector<double> w(n_points);
  const double step = (omega_max - omega_min) / (n_points - 1);
  for (int i = 0; i < n_points; ++i) w[i] = omega_min + step * i;
  w.back() = omega_max;
  return w;
}

void RunConfig::validate() const {
  params.validate();
  grid.validate();
  if (methods.empty())
    throw std::invalid_argument("run: no methods selected");
  if (sweep_cap < 1)
    throw std::invalid_argument("run: sweep cap must be positive");
}

namespace {

SpectrumResult evaluate_one(const RunConfig& cfg, Method method) {
  const std::vector<double> grid = cfg.grid.make();
  switch (method) {
    case Method::ExactResolvent:
      return cfg.transition == Transition::Pi
                 ? squeezing_spectrum_pi(cfg.params, grid, cfg.params.theta)
                 : squeezing_spectrum_sigma(cfg.params, grid, cfg.params.theta,
                                            cfg.params.phi);
    case Method::TimeDomainOracle:
      return time_domain_spectrum_oracle(cfg.params, grid, cfg.params.theta,
                                         cfg.params.phi, cfg.transition);
    case Method::DressedApprox: {
      const DressedModel model = dressed_model(cfg.params);
      return cfg.transition == Transition::Pi
                 ? sideband_spectrum_pi(model, grid, cfg.params.theta)
                 : sideband_spectrum_sigma(model, grid, cfg.params.phi);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::vector<Curve> evaluate(const RunConfig& config) {
  config.validate();
  std::vector<Curve> out;
  for (Method m : config.methods) {
    Curve c;
    c.label = config.preset;
    c.spectrum = evaluate_one(config, m);
    c.vic_on = c.spectrum.params.vic_enabled();
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::filesystem::path> run_single(const RunConfig& config) {
  std::vector<std::filesystem::path> paths;
  for (const Curve& c : evaluate(config))
    paths.push_back(write_curve(c, config.out_dir, config.format));
  if (config.emit_plot_script && !paths.empty()) {
    const std::string stem = config.preset.empty() ? "plot" : config.preset;
    paths.push_back(write_plot_script(config.out_dir, stem, paths));
  }
  return paths;
}

std::vector<std::filesystem::path> run_preset(const std::string& name,
                                              const RunConfig& base) {
  std::vector<std::filesystem::path> paths;
  std::vector<std::filesystem::path> data;
  for (const RunConfig& cfg : preset_configs(name, base)) {
    cfg.validate();
    for (const Curve& c : evaluate(cfg)) {
      data.push_back(write_curve(c, cfg.out_dir, cfg.format));
      paths.push_back(data.back());
    }
  }
  if (base.emit_plot_script && !data.empty())
    paths.push_back(write_plot_script(base.out_dir, name, data));
  return paths;
}

namespace {

void apply_axis(SystemParams& p, const std::string& name, double value) {
  if (name == "omega-a") p.omega_a = value;
  else if (name == "omega-b") p.omega_b = value;
  else if (name == "delta") p.delta = value;
  else if (name == "theta") p.theta = value;
  else if (name == "phi") p.phi = value;
  else if (name == "gamma12") { p.gamma12_policy = Gamma12Policy::Explicit; p.gamma12_value = value; }
  else throw std::invalid_argument("sweep: unknown axis '" + name + "'");
}

}  // namespace

std::vector<std::filesystem::path> run_sweep(const RunConfig& config) {
  config.validate();
  if (config.sweeps.empty())
    throw std::invalid_argument("sweep: no ranges given");
  long long total = 1;
  for (const SweepRange& r : config.sweeps) {
    if (r.n < 1 || !(std::isfinite(r.lo) && std::isfinite(r.hi)) || r.hi < r.lo)
      throw std::invalid_argument("sweep: empty or invalid range for '" + r.name + "'");
    total *= r.n;
    if (total > config.sweep_cap)
      throw std::invalid_argument("sweep: tuple count exceeds cap of " +
                                  std::to_string(config.sweep_cap));
  }

  const int n = static_cast<int>(total);
  const std::size_t axes = config.sweeps.size();
  auto tuple_values = [&](int index) {
    std::vector<double> vals(axes);
    int rem = index;
    for (int a = static_cast<int>(axes) - 1; a >= 0; --a) {
      const SweepRange& r = config.sweeps[a];
      const int i = rem % r.n;
      rem /= r.n;
      vals[a] = r.n == 1 ? r.lo : r.lo + (r.hi - r.lo) * i / (r.n - 1);
    }
    return vals;
  };

  std::vector<SweepRecord> records(n);
  std::vector<Curve> curves(n);
  std::vector<std::string> errors(n);
  const std::vector<double> grid = config.grid.make();

  auto work = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      RunConfig cfg = config;
      const std::vector<double> vals = tuple_values(i);
      for (std::size_t a = 0; a < axes; ++a)
        apply_axis(cfg.params, config.sweeps[a].name, vals[a]);
      try {
        Curve c;
        c.spectrum = evaluate_one(cfg, cfg.methods.front());
        c.vic_on = c.spectrum.params.vic_enabled();
        const auto it = std::min_element(c.spectrum.values.begin(),
                                         c.spectrum.values.end());
        records[i].values = vals;
        records[i].min_s = *it;
        records[i].omega_at_min =
            c.spectrum.omega[std::distance(c.spectrum.values.begin(), it)];
        curves[i] = std::move(c);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };

  const int hw = std::max(1u, std::thread::hardware_concurrency());
  const int workers = std::min(hw, n);
  if (workers <= 1) {
    work(0, n);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int lo = w * chunk, hi = std::min(n, lo + chunk);
      if (lo < hi) pool.emplace_back(work, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  for (int i = 0; i < n; ++i)
    if (!errors[i].empty())
      throw NumericalError("sweep entry " + std::to_string(i) + ": " + errors[i]);

  std::filesystem::create_directories(config.out_dir);
  std::vector<std::filesystem::path> paths;
  const std::filesystem::path summary = config.out_dir / "sweep_summary.csv";
  {
    std::ofstream f(summary, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + summary.string());
    f << "# tool=" << kToolName << " version=" << kVersion << "\n";
    f << "# transition=" << to_string(config.transition)
      << " method=" << to_string(config.methods.front()) << "\n";
    f << "# grid_min=" << fmt17(grid.front()) << " grid_max=" << fmt17(grid.back())
      << " grid_points=" << grid.size() << "\n";
    f << "index";
    for (const SweepRange& r : config.sweeps) f << "," << r.name;
    f << ",min_S,omega_at_min\n";
    for (int i = 0; i < n; ++i) {
      f << i;
      for (double v : records[i].values) f << "," << fmt17(v);
      f << "," << fmt17(records[i].min_s) << "," << fmt17(records[i].omega_at_min)
        << "\n";
    }
  }
  paths.push_back(summary);

  if (config.sweep_curves) {
    for (int i = 0; i < n; ++i) {
      Curve& c = curves[i];
      c.label = "sweep" + std::to_string(i);
      paths.push_back(write_curve(c, config.out_dir, config.format));
    }
  }
  return paths;
}

}  // namespace fluosq
