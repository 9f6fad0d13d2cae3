// Command-line front end: figure presets, single runs, and parameter sweeps
// over the squeezing-spectrum engine.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "fluosq/output.hpp"
#include "fluosq/run.hpp"
#include "fluosq/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

fluosq::Gamma12Policy parse_gamma12(const std::string& s, double& value) {
  if (s == "auto") return fluosq::Gamma12Policy::Auto;
  if (s == "off") return fluosq::Gamma12Policy::Off;
  std::size_t pos = 0;
  value = std::stod(s, &pos);
  if (pos != s.size())
    throw CLI::ValidationError("--gamma12", "expected auto, off, or a number");
  return fluosq::Gamma12Policy::Explicit;
}

// range syntax: name=lo:hi:n
fluosq::SweepRange parse_sweep(const std::string& s) {
  fluosq::SweepRange r;
  const auto eq = s.find('=');
  const auto c1 = s.find(':', eq == std::string::npos ? 0 : eq);
  const auto c2 = c1 == std::string::npos ? std::string::npos : s.find(':', c1 + 1);
  if (eq == std::string::npos || c1 == std::string::npos || c2 == std::string::npos)
    throw CLI::ValidationError("--sweep", "expected <param>=<lo>:<hi>:<n>");
  r.name = s.substr(0, eq);
  r.lo = std::stod(s.substr(eq + 1, c1 - eq - 1));
  r.hi = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
  r.n = std::stoi(s.substr(c2 + 1));
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(fluosq::kToolName) +
               " - squeezing spectra of two-field resonance fluorescence"};
  app.set_version_flag("--version", std::string(fluosq::kVersion));

  fluosq::RunConfig cfg;
  std::string gamma12_arg = "auto";
  std::string transition_arg = "pi";
  std::string format_arg = "csv";
  std::vector<std::string> method_args = {"exact"};
  std::vector<std::string> sweep_args;
  std::string preset;
  std::string out_dir = ".";

  app.add_option("--gamma", cfg.params.gamma, "total decay rate (global scale)")
      ->capture_default_str();
  app.add_option("--omega-a", cfg.params.omega_a, "linear drive Rabi frequency")
      ->capture_default_str();
  app.add_option("--omega-b", cfg.params.omega_b, "circular drive Rabi frequency")
      ->capture_default_str();
  app.add_option("--delta", cfg.params.delta, "drive detuning")->capture_default_str();
  app.add_option("--theta", cfg.params.theta, "quadrature phase")->capture_default_str();
  app.add_option("--phi", cfg.params.phi, "relative drive phase")->capture_default_str();
  app.add_option("--gamma12", gamma12_arg, "cross-damping: auto | off | <value>")
      ->capture_default_str();
  app.add_option("--transition", transition_arg, "pi | sigma")
      ->check(CLI::IsMember({"pi", "sigma"}))
      ->capture_default_str();
  app.add_option("--omega-min", cfg.grid.omega_min, "grid lower edge")
      ->capture_default_str();
  app.add_option("--omega-max", cfg.grid.omega_max, "grid upper edge")
      ->capture_default_str();
  app.add_option("--points", cfg.grid.n_points, "grid size")->capture_default_str();
  app.add_option("--method", method_args, "exact | oracle | dressed (repeatable)")
      ->check(CLI::IsMember({"exact", "oracle", "dressed"}));
  app.add_option("--preset", preset, "figure preset (fig2a..fig6)");
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--format", format_arg, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_flag("--emit-plot-script", cfg.emit_plot_script,
               "also write a gnuplot script next to the data");
  app.add_option("--sweep", sweep_args,
                 "sweep axis <param>=<lo>:<hi>:<n>; params: omega-a omega-b "
                 "delta theta phi gamma12 (repeatable)");
  app.add_option("--sweep-cap", cfg.sweep_cap, "maximum sweep tuple count")
      ->capture_default_str();
  app.add_flag("--sweep-curves", cfg.sweep_curves,
               "write one curve file per sweep tuple");

  try {
    app.parse(argc, argv);

    cfg.params.gamma12_policy = parse_gamma12(gamma12_arg, cfg.params.gamma12_value);
    cfg.transition = transition_arg == "pi" ? fluosq::Transition::Pi
                                            : fluosq::Transition::Sigma;
    cfg.format = format_arg == "csv" ? fluosq::OutputFormat::Csv
                                     : fluosq::OutputFormat::Json;
    cfg.out_dir = out_dir;
    cfg.methods.clear();
    for (const std::string& m : method_args) {
      if (m == "exact") cfg.methods.push_back(fluosq::Method::ExactResolvent);
      else if (m == "oracle") cfg.methods.push_back(fluosq::Method::TimeDomainOracle);
      else cfg.methods.push_back(fluosq::Method::DressedApprox);
    }
    for (const std::string& s : sweep_args) cfg.sweeps.push_back(parse_sweep(s));

    std::vector<std::filesystem::path> written;
    if (!preset.empty()) {
      written = fluosq::run_preset(preset, cfg);
    } else if (!cfg.sweeps.empty()) {
      written = fluosq::run_sweep(cfg);
    } else {
      written = fluosq::run_single(cfg);
    }
    for (const auto& p : written) std::cout << p.string() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitUsage;
  } catch (const fluosq::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
