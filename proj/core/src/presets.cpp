#include <numbers>

#include "fluosq/run.hpp"

namespace fluosq {

namespace {

constexpr double kPi = std::numbers::pi;

struct CurveVariant {
  std::string label;        // file-name label; empty = preset name
  double omega_b;           // curve-specific drive strength
  Gamma12Policy gamma12;    // curve-specific cross-damping
  double phi;               // curve-specific relative phase
};

struct PresetDef {
  Transition transition;
  double theta, delta, omega_a, omega_b, phi;
  GridSpec grid;
  std::vector<CurveVariant> curves;
};

// Figure presets.  Each curve variant reproduces one plotted line; labels
// disambiguate variants that would otherwise collide on the same file name.
PresetDef preset_def(const std::string& name) {
  const double th90 = kPi / 2.0;
  if (name == "fig2a")
    return {Transition::Pi, 0.0, 8.0, 0.6, 0.9, 0.0, {-12.0, 12.0, 1201},
            {{"fig2a-ob0.9", 0.9, Gamma12Policy::Auto, 0.0},
             {"fig2a-ob0", 0.0, Gamma12Policy::Auto, 0.0}}};
  if (name == "fig2b")
    return {Transition::Pi, 0.0, 8.0, 5.0, 2.0, 0.0, {-20.0, 20.0, 1601},
            {{"fig2b-ob2", 2.0, Gamma12Policy::Auto, 0.0},
             {"fig2b-ob0", 0.0, Gamma12Policy::Auto, 0.0}}};
  if (name == "fig3a")
    return {Transition::Pi, 0.0, 0.0, 0.2, 0.6, 0.0, {-3.0, 3.0, 601},
            {{"fig3a", 0.6, Gamma12Policy::Auto, 0.0},
             {"fig3a", 0.6, Gamma12Policy::Off, 0.0}}};
  if (name == "fig3b")
    return {Transition::Pi, th90, 0.0, 0.2, 0.6, 0.0, {-3.0, 3.0, 601},
            {{"fig3b", 0.6, Gamma12Policy::Auto, 0.0},
             {"fig3b", 0.6, Gamma12Policy::Off, 0.0}}};
  if (name == "fig4a")
    return {Transition::Pi, 0.0, 15.0, 4.0, 12.0, 0.0, {-40.0, 40.0, 1601},
            {{"fig4a", 12.0, Gamma12Policy::Auto, 0.0},
             {"fig4a", 12.0, Gamma12Policy::Off, 0.0}}};
  if (name == "fig4b")
    return {Transition::Pi, th90, 15.0, 4.0, 12.0, 0.0, {-40.0, 40.0, 1601},
            {{"fig4b", 12.0, Gamma12Policy::Auto, 0.0},
             {"fig4b", 12.0, Gamma12Policy::Off, 0.0}}};
  if (name == "fig5a")
    return {Transition::Sigma, th90, 0.0, 0.02, 0.02, 0.0, {-0.25, 0.25, 1001},
            {{"fig5a-ob0.02", 0.02, Gamma12Policy::Auto, 0.0},
             {"fig5a-ob0", 0.0, Gamma12Policy::Auto, 0.0}}};
  if (name == "fig5b")
    return {Transition::Sigma, th90, 0.0, 1.0, 4.0, 0.0, {-10.0, 10.0, 1001},
            {{"fig5b-ob4", 4.0, Gamma12Policy::Auto, 0.0},
             {"fig5b-ob0", 0.0, Gamma12Policy::Auto, 0.0}}};
  if (name == "fig6")
    return {Transition::Sigma, 0.0, 20.0, 10.0, 15.0, 0.0, {-50.0, 50.0, 2001},
            {{"fig6", 15.0, Gamma12Policy::Auto, 0.0},
             {"fig6", 15.0, Gamma12Policy::Auto, kPi / 2.0}}};
  std::string msg = "unknown preset '" + name + "'; valid presets:";
  for (const auto& p : preset_names()) msg += " " + p;
  throw std::invalid_argument(msg);
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fig2a", "fig2b", "fig3a", "fig3b", "fig4a",
          "fig4b", "fig5a", "fig5b", "fig6"};
}

std::vector<RunConfig> preset_configs(const std::string& name,
                                      const RunConfig& base) {
  const PresetDef def = preset_def(name);
  std::vector<RunConfig> out;
  for (const CurveVariant& v : def.curves) {
    RunConfig cfg = base;
    cfg.preset = v.label.empty() ? name : v.label;
    cfg.transition = def.transition;
    cfg.grid = def.grid;
    cfg.params = SystemParams{};
    cfg.params.gamma = 1.0;
    cfg.params.delta = def.delta;
    cfg.params.omega_a = def.omega_a;
    cfg.params.omega_b = v.omega_b;
    cfg.params.theta = def.theta;
    cfg.params.phi = v.phi;
    cfg.params.gamma12_policy = v.gamma12;
    cfg.sweeps.clear();
    out.push_back(std::move(cfg));
  }
  return out;
}

}  // namespace fluosq
