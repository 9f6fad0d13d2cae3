#include "fluosq/output.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "fluosq/run.hpp"
#include "fluosq/version.hpp"

namespace fluosq {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_name(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string format_name(OutputFormat f) {
  return f == OutputFormat::Csv ? "csv" : "json";
}

// Canonical key=value listing of everything that identifies a curve; feeds
// both the file metadata and the hash of unnamed runs.
std::vector<std::pair<std::string, std::string>> meta_fields(const Curve& c) {
  const SpectrumResult& s = c.spectrum;
  const SystemParams& p = s.params;
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("tool", kToolName);
  kv.emplace_back("version", kVersion);
  kv.emplace_back("curve", c.label);
  kv.emplace_back("method", to_string(s.method));
  kv.emplace_back("transition", to_string(s.transition));
  kv.emplace_back("theta", fmt17(s.theta));
  kv.emplace_back("phi", fmt17(s.phi));
  kv.emplace_back("gamma", fmt17(p.gamma));
  kv.emplace_back("gamma1", fmt17(p.gamma1()));
  kv.emplace_back("gamma2", fmt17(p.gamma2()));
  kv.emplace_back("gamma_sigma", fmt17(p.gamma_sigma()));
  kv.emplace_back("gamma12_policy", to_string(p.gamma12_policy));
  kv.emplace_back("gamma12", fmt17(p.gamma12()));
  kv.emplace_back("omega_a", fmt17(p.omega_a));
  kv.emplace_back("omega_b", fmt17(p.omega_b));
  kv.emplace_back("delta", fmt17(p.delta));
  if (!s.omega.empty()) {
    kv.emplace_back("grid_min", fmt17(s.omega.front()));
    kv.emplace_back("grid_max", fmt17(s.omega.back()));
    kv.emplace_back("grid_points", std::to_string(s.omega.size()));
  }
  return kv;
}

}  // namespace

std::string curve_filename(const Curve& c, OutputFormat format) {
  std::string name = c.label;
  if (name.empty()) {
    std::string canon;
    for (const auto& [k, v] : meta_fields(c)) canon += k + "=" + v + "\n";
    name = fnv1a_hex(canon);
  }
  name += "__" + to_string(c.spectrum.transition);
  name += "__theta" + fmt_name(c.spectrum.theta);
  name += "__phi" + fmt_name(c.spectrum.phi);
  name += c.vic_on ? "__vicon" : "__vicoff";
  name += "__" + to_string(c.spectrum.method);
  name += "." + format_name(format);
  return name;
}

std::string csv_payload(const Curve& c) {
  std::string out;
  for (const auto& [k, v] : meta_fields(c)) out += "# " + k + "=" + v + "\n";
  out += "omega,S\n";
  for (std::size_t i = 0; i < c.spectrum.omega.size(); ++i)
    out += fmt17(c.spectrum.omega[i]) + "," + fmt17(c.spectrum.values[i]) + "\n";
  return out;
}

std::string json_payload(const Curve& c) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json meta;
  for (const auto& [k, v] : meta_fields(c)) meta[k] = v;
  j["meta"] = meta;
  auto& omega = j["omega"] = nlohmann::ordered_json::array();
  auto& values = j["S"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < c.spectrum.omega.size(); ++i) {
    omega.push_back(fmt17(c.spectrum.omega[i]));
    values.push_back(fmt17(c.spectrum.values[i]));
  }
  return j.dump(2) + "\n";
}

std::filesystem::path write_curve(const Curve& c, const std::filesystem::path& dir,
                                  OutputFormat format) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = dir / curve_filename(c, format);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + path.string());
  f << (format == OutputFormat::Csv ? csv_payload(c) : json_payload(c));
  return path;
}

std::filesystem::path write_plot_script(
    const std::filesystem::path& dir, const std::string& stem,
    const std::vector<std::filesystem::path>& data_files) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = dir / (stem + ".gp");
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + path.string());
  f << "set datafile separator ','\n"
    << "set xlabel 'omega / gamma'\n"
    << "set ylabel 'S(omega)'\n"
    << "set grid\n"
    << "plot \\\n";
  for (std::size_t i = 0; i < data_files.size(); ++i) {
    f << "  '" << data_files[i].filename().string()
      << "' using 1:2 with lines title '" << data_files[i].stem().string() << "'";
    f << (i + 1 < data_files.size() ? ", \\\n" : "\n");
  }
  return path;
}

}  // namespace fluosq
