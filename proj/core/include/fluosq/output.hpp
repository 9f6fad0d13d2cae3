#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace fluosq {

struct Curve;
enum class OutputFormat;

// Round-trip-safe decimal formatting (17 significant digits), used for every
// number that lands in an output file.
std::string fmt17(double v);

// Compact formatting for file-name components.
std::string fmt_name(double v);

// 64-bit FNV-1a, hex-encoded; names non-preset outputs.
std::string fnv1a_hex(const std::string& s);

std::string csv_payload(const Curve& c);
std::string json_payload(const Curve& c);

// Writes the payload for `c` under `dir`; returns the path.
std::filesystem::path write_curve(const Curve& c, const std::filesystem::path& dir,
                                  OutputFormat format);

// Gnuplot script plotting the given data files side by side.
std::filesystem::path write_plot_script(const std::filesystem::path& dir,
                                        const std::string& stem,
                                        const std::vector<std::filesystem::path>& data_files);

}  // namespace fluosq
