#pragma once

namespace fluosq {
inline constexpr const char* kToolName = "fluosq";
inline constexpr const char* kVersion = "0.1.0";
}  // namespace fluosq
