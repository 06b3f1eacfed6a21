#pragma once

namespace netdiv {

inline constexpr const char* kToolName = "netdiv";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace netdiv
