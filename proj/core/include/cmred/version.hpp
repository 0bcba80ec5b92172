#pragma once

namespace cmred {

inline constexpr const char* k_tool_name = "cmred";
inline constexpr const char* k_tool_version = "0.1.0";

}  // namespace cmred
