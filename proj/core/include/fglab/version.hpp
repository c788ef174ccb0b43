#pragma once

#include <string_view>

namespace fglab {

inline constexpr std::string_view tool_name = "fglab";
inline constexpr std::string_view tool_version = "0.1.0";

}  // namespace fglab
