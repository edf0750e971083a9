#pragma once

#include <string_view>

namespace lcgl2 {

inline constexpr std::string_view kToolName = "lcgl2";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace lcgl2
