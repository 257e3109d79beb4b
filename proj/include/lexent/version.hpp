#pragma once

#include <string_view>

namespace lexent {

inline constexpr std::string_view kProjectName = "lexent";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace lexent
