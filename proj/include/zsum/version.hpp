#pragma once

#include <string_view>

namespace zsum {

inline constexpr std::string_view version = "0.3.0";
inline constexpr int schema_version = 1;

}  // namespace zsum
