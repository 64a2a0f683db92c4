#pragma once

namespace lapspec {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lapspec
