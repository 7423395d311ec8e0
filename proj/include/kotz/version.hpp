#pragma once

namespace kotz {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace kotz
