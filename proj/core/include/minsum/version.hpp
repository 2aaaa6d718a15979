#pragma once

namespace minsum {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace minsum
