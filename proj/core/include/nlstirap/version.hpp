#pragma once

namespace nlstirap {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace nlstirap
