#pragma once

namespace matchkit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace matchkit
