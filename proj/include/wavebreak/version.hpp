#pragma once

namespace wavebreak {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wavebreak
