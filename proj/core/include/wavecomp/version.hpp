#pragma once

namespace wavecomp {
inline constexpr const char* kVersion = "0.1.0";
}
