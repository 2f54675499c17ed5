#pragma once

namespace tga {
inline constexpr const char* kVersion = "0.1.0";
}
