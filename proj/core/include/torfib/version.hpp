#pragma once

namespace torfib {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace torfib
