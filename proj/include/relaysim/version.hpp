#pragma once

namespace relaysim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace relaysim
