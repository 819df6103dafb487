#pragma once

namespace csieve {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace csieve
