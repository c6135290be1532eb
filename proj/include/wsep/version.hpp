#pragma once

namespace wsep {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wsep
