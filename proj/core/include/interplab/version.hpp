#pragma once

namespace interplab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace interplab
