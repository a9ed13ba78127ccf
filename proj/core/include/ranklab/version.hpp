#pragma once

namespace ranklab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ranklab
