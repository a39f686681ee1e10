#pragma once

namespace aec {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace aec
