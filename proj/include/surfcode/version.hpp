#pragma once

namespace surfcode {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace surfcode
