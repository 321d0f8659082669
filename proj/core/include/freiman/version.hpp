#pragma once

namespace freiman {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kFormatVersion = 1;  // JSON report schema version

}  // namespace freiman
