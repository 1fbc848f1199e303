#pragma once

namespace drcskit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace drcskit
