#pragma once

namespace hypercover {

inline constexpr const char* kVersion = "0.1.0";

} // namespace hypercover
