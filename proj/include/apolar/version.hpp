#pragma once

namespace apolar {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace apolar
