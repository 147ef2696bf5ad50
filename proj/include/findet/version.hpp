#pragma once

namespace findet {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace findet
