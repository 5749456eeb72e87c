#pragma once

namespace pstar {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pstar
