#pragma once

namespace revmul {

inline constexpr const char* kEngineVersion = "revmul 0.1.0";

}  // namespace revmul
