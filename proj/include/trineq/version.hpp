#pragma once

namespace trineq {

inline constexpr const char* kVersion = "0.1.0";

} // namespace trineq
