#pragma once

#include <numbers>

namespace cavkit::constants {

// Exact by SI definition.
inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s

inline constexpr double kPi = std::numbers::pi;

}  // namespace cavkit::constants
