#pragma once

namespace hydrocouple {

inline constexpr double kGravity = 9.81;

/// Depth below which a cell is treated as dry: zero velocity, dry flux branches.
inline constexpr double kDryDepth = 1e-8;

/// Negative depths above this magnitude after an update are round-off and get clamped.
inline constexpr double kNegativeDepthTolerance = 1e-12;

inline constexpr double kDefaultCfl = 0.45;

} // namespace hydrocouple
