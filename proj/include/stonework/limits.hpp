#pragma once

#include <cstddef>

namespace stonework {

/// Default bound on generators (and graph levels) for exhaustive enumeration.
inline constexpr std::size_t kDefaultCap = 20;

/// Values of STONEWORK_CAP above this are clamped; 2^30 assignments is the
/// largest truth table we are willing to materialize.
inline constexpr std::size_t kHardCap = 30;

/// The active cap: STONEWORK_CAP when set to a valid number, else kDefaultCap.
std::size_t default_cap();

/// Throws CapExceeded when `requested > cap`.
void enforce_cap(std::size_t requested, std::size_t cap);

}  // namespace stonework
