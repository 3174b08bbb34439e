#pragma once

#include <cstdint>

namespace sim {

// Simulated time in whole microseconds. 802.11 timing constants (slot, SIFS,
// DIFS) are integral multiples of 1 us, so the clock never accumulates
// rounding error.
using SimTime = std::uint64_t;

constexpr SimTime kUsPerMs = 1000;
constexpr SimTime kUsPerSec = 1'000'000;

constexpr SimTime from_ms(std::uint64_t ms) { return ms * kUsPerMs; }
constexpr SimTime from_sec(std::uint64_t s) { return s * kUsPerSec; }

inline double to_seconds(SimTime t) { return static_cast<double>(t) / 1e6; }

}  // namespace sim
