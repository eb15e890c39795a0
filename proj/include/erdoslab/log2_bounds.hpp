#pragma once

#include <cstdint>

namespace erdoslab {

// Fixed-point scale for logarithms: one unit of log2 equals this many
// integer units. All certified comparisons happen on int64/int128 values
// at this scale, never on raw doubles.
inline constexpr int64_t kLog2UnitScale = 1'000'000'000'000LL;

// Default relative slack assumed to cover the double-precision log error.
// std::log2 on a uint64 is correctly within a few ulps (~1e-16 relative);
// 1e-9 leaves seven orders of magnitude of headroom.
inline constexpr double kDefaultLogSlackRel = 1e-9;

// Scaled log2(m) bracketed from both sides: lower <= kLog2UnitScale*log2(m)
// <= upper is guaranteed as long as the double log is within slack_rel of
// the truth. Exact powers of two produce lower == upper with zero slack.
struct Log2Bounds {
    int64_t lower;
    int64_t upper;
};

// Requires m >= 1 and 0 < slack_rel < 1.
Log2Bounds scaled_log2(uint64_t m, double slack_rel = kDefaultLogSlackRel);

}  // namespace erdoslab
