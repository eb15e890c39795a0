#include "erdoslab/log2_bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "erdoslab/util.hpp"

namespace erdoslab {

Log2Bounds scaled_log2(uint64_t m, double slack_rel) {
    if (m < 1)
        throw std::domain_error("scaled_log2: m must be >= 1");
    if (!(slack_rel > 0.0) || !(slack_rel < 1.0))
        throw std::domain_error("scaled_log2: slack must be in (0,1)");

    // Powers of two are exact in this representation; no slack needed.
    if ((m & (m - 1)) == 0)
        return {static_cast<int64_t>(floor_log2(m)) * kLog2UnitScale,
                static_cast<int64_t>(floor_log2(m)) * kLog2UnitScale};

    const double scaled = std::log2(static_cast<double>(m)) *
                          static_cast<double>(kLog2UnitScale);
    // Outward slack: proportional to the magnitude, plus one unit so the
    // bracket is never empty after the casts below.
    const auto pad = static_cast<int64_t>(std::ceil(std::abs(scaled) * slack_rel)) + 1;
    const auto lo = static_cast<int64_t>(std::floor(scaled)) - pad;
    const auto hi = static_cast<int64_t>(std::ceil(scaled)) + pad;
    return {lo, hi};
}

}  // namespace erdoslab
