#pragma once

#include <cstddef>
#include <span>

namespace sos {

inline constexpr double kZ95 = 1.96;

struct Interval {
    double estimate = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    /// Set when the spread is undefined (fewer than two samples); the interval
    /// then collapses to the estimate.
    bool degenerate = false;

    [[nodiscard]] double width() const noexcept { return upper - lower; }
};

/// Wilson score interval for a binomial proportion.
[[nodiscard]] Interval wilson_interval(std::size_t successes, std::size_t n, double z = kZ95);

/// mean +- z * sd / sqrt(n) with the sample standard deviation.
[[nodiscard]] Interval mean_interval(std::span<const double> values, double z = kZ95);

}  // namespace sos
