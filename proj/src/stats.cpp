#include "sos/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sos {

Interval wilson_interval(std::size_t successes, std::size_t n, double z)
{
    if (n == 0)
        throw std::invalid_argument("wilson_interval: empty sample");
    if (successes > n)
        throw std::invalid_argument("wilson_interval: successes exceed trials");
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double centre = (p + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    return {p, std::max(0.0, centre - half), std::min(1.0, centre + half), false};
}

Interval mean_interval(std::span<const double> values, double z)
{
    if (values.empty())
        throw std::invalid_argument("mean_interval: empty sample");
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values)
        mean += v;
    mean /= n;
    if (values.size() < 2)
        return {mean, mean, mean, true};
    double ss = 0.0;
    for (double v : values)
        ss += (v - mean) * (v - mean);
    const double half = z * std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    return {mean, mean - half, mean + half, false};
}

}  // namespace sos
