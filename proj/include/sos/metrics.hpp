#pragma once

#include "sos/trace.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace sos {

using CorrectnessVector = std::vector<bool>;

class DegenerateVector : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Pearson correlation of two 0/1 vectors. Throws DegenerateVector when either is
/// constant, and std::invalid_argument on a length mismatch or fewer than 2 entries.
[[nodiscard]] double phi_correlation(const CorrectnessVector& a, const CorrectnessVector& b);

/// |shared unique states| / max(unique states of either). Two stateless traces
/// align at 1.0, one stateless trace at 0.0.
[[nodiscard]] double state_alignment(const Trajectory& a, const Trajectory& b);

/// Same measure over precomputed state key lists.
[[nodiscard]] double state_alignment(std::span<const std::string> a, std::span<const std::string> b);

/// Mean of per-problem alignments; runs are matched by position.
[[nodiscard]] double mean_state_alignment(std::span<const Trajectory> runs_a, std::span<const Trajectory> runs_b);

/// Generated nodes in the trace. The root and the goal line are not counted.
[[nodiscard]] std::size_t states_explored(const Trajectory& trajectory);

}  // namespace sos
