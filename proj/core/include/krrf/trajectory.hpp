#pragma once

#include <span>
#include <vector>

#include "krrf/state.hpp"

namespace krrf {

/// Sum of Euclidean distances between consecutive positions; 0 for a single state.
double trajectory_length(std::span<const Config> states);

/// One constant-control piece of a trajectory. `samples` holds the integrator
/// output from `start` (inclusive) to the segment end state (inclusive).
struct Segment {
    Config start;
    Control control;
    double duration = 0.0;
    std::vector<Config> samples;

    const Config& end() const { return samples.back(); }
    double length() const { return trajectory_length(samples); }
};

/// Chain of segments where each segment starts exactly where the previous one
/// ended. Cost is the position-space polyline length.
struct Trajectory {
    std::vector<Segment> segments;
    double total_length = 0.0;

    const Config& start() const { return segments.front().start; }
    const Config& end() const { return segments.back().samples.back(); }
    bool empty() const { return segments.empty(); }
};

/// Per-leg bookkeeping for a multi-goal trajectory.
struct LegInfo {
    int target_index = -1;   // target this leg arrives at
    int iterations_used = 0; // guided-sampling iterations spent
};

/// Final trajectory through all targets: one leg per tour edge, including the
/// closing leg back to the first target. Consecutive legs join exactly.
struct MultiGoalTrajectory {
    std::vector<Trajectory> legs;
    std::vector<LegInfo> info;

    double total_cost() const {
        double c = 0.0;
        for (const Trajectory& t : legs) c += t.total_length;
        return c;
    }
};

} // namespace krrf
