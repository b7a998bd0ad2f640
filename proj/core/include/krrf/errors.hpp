#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace krrf {

/// Base class of all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed map, scenario, or trajectory file.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A bike-model update denominator vanished even after velocity clamping.
class DegenerateDynamics : public Error {
public:
    using Error::Error;
};

/// Spatial index already holds the given node id.
class DuplicateId : public Error {
public:
    using Error::Error;
};

/// Nearest-neighbor query on an empty index.
class EmptyIndex : public Error {
public:
    using Error::Error;
};

/// Exact TSP solver refused an instance above its size limit.
class TooLarge : public Error {
public:
    using Error::Error;
};

/// Distance matrix construction found a target pair without a trajectory.
class MissingPair : public Error {
public:
    using Error::Error;
};

/// Forest construction ran out of rounds (or wall clock) with pairs unsolved.
class ForestTimeout : public Error {
public:
    ForestTimeout(const std::string& what, std::vector<std::pair<int, int>> unsolved)
        : Error(what), unsolved_pairs(std::move(unsolved)) {}

    std::vector<std::pair<int, int>> unsolved_pairs;
};

/// Trajectory reconstruction exhausted its retry budget.
class ReconstructFailure : public Error {
public:
    ReconstructFailure(const std::string& what, int completed)
        : Error(what), segments_completed(completed) {}

    int segments_completed = 0;
};

/// LazyTSP baseline could not produce a trajectory.
class BaselineFailure : public Error {
public:
    using Error::Error;
};

} // namespace krrf
