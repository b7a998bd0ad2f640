#pragma once

#include <span>
#include <vector>

#include "krrf/forest.hpp"
#include "krrf/rng.hpp"

namespace krrf {

/// Symmetric cost matrix over targets, zero diagonal.
struct DistanceMatrix {
    int n = 0;
    std::vector<double> d; // row-major n*n

    DistanceMatrix() = default;
    explicit DistanceMatrix(int size) : n(size), d(static_cast<std::size_t>(size) * size, 0.0) {}

    double& at(int i, int j) { return d[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
};

/// Matrix of trajectory lengths. Throws MissingPair if any off-diagonal
/// trajectory is absent; asserts symmetry of the stored lengths.
DistanceMatrix matrix_from_forest(const PairTrajectories& trajectories);

/// Closed visiting order (0-based target indices) with its tour cost.
struct Tour {
    std::vector<int> order;
    double cost = 0.0;
};

/// Cost of the closed tour following `order`, including the return edge.
double tour_cost(const DistanceMatrix& d, std::span<const int> order);

/// Rotates the order to start at 0 and flips direction so order[1] < order.back().
void canonicalize_order(std::vector<int>& order);

/// Exact Held-Karp solution; canonical representative. Throws TooLarge for
/// n > 15 (state table would not fit a sensible memory budget).
Tour solve_exact(const DistanceMatrix& d);

/// Best-of-nearest-neighbor construction followed by 2-opt and Or-opt local
/// search with a few double-bridge restarts. Deterministic given the seed.
Tour solve_heuristic(const DistanceMatrix& d, Rng& rng);

/// Runs the 2-opt/Or-opt improvement loop in place; returns the final cost.
/// A locally optimal order is a fixed point.
double local_search(const DistanceMatrix& d, std::vector<int>& order);

} // namespace krrf
