#include "krrf/lazy_tsp.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "krrf/errors.hpp"

namespace krrf {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Goal-biased single-tree RRT between two targets; the planning primitive
/// LazyTSP verifies tour edges with.
std::optional<Trajectory> plan_edge(const World& world, const Model& model, Point2 from,
                                    Point2 to, const PlannerParams& planner,
                                    const LazyParams& lazy, Rng& rng, const Deadline& deadline) {
    Tree tree(-1, ForestPlanner::root_config_at(from, world, planner.root_heading, rng));
    for (int iter = 0; iter < lazy.edge_iteration_cap; ++iter) {
        if (deadline.expired()) return std::nullopt;
        Config q_rand;
        if (rng.uniform01() < lazy.edge_goal_bias)
            q_rand = sample_disc_config(to, planner.target_radius, rng);
        else
            q_rand = sample_uniform_config(world.bounds(), rng);
        const uint32_t near = tree.index().nearest(q_rand.position()).node_id;
        const auto grown = monte_carlo_expand(tree, world, model, near, q_rand,
                                              planner.mc_trials, planner.rollout_tmax, rng);
        if (!grown) continue;
        if (rho(tree.node(*grown).config, to) <= planner.target_radius)
            return tree.trajectory_to(*grown);
    }
    return std::nullopt;
}

Tour solve_current(const DistanceMatrix& d, Rng& rng) {
    return d.n <= 15 ? solve_exact(d) : solve_heuristic(d, rng);
}

} // namespace

MultiGoalTrajectory lazy_plan(const World& world, const Model& model,
                              std::span<const Point2> targets, const PlannerParams& planner,
                              const GuideParams& guide, const LazyParams& lazy, Rng& rng,
                              const Deadline& deadline, LazyPhaseTimes* times, Tour* tour_out) {
    const int n = static_cast<int>(targets.size());
    if (n < 2) throw BaselineFailure("need at least two targets");

    DistanceMatrix d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) d.at(i, j) = distance(targets[i], targets[j]);

    PairTrajectories verified(n);
    LazyPhaseTimes local_times;

    while (true) {
        if (deadline.expired()) throw BaselineFailure("wall clock exceeded");

        const auto t_tsp = Clock::now();
        Tour tour = solve_current(d, rng);
        local_times.tsp += seconds_since(t_tsp);
        if (!std::isfinite(tour.cost))
            throw BaselineFailure("every remaining tour uses an unplannable edge");

        bool all_verified = true;
        for (int k = 0; k < n && all_verified; ++k) {
            const int a = tour.order[k];
            const int b = tour.order[(k + 1) % n];
            if (verified.at(a, b)) continue;
            all_verified = false;

            const int lo = std::min(a, b);
            const int hi = std::max(a, b);
            const auto t_edge = Clock::now();
            auto traj = plan_edge(world, model, targets[lo], targets[hi], planner, lazy, rng,
                                  deadline);
            local_times.edge_planning += seconds_since(t_edge);
            if (traj) {
                const double len = traj->total_length;
                verified.set_pair(lo, hi, std::make_shared<const Trajectory>(std::move(*traj)));
                d.at(lo, hi) = d.at(hi, lo) = len;
                all_verified = true; // keep walking the remaining tour edges
            } else {
                if (deadline.expired()) throw BaselineFailure("wall clock exceeded");
                d.at(lo, hi) = d.at(hi, lo) = std::numeric_limits<double>::infinity();
            }
        }
        if (!all_verified) continue; // an edge failed; re-solve on the updated matrix

        if (tour_out) *tour_out = tour;
        const auto t_rec = Clock::now();
        try {
            MultiGoalTrajectory result = reconstruct(world, model, targets, tour.order, verified,
                                                     planner, guide, rng, deadline);
            local_times.reconstruct += seconds_since(t_rec);
            if (times) *times = local_times;
            return result;
        } catch (const ReconstructFailure& e) {
            local_times.reconstruct += seconds_since(t_rec);
            if (times) *times = local_times;
            throw BaselineFailure(std::string("final reconstruction failed: ") + e.what());
        }
    }
}

} // namespace krrf
