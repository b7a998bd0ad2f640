#include "krrf/guide.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "krrf/errors.hpp"

namespace krrf {

std::vector<Point2> guide_waypoints(const Trajectory& traj, double spacing, bool reversed) {
    std::vector<Point2> polyline;
    for (const Segment& seg : traj.segments) {
        for (const Config& c : seg.samples) {
            const Point2 p = c.position();
            if (polyline.empty() || !(polyline.back() == p)) polyline.push_back(p);
        }
    }
    if (reversed) std::reverse(polyline.begin(), polyline.end());
    if (polyline.size() <= 1) return polyline;

    std::vector<Point2> waypoints;
    waypoints.push_back(polyline.front());
    double since_last = 0.0;
    for (std::size_t i = 1; i < polyline.size(); ++i) {
        since_last += distance(polyline[i - 1], polyline[i]);
        if (since_last >= spacing) {
            waypoints.push_back(polyline[i]);
            since_last = 0.0;
        }
    }
    if (!(waypoints.back() == polyline.back())) waypoints.push_back(polyline.back());
    return waypoints;
}

std::optional<Trajectory> guided_segment(const World& world, const Model& model,
                                         const Config& q_start,
                                         std::span<const Point2> waypoints, Point2 target,
                                         const PlannerParams& planner, const GuideParams& guide,
                                         Rng& rng, const Deadline& deadline,
                                         int* iterations_used) {
    Tree tree(-1, q_start);
    std::size_t active = 0;

    for (int iter = 0; iter < guide.max_iterations; ++iter) {
        if (deadline.expired()) {
            if (iterations_used) *iterations_used = iter;
            return std::nullopt;
        }
        Config q_rand;
        if (!waypoints.empty() && rng.uniform01() < guide.guide_bias)
            q_rand = sample_disc_config(waypoints[active], planner.target_radius, rng);
        else
            q_rand = sample_uniform_config(world.bounds(), rng);

        const uint32_t near = tree.index().nearest(q_rand.position()).node_id;
        const auto grown = monte_carlo_expand(tree, world, model, near, q_rand,
                                              planner.mc_trials, planner.rollout_tmax, rng);
        if (!grown) continue;

        const Config& q_new = tree.node(*grown).config;
        if (rho(q_new, target) <= planner.target_radius) {
            if (iterations_used) *iterations_used = iter + 1;
            return tree.trajectory_to(*grown);
        }
        if (!waypoints.empty() && active + 1 < waypoints.size() &&
            rho(q_new, waypoints[active]) <= planner.target_radius)
            ++active;
    }
    if (iterations_used) *iterations_used = guide.max_iterations;
    return std::nullopt;
}

MultiGoalTrajectory reconstruct(const World& world, const Model& model,
                                std::span<const Point2> targets, std::span<const int> order,
                                const PairTrajectories& guides, const PlannerParams& planner,
                                const GuideParams& guide, Rng& rng, const Deadline& deadline) {
    const int n = static_cast<int>(order.size());
    const int budget = guide.retry_budget > 0 ? guide.retry_budget : 5 * n;
    const double spacing = 0.5 * planner.target_radius;

    MultiGoalTrajectory result;
    Config cursor = ForestPlanner::root_config_at(targets[order[0]], world,
                                                  planner.root_heading, rng);
    int leg = 0;
    int failures = 0;
    while (leg < n && failures < budget) {
        const int from = order[leg];
        const int to = order[(leg + 1) % n];
        const auto& guide_traj = guides.at(from, to);
        if (!guide_traj)
            throw MissingPair("no guide trajectory for tour edge (" + std::to_string(from) +
                              ", " + std::to_string(to) + ")");
        // Stored trajectories run from the lower target index; walk them
        // backwards when the tour traverses the pair the other way.
        const bool reversed = from > to;
        const auto waypoints = guide_waypoints(*guide_traj, spacing, reversed);

        int iterations = 0;
        auto segment = guided_segment(world, model, cursor, waypoints, targets[to], planner,
                                      guide, rng, deadline, &iterations);
        if (segment) {
            cursor = segment->end();
            result.legs.push_back(std::move(*segment));
            result.info.push_back({to, iterations});
            ++leg;
            failures = 0;
        } else {
            ++failures;
            if (deadline.expired())
                throw ReconstructFailure("reconstruction wall clock exceeded after " +
                                             std::to_string(leg) + " leg(s)",
                                         leg);
        }
    }
    if (leg < n)
        throw ReconstructFailure("retry budget exhausted after " + std::to_string(leg) +
                                     " completed leg(s)",
                                 leg);
    return result;
}

namespace {

void check_leg_chain(const Trajectory& t, int leg, ValidationReport& report) {
    for (std::size_t s = 0; s < t.segments.size(); ++s) {
        const Segment& seg = t.segments[s];
        if (seg.samples.empty() || !(seg.samples.front() == seg.start)) {
            report.violations.push_back({ViolationKind::JunctionDiscontinuity, leg,
                                         "segment " + std::to_string(s) +
                                             " samples do not begin at its start state"});
            continue;
        }
        if (s > 0 && !(t.segments[s - 1].samples.back() == seg.start))
            report.violations.push_back({ViolationKind::JunctionDiscontinuity, leg,
                                         "segment " + std::to_string(s) +
                                             " does not continue the previous segment"});
    }
}

} // namespace

ValidationReport validate(const MultiGoalTrajectory& mgt, const World& world, const Model& model,
                          std::span<const Point2> targets, std::span<const int> order,
                          double target_radius) {
    ValidationReport report;
    const int n = static_cast<int>(order.size());
    if (static_cast<int>(mgt.legs.size()) != n) {
        report.violations.push_back({ViolationKind::LegCount, -1,
                                     "expected " + std::to_string(n) + " legs, got " +
                                         std::to_string(mgt.legs.size())});
        return report;
    }

    for (int leg = 0; leg < n; ++leg) {
        const Trajectory& t = mgt.legs[leg];
        if (t.empty()) {
            report.violations.push_back({ViolationKind::LegCount, leg, "leg has no segments"});
            continue;
        }
        check_leg_chain(t, leg, report);

        // exact junction with the previous leg
        if (leg > 0 && !(mgt.legs[leg - 1].end() == t.start()))
            report.violations.push_back({ViolationKind::JunctionDiscontinuity, leg,
                                         "leg does not start at the previous leg's end state"});

        // ordered target hits
        const int from = order[leg];
        const int to = order[(leg + 1) % n];
        if (rho(t.start(), targets[from]) > target_radius)
            report.violations.push_back({ViolationKind::TargetMiss, leg,
                                         "leg starts outside the region of target " +
                                             std::to_string(from)});
        if (rho(t.end(), targets[to]) > target_radius)
            report.violations.push_back({ViolationKind::TargetMiss, leg,
                                         "leg ends outside the region of target " +
                                             std::to_string(to)});

        // collision-freedom of every stored sample
        for (const Segment& seg : t.segments) {
            if (world.segment_collides(seg.samples)) {
                report.violations.push_back(
                    {ViolationKind::Collision, leg, "sampled state in collision"});
                break;
            }
        }

        // replay the stored controls and compare endpoints
        Config replay = t.start();
        bool replay_ok = true;
        std::vector<Config> buf;
        for (const Segment& seg : t.segments) {
            try {
                model.integrate_into(buf, replay, seg.control, seg.duration);
            } catch (const Error&) {
                replay_ok = false;
                break;
            }
            replay = buf.back();
        }
        if (!replay_ok || rho(replay, t.end()) > 1e-6)
            report.violations.push_back(
                {ViolationKind::ReplayDrift, leg,
                 "re-integrated endpoint drifts from the stored endpoint"});
    }
    return report;
}

} // namespace krrf
