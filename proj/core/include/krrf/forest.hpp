#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "krrf/deadline.hpp"
#include "krrf/heuristic_queue.hpp"
#include "krrf/models.hpp"
#include "krrf/spatial_index.hpp"
#include "krrf/trajectory.hpp"
#include "krrf/world.hpp"

namespace krrf {

struct PlannerParams {
    double target_radius = 50.0;     // a target counts as reached within this radius
    double heuristic_radius = 50.0;  // neighborhood used by cross-tree heuristic lookups
    int mc_trials = 10;              // rollouts per Monte Carlo node expansion
    double rollout_tmax = 1.5;       // rollout durations are drawn from (0, rollout_tmax]
    double heuristic_bias = 0.7;     // probability of the heuristic expansion branch
    long pair_round_cap = 200000;    // total expansion rounds before giving up
    std::optional<double> root_heading; // fixed root heading instead of a sampled one
};

struct TreeNode {
    uint32_t id = 0;
    Config config;
    std::optional<uint32_t> parent;
    Control inbound_control;
    double inbound_duration = 0.0;
    std::vector<Config> inbound_samples; // parent-to-node rollout, both endpoints included
    double cost_to_root = 0.0;
};

/// Forward-simulated search tree rooted at one target.
class Tree {
public:
    Tree(int root_target, const Config& root_config);

    uint32_t add_child(uint32_t parent, const Control& control, double duration,
                       std::vector<Config> samples);

    const TreeNode& node(uint32_t id) const { return nodes_[id]; }
    std::size_t size() const { return nodes_.size(); }
    const SpatialIndex& index() const { return index_; }
    int root_target() const { return root_target_; }

    /// Root-to-node trajectory, replayable from its stored controls.
    Trajectory trajectory_to(uint32_t id) const;

private:
    int root_target_;
    std::vector<TreeNode> nodes_;
    SpatialIndex index_;
};

/// Expands `from` toward `toward` with `trials` constant-control rollouts of
/// random duration in (0, tmax]; attaches the collision-free endpoint closest
/// to `toward`. Returns the new node id, or nullopt if every rollout collided.
std::optional<uint32_t> monte_carlo_expand(Tree& tree, const World& world, const Model& model,
                                           uint32_t from, const Config& toward, int trials,
                                           double tmax, Rng& rng);

/// Branch counters for one planner run, exposed for tests and tuning.
struct ExpandCounters {
    long grow_other = 0;    // partner-tree expansions toward a random sample
    long heuristic = 0;     // heuristic-guided expansions
    long random_full = 0;   // random expansions with the full trial budget (empty queue)
    long random_single = 0; // single-trial random expansions
};

/// Trajectories for every ordered target pair; both directions of a pair
/// share one object.
class PairTrajectories {
public:
    explicit PairTrajectories(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n) {}

    int size() const { return n_; }
    const std::shared_ptr<const Trajectory>& at(int i, int j) const {
        return cells_[static_cast<std::size_t>(i) * n_ + j];
    }
    void set_pair(int i, int j, std::shared_ptr<const Trajectory> t) {
        cells_[static_cast<std::size_t>(i) * n_ + j] = t;
        cells_[static_cast<std::size_t>(j) * n_ + i] = std::move(t);
    }

private:
    int n_;
    std::vector<std::shared_ptr<const Trajectory>> cells_;
};

/// Builds one search tree per target and grows them pairwise until every
/// ordered pair of targets is connected by a trajectory.
class ForestPlanner {
public:
    ForestPlanner(const World& world, const Model& model, std::vector<Point2> targets,
                  const PlannerParams& params, Rng& rng);

    /// Runs expansion rounds on uniformly random unsolved pairs until all are
    /// solved. Throws ForestTimeout when the round cap or deadline is hit.
    PairTrajectories build(const Deadline& deadline = {});

    /// One expansion round for the pair (i, j), i < j; returns the connecting
    /// trajectory once the grown tree reaches the partner target.
    std::optional<Trajectory> expand_pair_once(int i, int j);

    /// Estimated cost for q to reach the root of `other` through its nearest
    /// node: distance to that node plus the node's cost to root.
    double heuristic_value(const Config& q, const Tree& other) const;

    const Tree& tree(int i) const { return trees_[i]; }
    const HeuristicQueue& queue(int i, int j) const { return queues_[queue_slot(i, j)]; }
    const ExpandCounters& counters() const { return counters_; }
    int target_count() const { return static_cast<int>(targets_.size()); }

    /// Root configuration policy shared with the reconstruction phase: a
    /// collision-free heading at the given position (sampled unless fixed).
    static Config root_config_at(Point2 position, const World& world,
                                 std::optional<double> fixed_heading, Rng& rng);

private:
    std::size_t queue_slot(int i, int j) const {
        return static_cast<std::size_t>(i) * targets_.size() + j;
    }

    const World& world_;
    const Model& model_;
    std::vector<Point2> targets_;
    PlannerParams params_;
    Rng& rng_;
    std::vector<Tree> trees_;
    std::vector<HeuristicQueue> queues_; // slot (i, j), i < j
    ExpandCounters counters_;
};

} // namespace krrf
