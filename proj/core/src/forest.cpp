#include "krrf/forest.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "krrf/errors.hpp"

namespace krrf {

Tree::Tree(int root_target, const Config& root_config) : root_target_(root_target) {
    TreeNode root;
    root.id = 0;
    root.config = root_config;
    root.cost_to_root = 0.0;
    nodes_.push_back(std::move(root));
    index_.insert(root_config.position(), 0);
}

uint32_t Tree::add_child(uint32_t parent, const Control& control, double duration,
                         std::vector<Config> samples) {
    TreeNode node;
    node.id = static_cast<uint32_t>(nodes_.size());
    node.config = samples.back();
    node.parent = parent;
    node.inbound_control = control;
    node.inbound_duration = duration;
    node.cost_to_root = nodes_[parent].cost_to_root + trajectory_length(samples);
    node.inbound_samples = std::move(samples);
    index_.insert(node.config.position(), node.id);
    nodes_.push_back(std::move(node));
    return nodes_.back().id;
}

Trajectory Tree::trajectory_to(uint32_t id) const {
    std::vector<uint32_t> chain;
    for (uint32_t cur = id; nodes_[cur].parent; cur = *nodes_[cur].parent) chain.push_back(cur);
    std::reverse(chain.begin(), chain.end());

    Trajectory traj;
    traj.segments.reserve(chain.size());
    for (uint32_t nid : chain) {
        const TreeNode& n = nodes_[nid];
        Segment seg;
        seg.start = nodes_[*n.parent].config;
        seg.control = n.inbound_control;
        seg.duration = n.inbound_duration;
        seg.samples = n.inbound_samples;
        traj.total_length += trajectory_length(seg.samples);
        traj.segments.push_back(std::move(seg));
    }
    return traj;
}

std::optional<uint32_t> monte_carlo_expand(Tree& tree, const World& world, const Model& model,
                                           uint32_t from, const Config& toward, int trials,
                                           double tmax, Rng& rng) {
    const Config origin = tree.node(from).config;
    thread_local std::vector<Config> rollout;

    bool have_best = false;
    double best_dist = std::numeric_limits<double>::infinity();
    Control best_control;
    std::vector<Config> best_samples;

    for (int trial = 0; trial < trials; ++trial) {
        const Control u = model.sample_control(rng);
        const double duration = rng.uniform_pos(tmax);
        try {
            model.integrate_into(rollout, origin, u, duration);
        } catch (const DegenerateDynamics&) {
            continue;
        }
        if (world.segment_collides(rollout)) continue;
        const double d = rho(rollout.back(), toward);
        if (d < best_dist) {
            best_dist = d;
            best_control = u;
            best_samples = rollout;
            have_best = true;
        }
    }
    if (!have_best) return std::nullopt;

    const double realized = model.step_dt() * static_cast<double>(best_samples.size() - 1);
    return tree.add_child(from, best_control, realized, std::move(best_samples));
}

Config ForestPlanner::root_config_at(Point2 position, const World& world,
                                     std::optional<double> fixed_heading, Rng& rng) {
    Config q;
    q.x = position.x;
    q.y = position.y;
    if (fixed_heading) {
        q.theta = normalize_angle(*fixed_heading);
        if (world.config_collides(q))
            throw Error("root configuration collides at the requested heading");
        return q;
    }
    // One heading draw per root; resample a bounded number of times if the
    // footprint happens to clip an obstacle at that orientation.
    for (int attempt = 0; attempt < 64; ++attempt) {
        q.theta = rng.uniform_angle();
        if (!world.config_collides(q)) return q;
    }
    throw Error("no collision-free heading found at target (" + std::to_string(position.x) +
                ", " + std::to_string(position.y) + ")");
}

ForestPlanner::ForestPlanner(const World& world, const Model& model, std::vector<Point2> targets,
                             const PlannerParams& params, Rng& rng)
    : world_(world), model_(model), targets_(std::move(targets)), params_(params), rng_(rng) {
    if (targets_.size() < 2) throw Error("need at least two targets");
    trees_.reserve(targets_.size());
    for (std::size_t i = 0; i < targets_.size(); ++i)
        trees_.emplace_back(static_cast<int>(i),
                            root_config_at(targets_[i], world_, params_.root_heading, rng_));
    queues_.resize(targets_.size() * targets_.size());
}

double ForestPlanner::heuristic_value(const Config& q, const Tree& other) const {
    const IndexKey near = other.index().nearest(q.position());
    return rho(q, near.position) + other.node(near.node_id).cost_to_root;
}

std::optional<Trajectory> ForestPlanner::expand_pair_once(int i, int j) {
    Tree& ti = trees_[i];
    Tree& tj = trees_[j];
    HeuristicQueue& queue = queues_[queue_slot(i, j)];
    const Point2 goal = targets_[j];

    // Grow the partner tree toward a random sample; a new node there improves
    // the heuristic estimate of the closest node in our tree.
    {
        const Config q_rand = sample_uniform_config(world_.bounds(), rng_);
        const uint32_t near = tj.index().nearest(q_rand.position()).node_id;
        const auto grown = monte_carlo_expand(tj, world_, model_, near, q_rand,
                                              params_.mc_trials, params_.rollout_tmax, rng_);
        if (grown) {
            ++counters_.grow_other;
            const TreeNode& nj = tj.node(*grown);
            const uint32_t other = ti.index().nearest(nj.config.position()).node_id;
            queue.push_or_update(other, rho(ti.node(other).config, nj.config) + nj.cost_to_root);
        }
    }

    // Grow our tree: heuristic-guided with probability heuristic_bias,
    // otherwise a cheap single-trial random expansion.
    const Config q_rand = sample_uniform_config(world_.bounds(), rng_);
    const uint32_t near = ti.index().nearest(q_rand.position()).node_id;
    std::optional<uint32_t> grown;
    if (rng_.uniform01() <= params_.heuristic_bias) {
        if (queue.empty()) {
            ++counters_.random_full;
            grown = monte_carlo_expand(ti, world_, model_, near, q_rand, params_.mc_trials,
                                       params_.rollout_tmax, rng_);
        } else {
            ++counters_.heuristic;
            const auto popped = *queue.pop();
            const Config& q_pop = ti.node(popped.first).config;
            const auto nearby = tj.index().within_radius(q_pop.position(),
                                                         params_.heuristic_radius);
            uint32_t best_id = std::numeric_limits<uint32_t>::max();
            double best_val = std::numeric_limits<double>::infinity();
            for (const IndexKey& key : nearby) {
                const double val = rho(q_pop, key.position) + tj.node(key.node_id).cost_to_root;
                if (val < best_val || (val == best_val && key.node_id < best_id)) {
                    best_val = val;
                    best_id = key.node_id;
                }
            }
            if (nearby.empty()) // nothing in range: steer at the plain nearest node
                best_id = tj.index().nearest(q_pop.position()).node_id;
            grown = monte_carlo_expand(ti, world_, model_, popped.first, tj.node(best_id).config,
                                       params_.mc_trials, params_.rollout_tmax, rng_);
        }
    } else {
        ++counters_.random_single;
        grown = monte_carlo_expand(ti, world_, model_, near, q_rand, 1, params_.rollout_tmax,
                                   rng_);
    }

    if (grown) {
        const TreeNode& ni = ti.node(*grown);
        const uint32_t other = tj.index().nearest(ni.config.position()).node_id;
        queue.push_or_update(*grown,
                             rho(ni.config, tj.node(other).config) + tj.node(other).cost_to_root);
        if (rho(ni.config, goal) <= params_.target_radius) return ti.trajectory_to(*grown);
    }
    return std::nullopt;
}

PairTrajectories ForestPlanner::build(const Deadline& deadline) {
    const int n = target_count();
    PairTrajectories result(n);
    std::vector<std::pair<int, int>> unsolved;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) unsolved.emplace_back(i, j);

    long rounds = 0;
    while (!unsolved.empty()) {
        if (rounds >= params_.pair_round_cap)
            throw ForestTimeout("forest round cap exhausted with " +
                                    std::to_string(unsolved.size()) + " pair(s) unsolved",
                                unsolved);
        if (deadline.expired())
            throw ForestTimeout("forest wall clock exceeded with " +
                                    std::to_string(unsolved.size()) + " pair(s) unsolved",
                                unsolved);
        const std::size_t pick = rng_.uniform_index(unsolved.size());
        const auto [i, j] = unsolved[pick];
        auto traj = expand_pair_once(i, j);
        ++rounds;
        if (traj) {
            result.set_pair(i, j, std::make_shared<const Trajectory>(std::move(*traj)));
            unsolved[pick] = unsolved.back();
            unsolved.pop_back();
        }
    }
    return result;
}

} // namespace krrf
