#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "krrf/geom.hpp"

namespace krrf {

struct IndexKey {
    Point2 position;
    uint32_t node_id = 0;
};

/// Incremental nearest-neighbor index over node positions. A kd-tree covers
/// the bulk of the keys and is rebuilt whenever the unindexed tail grows to
/// the tree's size; queries scan the tail linearly. Ties are broken by the
/// lowest node id, so query answers are reproducible.
class SpatialIndex {
public:
    /// Throws DuplicateId if node_id is already present.
    void insert(Point2 position, uint32_t node_id);

    /// Key minimizing the Euclidean position distance, ties by lowest id.
    /// Throws EmptyIndex on an empty index.
    IndexKey nearest(Point2 p) const;

    /// All keys with distance <= radius, in no particular order.
    std::vector<IndexKey> within_radius(Point2 p, double radius) const;

    std::size_t size() const { return keys_.size(); }
    bool empty() const { return keys_.empty(); }

private:
    void rebuild();
    void build_subtree(std::size_t lo, std::size_t hi, int axis);
    void nearest_subtree(std::size_t lo, std::size_t hi, int axis, Point2 p, double& best_d2,
                         uint32_t& best_id, Point2& best_pos) const;
    void radius_subtree(std::size_t lo, std::size_t hi, int axis, Point2 p, double r2,
                        std::vector<IndexKey>& out) const;

    std::vector<IndexKey> keys_;      // insertion order; [built_, end) is the linear tail
    std::vector<uint32_t> tree_;      // kd layout: indices into keys_, subtree = [lo, hi)
    std::size_t built_ = 0;
    std::unordered_set<uint32_t> ids_;
};

} // namespace krrf
