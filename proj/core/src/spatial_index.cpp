#include "krrf/spatial_index.hpp"

#include <algorithm>
#include <limits>

#include "krrf/errors.hpp"

namespace krrf {

namespace {

inline double coord(const Point2& p, int axis) { return axis == 0 ? p.x : p.y; }

// (distance, id) lexicographic order shared by all queries.
inline bool closer(double d2, uint32_t id, double best_d2, uint32_t best_id) {
    return d2 < best_d2 || (d2 == best_d2 && id < best_id);
}

} // namespace

void SpatialIndex::insert(Point2 position, uint32_t node_id) {
    if (!ids_.insert(node_id).second)
        throw DuplicateId("node id already indexed: " + std::to_string(node_id));
    keys_.push_back({position, node_id});
    if (keys_.size() - built_ > built_) rebuild();
}

void SpatialIndex::rebuild() {
    built_ = keys_.size();
    tree_.resize(built_);
    for (std::size_t i = 0; i < built_; ++i) tree_[i] = static_cast<uint32_t>(i);
    if (built_ > 0) build_subtree(0, built_, 0);
}

void SpatialIndex::build_subtree(std::size_t lo, std::size_t hi, int axis) {
    if (hi - lo <= 1) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::nth_element(tree_.begin() + lo, tree_.begin() + mid, tree_.begin() + hi,
                     [&](uint32_t a, uint32_t b) {
                         const double ca = coord(keys_[a].position, axis);
                         const double cb = coord(keys_[b].position, axis);
                         if (ca != cb) return ca < cb;
                         return keys_[a].node_id < keys_[b].node_id;
                     });
    build_subtree(lo, mid, 1 - axis);
    build_subtree(mid + 1, hi, 1 - axis);
}

void SpatialIndex::nearest_subtree(std::size_t lo, std::size_t hi, int axis, Point2 p,
                                   double& best_d2, uint32_t& best_id, Point2& best_pos) const {
    if (lo >= hi) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    const IndexKey& k = keys_[tree_[mid]];
    const double d2 = distance_sq(p, k.position);
    if (closer(d2, k.node_id, best_d2, best_id)) {
        best_d2 = d2;
        best_id = k.node_id;
        best_pos = k.position;
    }
    const double diff = coord(p, axis) - coord(k.position, axis);
    const std::size_t near_lo = diff < 0.0 ? lo : mid + 1;
    const std::size_t near_hi = diff < 0.0 ? mid : hi;
    const std::size_t far_lo = diff < 0.0 ? mid + 1 : lo;
    const std::size_t far_hi = diff < 0.0 ? hi : mid;
    nearest_subtree(near_lo, near_hi, 1 - axis, p, best_d2, best_id, best_pos);
    // Equal splitting distance can still hide an equal-distance lower id.
    if (diff * diff <= best_d2) nearest_subtree(far_lo, far_hi, 1 - axis, p, best_d2, best_id, best_pos);
}

IndexKey SpatialIndex::nearest(Point2 p) const {
    if (keys_.empty()) throw EmptyIndex("nearest query on empty index");
    double best_d2 = std::numeric_limits<double>::infinity();
    uint32_t best_id = std::numeric_limits<uint32_t>::max();
    Point2 best_pos;
    nearest_subtree(0, built_, 0, p, best_d2, best_id, best_pos);
    for (std::size_t i = built_; i < keys_.size(); ++i) {
        const double d2 = distance_sq(p, keys_[i].position);
        if (closer(d2, keys_[i].node_id, best_d2, best_id)) {
            best_d2 = d2;
            best_id = keys_[i].node_id;
            best_pos = keys_[i].position;
        }
    }
    return {best_pos, best_id};
}

void SpatialIndex::radius_subtree(std::size_t lo, std::size_t hi, int axis, Point2 p, double r2,
                                  std::vector<IndexKey>& out) const {
    if (lo >= hi) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    const IndexKey& k = keys_[tree_[mid]];
    if (distance_sq(p, k.position) <= r2) out.push_back(k);
    const double diff = coord(p, axis) - coord(k.position, axis);
    const std::size_t near_lo = diff < 0.0 ? lo : mid + 1;
    const std::size_t near_hi = diff < 0.0 ? mid : hi;
    const std::size_t far_lo = diff < 0.0 ? mid + 1 : lo;
    const std::size_t far_hi = diff < 0.0 ? hi : mid;
    radius_subtree(near_lo, near_hi, 1 - axis, p, r2, out);
    if (diff * diff <= r2) radius_subtree(far_lo, far_hi, 1 - axis, p, r2, out);
}

std::vector<IndexKey> SpatialIndex::within_radius(Point2 p, double radius) const {
    std::vector<IndexKey> out;
    radius_subtree(0, built_, 0, p, radius * radius, out);
    for (std::size_t i = built_; i < keys_.size(); ++i) {
        if (distance_sq(p, keys_[i].position) <= radius * radius) out.push_back(keys_[i]);
    }
    return out;
}

} // namespace krrf
