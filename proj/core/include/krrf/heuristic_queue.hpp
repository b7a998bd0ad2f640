#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>

namespace krrf {

/// Min-priority queue of (node id, heuristic value) with at most one entry per
/// node. An update can only lower a stored value; pops break ties by node id.
class HeuristicQueue {
public:
    /// Inserts the node, or lowers its stored value if the new one is smaller.
    /// Returns true if the queue changed.
    bool push_or_update(uint32_t node_id, double value) {
        auto [it, inserted] = values_.try_emplace(node_id, value);
        if (inserted) {
            ordered_.emplace(value, node_id);
            return true;
        }
        if (value >= it->second) return false;
        ordered_.erase({it->second, node_id});
        ordered_.emplace(value, node_id);
        it->second = value;
        return true;
    }

    /// Removes and returns the entry with the smallest value (ties by id).
    std::optional<std::pair<uint32_t, double>> pop() {
        if (ordered_.empty()) return std::nullopt;
        const auto [value, id] = *ordered_.begin();
        ordered_.erase(ordered_.begin());
        values_.erase(id);
        return std::make_pair(id, value);
    }

    bool empty() const { return ordered_.empty(); }
    std::size_t size() const { return ordered_.size(); }

    bool contains(uint32_t node_id) const { return values_.count(node_id) != 0; }
    double value_of(uint32_t node_id) const { return values_.at(node_id); }

private:
    std::set<std::pair<double, uint32_t>> ordered_;
    std::unordered_map<uint32_t, double> values_;
};

} // namespace krrf
