#include "backend/cluster.hpp"

#include <algorithm>

#include "core/digest.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"

namespace nhb::backend {

namespace {

// FNV alone distributes high bits poorly on short, similar keys; a splitmix
// finalizer fixes the avalanche so ring arcs come out near-uniform.
uint64_t ring_hash(std::string_view s) {
    uint64_t state = fnv1a64(s);
    return splitmix64(state);
}

} // namespace

HashRing::HashRing(const std::vector<std::string>& node_ids, uint32_t vnodes_per_node)
    : vnodes_(vnodes_per_node) {
    for (const auto& id : node_ids) add_node(id);
}

bool HashRing::has_node(const std::string& node_id) const {
    return std::find(nodes_.begin(), nodes_.end(), node_id) != nodes_.end();
}

void HashRing::add_node(const std::string& node_id) {
    if (node_id.empty()) throw ArgumentError("node id must be non-empty");
    if (has_node(node_id)) throw ConflictError("node already in the ring: " + node_id);
    nodes_.push_back(node_id);
    insert_points(node_id);
}

void HashRing::insert_points(const std::string& node_id) {
    const uint32_t node_index = static_cast<uint32_t>(nodes_.size() - 1);
    for (uint32_t v = 0; v < vnodes_; v++) {
        points_.emplace_back(ring_hash(node_id + "#" + std::to_string(v)), node_index);
    }
    std::sort(points_.begin(), points_.end());
}

uint32_t HashRing::shard_of(const std::string& key) const {
    if (points_.empty()) throw StateError("ring has no nodes");
    const uint64_t h = ring_hash(key);
    // First point with hash >= h; wraps to point 0.
    auto it = std::lower_bound(points_.begin(), points_.end(), std::make_pair(h, uint32_t{0}));
    if (it == points_.end()) it = points_.begin();
    return static_cast<uint32_t>(it - points_.begin());
}

std::vector<std::string> HashRing::replicas_of_shard(uint32_t shard,
                                                     uint32_t replication) const {
    if (shard >= points_.size()) throw ArgumentError("shard index out of range");
    std::vector<std::string> out;
    std::vector<bool> seen(nodes_.size(), false);
    for (size_t step = 0; step < points_.size() && out.size() < replication; step++) {
        uint32_t node = points_[(shard + step) % points_.size()].second;
        if (!seen[node]) {
            seen[node] = true;
            out.push_back(nodes_[node]);
        }
    }
    return out;
}

std::vector<std::string> HashRing::replicas_of_key(const std::string& key,
                                                   uint32_t replication) const {
    return replicas_of_shard(shard_of(key), replication);
}

} // namespace nhb::backend
