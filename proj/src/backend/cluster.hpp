#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nhb::backend {

// Consistent-hash ring with virtual nodes. Each physical node contributes
// `vnodes` points; a shard is the arc ending at one point and its replicas
// are the next R distinct physical nodes clockwise. Placement is a pure
// function of the node set, so recomputing it is idempotent.
class HashRing {
public:
    HashRing() = default;
    HashRing(const std::vector<std::string>& node_ids, uint32_t vnodes_per_node = 64);

    void add_node(const std::string& node_id); // ConflictError on duplicates
    bool has_node(const std::string& node_id) const;
    const std::vector<std::string>& node_ids() const { return nodes_; }
    size_t node_count() const { return nodes_.size(); }
    uint64_t shard_count() const { return points_.size(); }

    uint32_t shard_of(const std::string& key) const;
    // R distinct physical nodes clockwise from the shard point. Returns fewer
    // when the cluster is smaller than R.
    std::vector<std::string> replicas_of_shard(uint32_t shard, uint32_t replication) const;
    std::vector<std::string> replicas_of_key(const std::string& key, uint32_t replication) const;

private:
    void insert_points(const std::string& node_id);

    std::vector<std::string> nodes_;
    std::vector<std::pair<uint64_t, uint32_t>> points_; // (hash, node index), sorted
    uint32_t vnodes_ = 64;
};

} // namespace nhb::backend
