#pragma once

#include <shared_mutex>

#include "backend/api.hpp"
#include "backend/cluster.hpp"
#include "core/clock.hpp"
#include "gen/manifest.hpp"

namespace nhb::backend {

struct SimBackendConfig {
    uint32_t nodes = 5;
    uint32_t replication = 3;
    uint32_t vnodes_per_node = 64;
    ConsistencyConfig consistency;
    uint64_t seed = 42; // drives the deterministic staleness stream
};

// Reference system under test: an in-memory simulated cluster with
// consistent-hash placement, R-way replica bookkeeping, versioned articles
// and crash-stop fault injection. Replication is deterministic placement
// over one logical store (no consensus protocol); a killed node keeps its
// state and recovery is lossless. Thread-safe: reads share the lock, writes
// serialize per store.
class SimBackend : public BackendInterface {
public:
    SimBackend(const SimBackendConfig& config, Clock& clock);

    VersionedValue write(const model::Article& article) override;
    VersionedValue update(const std::string& article_id, const std::string& new_body) override;
    VersionedValue read(const std::string& article_id, const ReadOptions& opts = {}) override;
    void remove(const std::string& article_id) override;
    std::vector<SearchHit> search(const std::vector<std::string>& terms,
                                  const SearchFilters& filters) override;

    std::vector<std::shared_ptr<const model::Article>> scan_articles() override;
    std::vector<std::string> article_ids() override;
    std::vector<VersionedValue> history(const std::string& article_id) override;
    std::shared_ptr<const model::Author> author(const std::string& id) override;
    std::vector<std::shared_ptr<const model::Author>> authors() override;
    std::shared_ptr<const model::Topic> topic(const std::string& id) override;
    std::vector<std::shared_ptr<const model::Topic>> topics() override;
    std::shared_ptr<const model::Keyword> keyword(const std::string& id) override;
    std::shared_ptr<const model::Language> language(const std::string& id) override;
    std::shared_ptr<const model::Country> country(const std::string& id) override;
    std::shared_ptr<const model::MediaRef> media(const std::string& id) override;

    ClusterStatus status() override;
    void kill_node(const std::string& node_id) override;
    void recover_node(const std::string& node_id) override;
    void add_node(const std::string& node_id) override;
    RebalanceReport rebalance() override;

    void attach_search(SearchScoreFn scorer) override;

    // Loads one slice from a corpus. Duplicate article ids conflict; any
    // unresolvable reference aborts the load naming the offending id.
    LoadReport bulk_load(const CorpusReader& read_file, const gen::Slice& slice);

    // Store persistence (documented layout, docs/store-layout.md).
    void save(const std::string& store_dir) const;
    static std::unique_ptr<SimBackend> load(const std::string& store_dir, Clock& clock);

    // Direct catalog installation for fixtures and adapters that do not go
    // through bulk_load (articles still enter through write()).
    void put_catalog_entity(const model::Entity& entity);

    // Free-form state blob for the layers above (loaded fraction, paths).
    void set_app_state(const std::string& json_blob);
    std::string app_state() const;

    // Deterministic content digest over live data (state-comparison tests).
    std::string store_digest() const;

    // Reachability oracle hook: replica node ids of an article's shard under
    // the current placement.
    std::vector<std::string> placement_of(const std::string& article_id) const;

    uint64_t article_count() const;
    const SimBackendConfig& config() const { return cfg_; }

private:
    struct ArticleRecord {
        std::vector<VersionedValue> versions; // versions[k] holds version k+1
        uint64_t byte_cost = 0;               // serialized size + media payloads
    };

    void require_reachable_locked(const std::string& key) const;
    bool reachable_locked(const std::string& key) const;
    const ArticleRecord& live_record_locked(const std::string& key) const;
    uint64_t node_bytes_locked(const std::string& node_id) const;
    VersionedValue read_locked(const std::string& article_id, const ReadOptions& opts) const;

    SimBackendConfig cfg_;
    Clock& clock_;
    mutable std::shared_mutex mutex_;

    HashRing ring_;           // target topology (grows on add_node)
    HashRing placement_ring_; // topology data is currently placed by
    std::map<std::string, bool> alive_;

    std::map<std::string, ArticleRecord> articles_; // live
    std::map<std::string, ArticleRecord> tombstones_;
    std::map<std::string, std::shared_ptr<const model::Author>> authors_;
    std::map<std::string, std::shared_ptr<const model::Topic>> topics_;
    std::map<std::string, std::shared_ptr<const model::Keyword>> keywords_;
    std::map<std::string, std::shared_ptr<const model::Language>> languages_;
    std::map<std::string, std::shared_ptr<const model::Country>> countries_;
    std::map<std::string, std::shared_ptr<const model::MediaRef>> media_;
    std::map<std::string, std::string> media_payloads_;
    std::map<std::string, model::DateInfo> dates_;

    SearchScoreFn scorer_;
    std::string app_state_;
};

} // namespace nhb::backend
