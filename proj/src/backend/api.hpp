#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "model/entities.hpp"

namespace nhb::backend {

// Storage abstraction the whole workload runs against. The repo ships a
// simulated cluster (SimBackend); external systems plug in behind this same
// interface and must pass the identical contract test suite
// (tests/backend_contract.hpp, expectations in docs/backend-adapter.md).

enum class ConsistencyMode { Strong, Eventual };

struct ConsistencyConfig {
    ConsistencyMode mode = ConsistencyMode::Strong;
    int64_t staleness_window_ms = 0; // eventual mode: maximum read lag
};

struct VersionedValue {
    std::string article_id;
    uint32_t version = 0;
    std::shared_ptr<const model::Article> payload;
    int64_t write_timestamp_us = 0;
};

struct ReadOptions {
    enum class Mode { Latest, AtVersion };
    Mode mode = Mode::Latest;
    uint32_t version = 0;          // for AtVersion
    std::string reader_tag;        // identifies the reading session (staleness stream)
};

struct SearchFilters {
    std::optional<std::string> author_id;
    std::optional<std::string> country_id;
    std::optional<std::string> topic_id;
    std::optional<Date> publish_date;
};

struct SearchHit {
    std::string article_id;
    double score = 0.0;
};

struct NodeStatus {
    std::string node_id;
    bool alive = true;
    uint64_t stored_bytes = 0;
};

struct ClusterStatus {
    std::vector<NodeStatus> nodes;
    uint32_t replication = 1;
    ConsistencyConfig consistency;
    uint64_t shard_count = 0;
    uint64_t article_count = 0;
    uint64_t stored_bytes = 0;
};

struct LoadReport {
    uint64_t bytes = 0;
    uint64_t articles = 0;
    uint64_t entities = 0;
    double elapsed_seconds = 0.0;
};

struct RebalanceReport {
    uint64_t moved_keys = 0;
    uint64_t moved_bytes = 0;
    uint64_t total_keys = 0;
    uint64_t total_bytes = 0;
    double moved_fraction() const {
        return total_keys == 0 ? 0.0
                               : static_cast<double>(moved_keys) / static_cast<double>(total_keys);
    }
};

// Reads a corpus file by its canonical relative path; nullopt when absent.
using CorpusReader = std::function<std::optional<std::string>(const std::string&)>;

// Per-article search scores supplied by the metadata pipeline; an unset
// scorer means the index has not been built.
using SearchScoreFn =
    std::function<std::map<std::string, double>(const std::vector<std::string>&)>;

class BackendInterface {
public:
    virtual ~BackendInterface() = default;

    // Data plane. Write stores a fresh article (version 1); update bumps the
    // version by exactly one keeping history; remove tombstones. All throw
    // NotFoundError / ConflictError / UnavailableError as documented.
    virtual VersionedValue write(const model::Article& article) = 0;
    virtual VersionedValue update(const std::string& article_id, const std::string& new_body) = 0;
    virtual VersionedValue read(const std::string& article_id, const ReadOptions& opts = {}) = 0;
    virtual void remove(const std::string& article_id) = 0;
    virtual std::vector<SearchHit> search(const std::vector<std::string>& terms,
                                          const SearchFilters& filters) = 0;

    // Catalog and scan access for the query engine. Scans cover the latest
    // live version of every article and fail with UnavailableError when any
    // shard has no live replica.
    virtual std::vector<std::shared_ptr<const model::Article>> scan_articles() = 0;
    virtual std::vector<std::string> article_ids() = 0;
    virtual std::vector<VersionedValue> history(const std::string& article_id) = 0;
    virtual std::shared_ptr<const model::Author> author(const std::string& id) = 0;
    virtual std::vector<std::shared_ptr<const model::Author>> authors() = 0;
    virtual std::shared_ptr<const model::Topic> topic(const std::string& id) = 0;
    virtual std::vector<std::shared_ptr<const model::Topic>> topics() = 0;
    virtual std::shared_ptr<const model::Keyword> keyword(const std::string& id) = 0;
    virtual std::shared_ptr<const model::Language> language(const std::string& id) = 0;
    virtual std::shared_ptr<const model::Country> country(const std::string& id) = 0;
    virtual std::shared_ptr<const model::MediaRef> media(const std::string& id) = 0;

    // Administration.
    virtual ClusterStatus status() = 0;
    virtual void kill_node(const std::string& node_id) = 0;
    virtual void recover_node(const std::string& node_id) = 0;
    virtual void add_node(const std::string& node_id) = 0;
    virtual RebalanceReport rebalance() = 0;

    virtual void attach_search(SearchScoreFn scorer) = 0;
};

} // namespace nhb::backend
