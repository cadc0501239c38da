#pragma once

#include <memory>
#include <mutex>

#include "backend/api.hpp"
#include "meta/pipeline.hpp"
#include "query/spec.hpp"

namespace nhb::query {

// Executes the fixed query set against any backend. Queries are read-only
// and safe to run concurrently with each other and with writes; each one
// sees the consistent-per-read view the backend provides. Kinds that rank by
// pagerank, search scores or document similarity (Q1, Q12, Q13) need the
// metadata pipeline attached and raise StateError otherwise.
class QueryEngine {
public:
    QueryEngine(backend::BackendInterface& backend, const meta::MetadataPipeline* metadata,
                Date virtual_now);

    QueryResult execute(const QuerySpec& spec);

    Date virtual_now() const { return virtual_now_; }

private:
    struct Snapshot;

    const meta::MetadataPipeline& require_metadata() const;
    // Tokens of an article's title+body, cached per (id, version).
    std::shared_ptr<const std::vector<std::string>> tokens_for(
        const std::shared_ptr<const model::Article>& article);

    QueryResult q1(const QuerySpec&, Snapshot&);
    QueryResult q2(const QuerySpec&, Snapshot&);
    QueryResult q3(const QuerySpec&, Snapshot&);
    QueryResult q4(const QuerySpec&, Snapshot&);
    QueryResult q5(const QuerySpec&, Snapshot&);
    QueryResult q6(const QuerySpec&, Snapshot&);
    QueryResult q7(const QuerySpec&, Snapshot&);
    QueryResult q8(const QuerySpec&, Snapshot&);
    QueryResult q9(const QuerySpec&, Snapshot&);
    QueryResult q10(const QuerySpec&, Snapshot&);
    QueryResult q11(const QuerySpec&, Snapshot&);
    QueryResult q12(const QuerySpec&, Snapshot&);
    QueryResult q13(const QuerySpec&, Snapshot&);
    QueryResult q14(const QuerySpec&, Snapshot&);
    QueryResult a1(const QuerySpec&, Snapshot&);
    QueryResult a2(const QuerySpec&, Snapshot&);
    QueryResult a3(const QuerySpec&, Snapshot&);
    QueryResult a4(const QuerySpec&, Snapshot&);

    backend::BackendInterface& backend_;
    const meta::MetadataPipeline* metadata_;
    Date virtual_now_;

    std::mutex cache_mutex_;
    std::map<std::pair<std::string, uint32_t>, std::shared_ptr<const std::vector<std::string>>>
        token_cache_;
};

} // namespace nhb::query
