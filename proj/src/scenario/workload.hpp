#pragma once

#include <cstdint>
#include <vector>

#include "backend/sim_backend.hpp"
#include "core/rng.hpp"
#include "gen/manifest.hpp"
#include "meta/pipeline.hpp"
#include "query/spec.hpp"

namespace nhb::scenario {

// Modeled service times, in clock-domain microseconds. Under the virtual
// clock operation latency comes from this table, never from host timing, so
// reports are bit-identical across runs and hosts. Scan-heavy work divides
// across live nodes (the parallel-processing assumption behind the scale-up
// and elastic-speedup properties).
struct CostModel {
    int64_t read_us = 300;
    int64_t write_us = 800;
    int64_t update_us = 800;
    int64_t delete_us = 500;
    int64_t query_base_us = 1500;
    int64_t query_per_doc_us = 8;
    int64_t query_per_row_us = 40;
    int64_t load_per_article_us = 2000;
    double load_per_byte_us = 0.05;
    int64_t index_per_doc_us = 1000;
    int64_t index_per_doc_gibbs_iter_us = 20;

    int64_t query_us(uint64_t docs_examined, uint64_t rows, uint32_t live_nodes) const {
        const uint64_t nodes = live_nodes == 0 ? 1 : live_nodes;
        return query_base_us +
               static_cast<int64_t>(docs_examined * static_cast<uint64_t>(query_per_doc_us) /
                                    nodes) +
               static_cast<int64_t>(rows) * query_per_row_us;
    }
    int64_t load_us(uint64_t articles, uint64_t bytes, uint32_t live_nodes) const {
        const uint64_t nodes = live_nodes == 0 ? 1 : live_nodes;
        return static_cast<int64_t>((articles * static_cast<uint64_t>(load_per_article_us) +
                                     static_cast<uint64_t>(static_cast<double>(bytes) *
                                                           load_per_byte_us)) /
                                    nodes);
    }
    int64_t index_us(uint64_t documents, uint32_t gibbs_iterations, uint32_t live_nodes) const {
        const uint64_t nodes = live_nodes == 0 ? 1 : live_nodes;
        return static_cast<int64_t>(
            (documents * static_cast<uint64_t>(index_per_doc_us) +
             documents * static_cast<uint64_t>(gibbs_iterations) *
                 static_cast<uint64_t>(index_per_doc_gibbs_iter_us)) /
            nodes);
    }
};

// Draws parameters for the generic and analytic query sets from what the
// corpus actually contains (dates inside the generated span, catalog ids
// from the config counts). Pure function of the manifest and the rng state.
class WorkloadSampler {
public:
    WorkloadSampler(const gen::CorpusManifest& manifest, Date virtual_now);

    // One full generic set Q1..Q14 in order.
    std::vector<query::QuerySpec> generic_set(Rng& rng) const;
    // One analytic query, uniformly from A1..A4.
    query::QuerySpec analytic(Rng& rng) const;

    Date random_loaded_date(Rng& rng) const;
    std::string random_topic(Rng& rng) const;
    std::string random_keyword(Rng& rng) const;
    std::string random_language(Rng& rng) const;
    std::string random_country(Rng& rng) const;

private:
    const gen::CorpusManifest& manifest_;
    Date now_;
};

// Live-article documents plus transcript documents, and the citation graph,
// as pipeline inputs; shared by initialization and the scale-up scenarios.
void pipeline_inputs(backend::SimBackend& backend, std::vector<meta::Document>& documents,
                     meta::CitationGraph& graph);

} // namespace nhb::scenario
