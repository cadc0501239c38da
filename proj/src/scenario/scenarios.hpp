#pragma once

#include <memory>

#include "backend/sim_backend.hpp"
#include "core/clock.hpp"
#include "gen/manifest.hpp"
#include "meta/pipeline.hpp"
#include "scenario/report.hpp"
#include "scenario/sim.hpp"
#include "scenario/workload.hpp"

namespace nhb::scenario {

struct ScenarioConfig {
    int scenario_id = 1; // 1..7
    uint64_t seed = 42;
    ClockConfig clock;
    Date virtual_now; // defaults to the corpus window end when unset by caller
    CostModel costs;
    meta::PipelineParams pipeline;
    double load_fraction = 0.5; // initial-state fraction of the corpus

    // Scenario 1: query dates around the doubling.
    Date s1_date1{2001, 9, 12};
    Date s1_date2{2008, 11, 5};

    // Scenario 2: hot-article read/update race.
    double s2_reads_per_second = 100.0;
    double s2_update_every_seconds = 5.0;
    double s2_duration_seconds = 120.0;
    std::string s2_article; // empty = first loaded article

    // Scenario 3: node removal order; empty = node-0, node-1, ...
    std::vector<std::string> s3_removal_order;

    // Scenario 4: concurrent query and mutation storm.
    uint32_t s4_repetitions = 300;
    uint32_t s4_query_workers = 10;
    uint32_t s4_mutation_workers = 5;
    double s4_rate_per_stream = 10.0; // updates, deletes, inserts each
    double s4_repetition_seconds = 1.0;

    // Scenario 5: analytic sampling.
    uint32_t s5_executions = 100;

    // Scenario 7: scale-up step.
    double s7_delta_fraction = 0.25;

    std::string config_echo_json() const;
};

// Everything a scenario needs: the backend bound to a rebindable clock, the
// metadata pipeline, and corpus access. Build one per store; scenarios
// temporarily bind the backend clock to their event loop.
struct Environment {
    Environment(const backend::SimBackendConfig& cluster, const gen::CorpusManifest& manifest,
                backend::CorpusReader reader);
    // Wraps an already-loaded backend (restored from disk).
    Environment(std::unique_ptr<backend::SimBackend> loaded,
                const gen::CorpusManifest& manifest, backend::CorpusReader reader,
                double loaded_fraction);

    // Untimed initial-state preparation: bulk load + metadata build.
    void initialize(double fraction, const meta::PipelineParams& params);
    void attach_pipeline_to_backend();
    uint64_t loaded_article_count() const;
    uint32_t live_nodes();

    ManualClock base_clock{0};
    RebindableClock clock;
    std::unique_ptr<backend::SimBackend> backend;
    meta::MetadataPipeline pipeline;
    gen::CorpusManifest manifest;
    backend::CorpusReader reader;
    double loaded_fraction = 0.0;
    uint64_t loaded_articles = 0; // articles entered via slices
};

// Runs one scenario against the environment and returns the sealed report.
// Preconditions follow the per-scenario contracts: scenario 6 needs an empty
// backend, every other scenario needs initialized state.
ScenarioReport run_scenario(const ScenarioConfig& config, Environment& env);

} // namespace nhb::scenario
