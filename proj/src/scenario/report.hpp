#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nhb::scenario {

// One observed operation. Timestamps live in the run's clock domain
// (virtual microseconds under a virtual clock). `ok` already reflects the
// documented delete-race rule: an operation that hits an expected not-found
// (its target was legitimately removed by a concurrent worker) is recorded
// ok with error_class "expected_not_found".
struct OpRecord {
    uint32_t worker = 0;
    uint64_t seq = 0; // global record order
    std::string kind; // "Q4", "A1", "read", "update", "insert", "delete",
                      // "bulk_load", "index", "kill", "durability_check"
    int64_t start_us = 0;
    int64_t end_us = 0;
    bool ok = true;
    std::string error_class;
    uint32_t version = 0; // version served or written, when applicable
    std::string key;
    uint64_t rows = 0;
    uint64_t bytes = 0; // payload returned to the client (egress)
};

struct Counters {
    uint64_t total_ops = 0;
    uint64_t successful_ops = 0;
    uint64_t total_reads = 0;      // "read" + "durability_check" records
    uint64_t correct_reads = 0;    // durability checks that held
    uint64_t consistent_reads = 0; // reads that did not regress (per worker)
    uint64_t unreachable_keys = 0; // operations failing with "unavailable"
    uint64_t egress_bytes = 0;

    bool operator==(const Counters&) const = default;
};

struct ScenarioReport {
    int schema_version = 1;
    int scenario = 0;
    std::string config_echo_json = "{}"; // run configuration snapshot
    std::string clock_mode = "virtual";
    double speedup = 1.0;
    int64_t started_us = 0;
    int64_t ended_us = 0;
    // Total time in the clock domain; under a virtual clock this is the
    // realtime-equivalent duration, independent of the speedup.
    double wall_clock_seconds = 0.0;
    Counters counters;
    std::string scenario_data_json = "{}"; // per-scenario facts
    std::vector<OpRecord> operations;
    bool sealed = false;

    std::string to_json() const;
    static ScenarioReport from_json(const std::string& text);
};

// Recomputes every counter from the per-operation records; the stored
// counters must match exactly (self-consistency audit).
Counters recompute_counters(const ScenarioReport& report);

// Collects operation records with deterministic sequence numbers; the
// scenario seals it into the report at the end.
class Recorder {
public:
    uint64_t add(OpRecord r) {
        r.seq = next_seq_++;
        records_.push_back(std::move(r));
        return records_.back().seq;
    }
    std::vector<OpRecord> take() { return std::move(records_); }
    const std::vector<OpRecord>& records() const { return records_; }

private:
    std::vector<OpRecord> records_;
    uint64_t next_seq_ = 0;
};

} // namespace nhb::scenario
