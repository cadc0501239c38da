#include "scenario/report.hpp"

#include <map>

#include "core/errors.hpp"
#include "json.hpp"

namespace nhb::scenario {

using nlohmann::json;

std::string ScenarioReport::to_json() const {
    json j;
    j["schema_version"] = schema_version;
    j["scenario"] = scenario;
    j["config"] = json::parse(config_echo_json);
    j["clock"] = {{"mode", clock_mode}, {"speedup", speedup}};
    j["started_us"] = started_us;
    j["ended_us"] = ended_us;
    j["wall_clock_seconds"] = wall_clock_seconds;
    // The paper calls total execution time "throughput"; the alias spells
    // out what the number actually is.
    j["throughput_seconds"] = wall_clock_seconds;
    j["completion_time_seconds"] = wall_clock_seconds;
    j["counters"] = {{"total_ops", counters.total_ops},
                     {"successful_ops", counters.successful_ops},
                     {"total_reads", counters.total_reads},
                     {"correct_reads", counters.correct_reads},
                     {"consistent_reads", counters.consistent_reads},
                     {"unreachable_keys", counters.unreachable_keys},
                     {"egress_bytes", counters.egress_bytes}};
    j["scenario_data"] = json::parse(scenario_data_json);
    j["sealed"] = sealed;
    json ops = json::array();
    for (const auto& op : operations) {
        json o;
        o["w"] = op.worker;
        o["q"] = op.seq;
        o["k"] = op.kind;
        o["s"] = op.start_us;
        o["e"] = op.end_us;
        o["ok"] = op.ok;
        if (!op.error_class.empty()) o["err"] = op.error_class;
        if (op.version != 0) o["v"] = op.version;
        if (!op.key.empty()) o["key"] = op.key;
        if (op.rows != 0) o["rows"] = op.rows;
        if (op.bytes != 0) o["bytes"] = op.bytes;
        ops.push_back(std::move(o));
    }
    j["operations"] = std::move(ops);
    return j.dump(1);
}

ScenarioReport ScenarioReport::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid report json: ") + e.what());
    }
    ScenarioReport r;
    try {
        r.schema_version = j.at("schema_version").get<int>();
        r.scenario = j.at("scenario").get<int>();
        r.config_echo_json = j.at("config").dump();
        r.clock_mode = j.at("clock").at("mode").get<std::string>();
        r.speedup = j.at("clock").at("speedup").get<double>();
        r.started_us = j.at("started_us").get<int64_t>();
        r.ended_us = j.at("ended_us").get<int64_t>();
        r.wall_clock_seconds = j.at("wall_clock_seconds").get<double>();
        const auto& c = j.at("counters");
        r.counters.total_ops = c.at("total_ops").get<uint64_t>();
        r.counters.successful_ops = c.at("successful_ops").get<uint64_t>();
        r.counters.total_reads = c.at("total_reads").get<uint64_t>();
        r.counters.correct_reads = c.at("correct_reads").get<uint64_t>();
        r.counters.consistent_reads = c.at("consistent_reads").get<uint64_t>();
        r.counters.unreachable_keys = c.at("unreachable_keys").get<uint64_t>();
        r.counters.egress_bytes = c.at("egress_bytes").get<uint64_t>();
        r.scenario_data_json = j.at("scenario_data").dump();
        r.sealed = j.at("sealed").get<bool>();
        for (const auto& o : j.at("operations")) {
            OpRecord op;
            op.worker = o.at("w").get<uint32_t>();
            op.seq = o.at("q").get<uint64_t>();
            op.kind = o.at("k").get<std::string>();
            op.start_us = o.at("s").get<int64_t>();
            op.end_us = o.at("e").get<int64_t>();
            op.ok = o.at("ok").get<bool>();
            op.error_class = o.value("err", "");
            op.version = o.value("v", uint32_t{0});
            op.key = o.value("key", "");
            op.rows = o.value("rows", uint64_t{0});
            op.bytes = o.value("bytes", uint64_t{0});
            r.operations.push_back(std::move(op));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("report field error: ") + e.what());
    }
    return r;
}

Counters recompute_counters(const ScenarioReport& report) {
    Counters c;
    std::map<uint32_t, uint32_t> newest_version_seen; // per worker, read path
    for (const auto& op : report.operations) {
        c.total_ops++;
        if (op.ok) c.successful_ops++;
        if (op.error_class == "unavailable") c.unreachable_keys++;
        c.egress_bytes += op.bytes;
        if (op.kind == "read") {
            c.total_reads++;
            auto& newest = newest_version_seen[op.worker];
            if (op.ok && op.version >= newest) {
                c.consistent_reads++;
                newest = op.version;
            } else if (op.ok) {
                // regression: an older version served after a newer one
            } else {
                // failed reads are neither consistent nor counted correct
            }
        } else if (op.kind == "durability_check") {
            c.total_reads++;
            if (op.ok) {
                c.correct_reads++;
                c.consistent_reads++;
            }
        }
    }
    return c;
}

} // namespace nhb::scenario
