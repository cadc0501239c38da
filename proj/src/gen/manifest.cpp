#include "gen/manifest.hpp"

#include <cmath>
#include <cstdio>

#include "core/errors.hpp"
#include "json.hpp"

namespace nhb::gen {

using nlohmann::json;

std::string CorpusManifest::article_id(uint64_t index) const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "a%07llu", static_cast<unsigned long long>(index));
    return buf;
}

void CorpusManifest::rebuild_cumulative() {
    cumulative_.assign(article_count + 1, 0);
    cumulative_[0] = preamble_bytes;
    for (uint64_t i = 0; i < article_count; i++)
        cumulative_[i + 1] = cumulative_[i] + bundle_bytes[i];
}

uint64_t CorpusManifest::bytes_before(uint64_t index) const {
    return cumulative_.at(index);
}

void CorpusManifest::check() const {
    if (publish_days.size() != article_count || bundle_bytes.size() != article_count)
        throw InvariantError("manifest arrays do not match the article count");
    uint64_t sum = preamble_bytes;
    for (uint64_t b : bundle_bytes) sum += b;
    if (sum != total_bytes) throw InvariantError("manifest slice bytes do not sum to total");
    for (uint64_t i = 1; i < article_count; i++)
        if (publish_days[i] < publish_days[i - 1])
            throw InvariantError("manifest publish dates are not monotone");
    uint64_t expected_first = 0, slice_sum = 0;
    for (const auto& s : slices) {
        if (s.first_article != expected_first)
            throw InvariantError("manifest slices are not contiguous");
        expected_first = s.last_article + 1;
        slice_sum += s.bytes;
    }
    if (article_count > 0 && (expected_first != article_count || slice_sum != total_bytes))
        throw InvariantError("manifest slices do not cover the corpus");
}

std::string CorpusManifest::to_json() const {
    json j;
    j["schema_version"] = 1;
    j["config"] = json::parse(config.to_json());
    j["total_bytes"] = total_bytes;
    j["preamble_bytes"] = preamble_bytes;
    j["article_count"] = article_count;
    j["per_entity_counts"] = per_entity_counts;
    j["publish_days"] = publish_days;
    j["bundle_bytes"] = bundle_bytes;
    json slist = json::array();
    for (const auto& s : slices) {
        slist.push_back({{"index", s.index},
                         {"first_article", s.first_article},
                         {"last_article", s.last_article},
                         {"bytes", s.bytes}});
    }
    j["slices"] = slist;
    return j.dump(1);
}

CorpusManifest CorpusManifest::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid manifest json: ") + e.what());
    }
    CorpusManifest m;
    try {
        m.config = GeneratorConfig::from_json(j.at("config").dump());
        m.total_bytes = j.at("total_bytes").get<uint64_t>();
        m.preamble_bytes = j.at("preamble_bytes").get<uint64_t>();
        m.article_count = j.at("article_count").get<uint64_t>();
        m.per_entity_counts =
            j.at("per_entity_counts").get<std::map<std::string, uint64_t>>();
        m.publish_days = j.at("publish_days").get<std::vector<int64_t>>();
        m.bundle_bytes = j.at("bundle_bytes").get<std::vector<uint64_t>>();
        for (const auto& s : j.at("slices")) {
            m.slices.push_back({s.at("index").get<uint64_t>(),
                                s.at("first_article").get<uint64_t>(),
                                s.at("last_article").get<uint64_t>(),
                                s.at("bytes").get<uint64_t>()});
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("manifest field error: ") + e.what());
    }
    m.rebuild_cumulative();
    m.check();
    return m;
}

uint64_t Slice::byte_size() const {
    // The preamble belongs to the slice that starts the corpus.
    uint64_t start = includes_preamble() ? 0 : manifest->bytes_before(first_article);
    return manifest->bytes_before(end_article) - start;
}

namespace {

// Smallest k whose cumulative byte prefix exceeds `target`. Bundle k is the
// one the byte position `target` falls into.
uint64_t cut_point(const CorpusManifest& m, double fraction) {
    const double target = fraction * static_cast<double>(m.total_bytes);
    uint64_t lo = 0, hi = m.article_count;
    while (lo < hi) {
        uint64_t mid = lo + (hi - lo) / 2;
        if (static_cast<double>(m.bytes_before(mid + 1)) <= target)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

} // namespace

Slice take_slice(const CorpusManifest& manifest, double from_fraction, double to_fraction) {
    if (!(from_fraction >= 0.0) || !(to_fraction <= 1.0) || !(from_fraction < to_fraction))
        throw ArgumentError("slice fractions must satisfy 0 <= from < to <= 1");
    Slice s;
    s.manifest = &manifest;
    s.first_article = cut_point(manifest, from_fraction);
    s.end_article = to_fraction >= 1.0 ? manifest.article_count : cut_point(manifest, to_fraction);
    return s;
}

Slice next_slice(const CorpusManifest& manifest, double already_loaded_fraction,
                 double delta_fraction) {
    if (already_loaded_fraction < 0.0 || delta_fraction <= 0.0)
        throw ArgumentError("fractions must be non-negative (delta positive)");
    if (already_loaded_fraction >= 1.0)
        throw NoExtraDataError("no extra data available: the whole corpus is already loaded");
    if (already_loaded_fraction + delta_fraction > 1.0 + 1e-12)
        throw NoExtraDataError("no extra data available: corpus holds only " +
                               std::to_string(1.0 - already_loaded_fraction) +
                               " of the requested fraction");
    Slice s = take_slice(manifest, already_loaded_fraction,
                         already_loaded_fraction + delta_fraction);
    if (s.article_count() == 0)
        throw NoExtraDataError("no extra data available: slice is empty at this scale");
    return s;
}

Slice slice_by_range(const CorpusManifest& manifest, uint64_t first, uint64_t end) {
    if (first > end || end > manifest.article_count)
        throw ArgumentError("article range out of bounds");
    return Slice{&manifest, first, end};
}

} // namespace nhb::gen
