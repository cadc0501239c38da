#include "scenario/workload.hpp"

#include <cstdio>

#include "core/errors.hpp"
#include "gen/generator.hpp"

namespace nhb::scenario {

using query::QueryKind;
using query::QuerySpec;

WorkloadSampler::WorkloadSampler(const gen::CorpusManifest& manifest, Date virtual_now)
    : manifest_(manifest), now_(virtual_now) {}

Date WorkloadSampler::random_loaded_date(Rng& rng) const {
    const auto& days = manifest_.publish_days;
    return Date::from_days(days[rng.next_below(days.size())]);
}

namespace {
std::string formatted_id(char prefix, int width, uint64_t n) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%c%0*llu", prefix, width,
                  static_cast<unsigned long long>(n));
    return buf;
}
} // namespace

std::string WorkloadSampler::random_topic(Rng& rng) const {
    return formatted_id('t', 2, rng.next_below(manifest_.config.topics_total));
}
std::string WorkloadSampler::random_keyword(Rng& rng) const {
    return formatted_id('k', 5, rng.next_below(manifest_.config.keywords_total));
}
std::string WorkloadSampler::random_language(Rng& rng) const {
    return formatted_id('l', 2, rng.next_below(manifest_.config.languages_total));
}
std::string WorkloadSampler::random_country(Rng& rng) const {
    return formatted_id('c', 3, rng.next_below(manifest_.config.countries_total));
}

std::vector<QuerySpec> WorkloadSampler::generic_set(Rng& rng) const {
    const Date lo = Date::from_days(manifest_.publish_days.front());
    const Date hi = Date::from_days(manifest_.publish_days.back());
    std::vector<QuerySpec> set;

    set.push_back({.kind = QueryKind::Q1, .limit = 10});
    Date i2 = random_loaded_date(rng);
    set.push_back({.kind = QueryKind::Q2,
                   .interval_start = i2,
                   .interval_end = i2.plus_days(static_cast<int64_t>(rng.uniform_int(20, 120))),
                   .limit = 0});
    // Q3's journalist parameter: author ids grow with the corpus, so a low
    // index is always a loaded author; non-journalists legally yield empty
    // results.
    set.push_back({.kind = QueryKind::Q3,
                   .interval_start = lo,
                   .interval_end = hi,
                   .journalist_id = formatted_id('u', 5, rng.next_below(8)),
                   .limit = 0});
    set.push_back({.kind = QueryKind::Q4, .date = random_loaded_date(rng), .limit = 0});
    Date m = random_loaded_date(rng);
    set.push_back({.kind = QueryKind::Q5, .month = m.month, .year = m.year, .limit = 0});
    Date d6 = random_loaded_date(rng);
    set.push_back({.kind = QueryKind::Q6,
                   .day_of_year = d6.day_of_year(),
                   .year = d6.year,
                   .year2 = d6.year + 1,
                   .limit = 0});
    set.push_back({.kind = QueryKind::Q7, .date = random_loaded_date(rng), .limit = 0});
    set.push_back({.kind = QueryKind::Q8,
                   .lookback_days = static_cast<int>(rng.uniform_int(200, 2000)),
                   .topic_id = random_topic(rng),
                   .limit = 20});
    set.push_back({.kind = QueryKind::Q9, .limit = 100});
    set.push_back({.kind = QueryKind::Q10,
                   .interval_start = lo,
                   .interval_end = hi,
                   .min_journalists = 2,
                   .min_common_topics = 2,
                   .limit = 50});
    set.push_back({.kind = QueryKind::Q11, .limit = 0});
    // One common and one rare word, the famous/strange search-term mix.
    set.push_back({.kind = QueryKind::Q12,
                   .search_terms = {gen::vocabulary_word(
                                        static_cast<uint32_t>(rng.next_below(200))),
                                    gen::vocabulary_word(static_cast<uint32_t>(
                                        rng.uniform_int(2000, 15000)))},
                   .country_id = random_country(rng),
                   .limit = 20});
    // Q13's reference document: always the first article, which every slice
    // contains.
    set.push_back({.kind = QueryKind::Q13, .document_id = manifest_.article_id(0), .limit = 5});
    set.push_back({.kind = QueryKind::Q14,
                   .year = static_cast<int>(rng.uniform_int(1950, 1985)),
                   .limit = 100});
    return set;
}

QuerySpec WorkloadSampler::analytic(Rng& rng) const {
    switch (rng.next_below(4)) {
        case 0: return {.kind = QueryKind::A1};
        case 1: return {.kind = QueryKind::A2, .limit = 0};
        case 2: return {.kind = QueryKind::A3};
        default: return {.kind = QueryKind::A4};
    }
}

void pipeline_inputs(backend::SimBackend& backend, std::vector<meta::Document>& documents,
                     meta::CitationGraph& graph) {
    auto articles = backend.scan_articles();
    std::vector<std::string> ids;
    ids.reserve(articles.size());
    documents.clear();
    for (const auto& a : articles) {
        documents.push_back({a->id, a->id, a->title + " " + a->body});
        ids.push_back(a->id);
        for (const auto& m : a->media_refs)
            documents.push_back({m, a->id, backend.media(m)->transcript});
    }
    graph = meta::CitationGraph(ids);
    for (const auto& a : articles) {
        for (const auto& cited : a->citations) {
            // Citations to since-deleted articles fall out of the graph.
            try {
                graph.add_edge(a->id, cited);
            } catch (const ArgumentError&) {
            }
        }
    }
}

} // namespace nhb::scenario
