#include "gen/config.hpp"

#include <cmath>

#include "core/errors.hpp"
#include "json.hpp"

namespace nhb::gen {

using nlohmann::json;

uint64_t GeneratorConfig::target_bytes() const {
    return static_cast<uint64_t>(std::llround(scale_factor_gb * 1073741824.0));
}

void GeneratorConfig::validate() const {
    if (scale_factor_gb <= 0.0) throw ConfigError("scale factor must be > 0");
    if (window_start >= window_end) throw ConfigError("time window must be non-empty");
    if (vocabulary_size < 100) throw ConfigError("vocabulary size must be >= 100");
    if (zipf_exponent <= 0.0) throw ConfigError("zipf exponent must be > 0");
    if (topic_mixing < 0.0 || topic_mixing > 1.0)
        throw ConfigError("topic mixing must lie in [0,1]");
    if (topics_total < 1 || topics_total > vocabulary_size)
        throw ConfigError("topics total must lie in [1, vocabulary size]");
    if (keywords_total < 1) throw ConfigError("keywords total must be >= 1");
    if (languages_total < 1 || languages_total > 24)
        throw ConfigError("languages total must lie in [1,24]");
    if (countries_total < 1 || countries_total > 48)
        throw ConfigError("countries total must lie in [1,48]");
    if (media_ratio < 0.0 || media_ratio > 1.0) throw ConfigError("media ratio must lie in [0,1]");
    if (mean_article_gap_hours <= 0.0) throw ConfigError("article gap must be > 0");
    if (authors_per_gb < 1) throw ConfigError("authors per GB must be >= 1");
    if (slice_target_bytes < 4096) throw ConfigError("slice target bytes must be >= 4096");
}

std::string GeneratorConfig::to_json() const {
    json j;
    j["seed"] = seed;
    j["scale_factor_gb"] = scale_factor_gb;
    j["window_start"] = window_start.iso();
    j["window_end"] = window_end.iso();
    j["vocabulary_size"] = vocabulary_size;
    j["zipf_exponent"] = zipf_exponent;
    j["topic_mixing"] = topic_mixing;
    j["authors_per_gb"] = authors_per_gb;
    j["topics_total"] = topics_total;
    j["keywords_total"] = keywords_total;
    j["languages_total"] = languages_total;
    j["countries_total"] = countries_total;
    j["media_ratio"] = media_ratio;
    j["mean_article_gap_hours"] = mean_article_gap_hours;
    j["slice_target_bytes"] = slice_target_bytes;
    j["article_count_cap"] = article_count_cap;
    return j.dump(2);
}

GeneratorConfig GeneratorConfig::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid generator config json: ") + e.what());
    }
    GeneratorConfig c;
    try {
        c.seed = j.at("seed").get<uint64_t>();
        c.scale_factor_gb = j.at("scale_factor_gb").get<double>();
        c.window_start = Date::parse(j.at("window_start").get<std::string>());
        c.window_end = Date::parse(j.at("window_end").get<std::string>());
        c.vocabulary_size = j.at("vocabulary_size").get<uint32_t>();
        c.zipf_exponent = j.at("zipf_exponent").get<double>();
        c.topic_mixing = j.at("topic_mixing").get<double>();
        c.authors_per_gb = j.at("authors_per_gb").get<uint32_t>();
        c.topics_total = j.at("topics_total").get<uint32_t>();
        c.keywords_total = j.at("keywords_total").get<uint32_t>();
        c.languages_total = j.at("languages_total").get<uint32_t>();
        c.countries_total = j.at("countries_total").get<uint32_t>();
        c.media_ratio = j.at("media_ratio").get<double>();
        c.mean_article_gap_hours = j.at("mean_article_gap_hours").get<double>();
        c.slice_target_bytes = j.at("slice_target_bytes").get<uint64_t>();
        c.article_count_cap = j.value("article_count_cap", uint64_t{0});
    } catch (const json::exception& e) {
        throw ConfigError(std::string("generator config field error: ") + e.what());
    }
    c.validate();
    return c;
}

} // namespace nhb::gen
