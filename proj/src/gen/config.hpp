#pragma once

#include <cstdint>
#include <string>

#include "core/date.hpp"

namespace nhb::gen {

// Knobs of the synthetic corpus. The corpus is a pure function of this
// struct: same config, byte-identical output. Defaults target desk scale;
// docs/config-reference.md discusses how to pick gap/window so a given SF
// covers the dates a workload queries.
struct GeneratorConfig {
    uint64_t seed = 42;
    double scale_factor_gb = 0.01; // SF: target corpus size in GiB
    Date window_start{1971, 1, 1}; // 40-year default publication window
    Date window_end{2010, 12, 31};

    uint32_t vocabulary_size = 20000; // rounded up to a multiple of topics_total
    double zipf_exponent = 1.0;
    // Share of body/transcript tokens drawn from the article topic's own
    // vocabulary block (1.0 = fully disjoint per-topic vocabularies).
    double topic_mixing = 0.3;

    uint32_t authors_per_gb = 5000;
    uint32_t topics_total = 32;
    uint32_t keywords_total = 400;
    uint32_t languages_total = 12; // at most 24
    uint32_t countries_total = 24; // at most 48
    double media_ratio = 0.25;     // fraction of articles carrying media

    // Publication dates advance by Exp(mean) hours per article; dates clamp
    // at window_end once the window is exhausted.
    double mean_article_gap_hours = 12.0;

    uint64_t slice_target_bytes = 1024 * 1024; // manifest slice granularity
    // Testing override: when nonzero, emit exactly this many articles instead
    // of filling scale_factor_gb.
    uint64_t article_count_cap = 0;

    uint64_t target_bytes() const;
    std::string to_json() const;
    static GeneratorConfig from_json(const std::string& json);

    // Throws ConfigError on out-of-range values.
    void validate() const;
};

} // namespace nhb::gen
