#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gen/config.hpp"

namespace nhb::gen {

// Description of one generated corpus: enough to slice it and to cross-check
// a loaded store without regenerating. Persisted as manifest.json in the
// corpus directory.
struct CorpusManifest {
    GeneratorConfig config;
    uint64_t total_bytes = 0;
    uint64_t preamble_bytes = 0; // shared catalogs emitted before article 0
    uint64_t article_count = 0;
    std::map<std::string, uint64_t> per_entity_counts;
    // Parallel arrays indexed by article number. A "bundle" is the article
    // plus everything first emitted with it (author file, date file, media
    // descriptor and payload).
    std::vector<int64_t> publish_days;   // days since epoch
    std::vector<uint64_t> bundle_bytes;

    struct SliceBoundary {
        uint64_t index = 0;
        uint64_t first_article = 0;
        uint64_t last_article = 0; // inclusive
        uint64_t bytes = 0;
    };
    std::vector<SliceBoundary> slices;

    std::string to_json() const;
    static CorpusManifest from_json(const std::string& json);

    std::string article_id(uint64_t index) const;
    // Cumulative corpus bytes before bundle `index` (preamble included).
    uint64_t bytes_before(uint64_t index) const;
    void rebuild_cumulative(); // called after load
    // Consistency of slice boundaries and byte sums; throws on violation.
    void check() const;

private:
    std::vector<uint64_t> cumulative_;
};

// A contiguous run of article bundles, [first_article, end_article).
// Referentially closed once joined with all earlier slices: shared catalogs
// live in the preamble and authors/dates are emitted with the bundle that
// first references them.
struct Slice {
    const CorpusManifest* manifest = nullptr;
    uint64_t first_article = 0;
    uint64_t end_article = 0;

    uint64_t article_count() const { return end_article - first_article; }
    bool includes_preamble() const { return first_article == 0; }
    uint64_t byte_size() const;
};

// Byte-fraction slicing. The cut lands on a bundle boundary, so the returned
// byte size is within one bundle of (to - from) * total_bytes. Fraction
// ranges that do not overlap yield disjoint article sets.
Slice take_slice(const CorpusManifest& manifest, double from_fraction, double to_fraction);

// Continuation slicing for scale-up: returns only articles beyond
// already_loaded_fraction. Throws NoExtraDataError when the corpus is
// exhausted.
Slice next_slice(const CorpusManifest& manifest, double already_loaded_fraction,
                 double delta_fraction);

// Direct index-range slice (scenario 1 doubles by article count).
Slice slice_by_range(const CorpusManifest& manifest, uint64_t first, uint64_t end);

} // namespace nhb::gen
