#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "gen/manifest.hpp"
#include "model/entities.hpp"

namespace nhb::gen {

// Receives every corpus file as it is produced, in a prefix-stable order:
// preamble catalogs first, then per-article bundles in publish-date order.
struct CorpusSink {
    virtual ~CorpusSink() = default;
    virtual void emit(const std::string& relative_path, std::string_view bytes) = 0;
};

// Writes files under a root directory (creates subdirectories).
class DirSink : public CorpusSink {
public:
    explicit DirSink(std::string root);
    void emit(const std::string& relative_path, std::string_view bytes) override;

private:
    std::string root_;
};

// Keeps everything in memory; doubles as a file provider for loading.
class MemorySink : public CorpusSink {
public:
    void emit(const std::string& relative_path, std::string_view bytes) override;
    const std::map<std::string, std::string>& files() const { return files_; }
    std::string digest() const; // order-insensitive content digest

private:
    std::map<std::string, std::string> files_;
};

// Produces the corpus described by `config` into `sink` and returns its
// manifest. Deterministic: corpus bytes are a pure function of the config,
// and any prefix of the bundle stream is independent of scale_factor_gb
// (larger SF extends, never rewrites). Emitted bytes land within 1% of
// SF * 2^30 for targets comfortably above the bundle size; throws
// ConfigError when SF cannot hold one article.
CorpusManifest generate_corpus(const GeneratorConfig& config, CorpusSink& sink);

// Convenience wrapper: generate into a directory and write manifest.json.
CorpusManifest generate_to_directory(const GeneratorConfig& config, const std::string& root);

// Canonical relative paths inside a corpus directory.
namespace paths {
std::string article(std::string_view id);
std::string author(std::string_view id);
std::string topic(std::string_view id);
std::string keyword(std::string_view id);
std::string language(std::string_view id);
std::string country(std::string_view id);
std::string date(const Date& d);
std::string media_xml(std::string_view id);
std::string media_payload(std::string_view id);
} // namespace paths

// The deterministic vocabulary word for an index (identical across seeds);
// index 0 is the most frequent word at any Zipf exponent.
std::string vocabulary_word(uint32_t index);

// Standalone synthetic article factory used by mutation workloads: produces
// a small self-consistent article referencing the given catalog ids.
model::Article make_synthetic_article(uint64_t seed, const std::string& id,
                                      const std::string& author_id, const std::string& topic_id,
                                      const std::string& keyword_id,
                                      const std::string& language_id,
                                      const std::string& country_id, const Date& publish_date);

} // namespace nhb::gen
