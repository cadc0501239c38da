#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "meta/index.hpp"
#include "meta/lda.hpp"
#include "meta/pagerank.hpp"
#include "model/entities.hpp"

namespace nhb::meta {

struct PipelineParams {
    PagerankParams pagerank;
    LdaParams lda;
    bool run_lda = true; // analytics corpora that never read topic mixtures can skip it
};

// Batch metadata extraction over the loaded corpus: tf-idf index, weighted
// pagerank over the citation graph, and topic mixtures. State is rebuilt
// deterministically; the incremental path merges new documents into the
// index and recomputes graph- and corpus-global results over the union,
// matching a from-scratch build exactly.
class MetadataPipeline {
public:
    void build(const std::vector<Document>& documents, const CitationGraph& graph,
               const PipelineParams& params);

    // Extends the corpus. `new_documents` must be disjoint from the already
    // indexed set; `full_graph` spans the union. Throws StateError when no
    // build has happened yet.
    void incremental(const std::vector<Document>& new_documents, const CitationGraph& full_graph);

    bool built() const { return built_; }
    const InvertedIndex& index() const;
    const std::map<std::string, model::MetadataRecord>& records() const;
    const std::map<std::string, double>& pagerank() const;

    // Per-article search scores for a term list: sum of tf-idf weights over
    // the article's own document and its transcripts. Articles appear iff at
    // least one query term occurs in them.
    std::map<std::string, double> score_articles(const std::vector<std::string>& terms) const;

    double document_similarity(const std::string& article_a, const std::string& article_b) const;

    // Persistence: one canonical XML record per article plus a parameters
    // marker. The writer/reader signatures mirror the corpus sink.
    void persist(const std::function<void(const std::string&, const std::string&)>& write) const;
    // Restores records (pagerank, topic mixtures) and rebuilds the index from
    // the given documents. Returns false when no marker is present.
    bool load(const std::vector<Document>& documents,
              const std::function<std::optional<std::string>(const std::string&)>& read);

    // Content digest over records, for state-comparison tests.
    std::string state_digest() const;

private:
    void rebuild_records();

    bool built_ = false;
    PipelineParams params_;
    InvertedIndex index_;
    std::vector<Document> documents_; // full set, kept for recompute
    std::map<std::string, std::string> doc_owner_;
    std::map<std::string, double> pagerank_;
    std::optional<TopicModelState> topics_;
    std::map<std::string, model::MetadataRecord> records_;
};

// Helper shared with the verifier: metadata record file path for an article.
std::string metadata_path(const std::string& article_id);
inline constexpr const char* kPipelineMarkerPath = "metadata/_pipeline.json";

} // namespace nhb::meta
