#include "meta/pipeline.hpp"

#include <algorithm>

#include "core/digest.hpp"
#include "core/errors.hpp"
#include "json.hpp"
#include "model/xml_io.hpp"

namespace nhb::meta {

using nlohmann::json;

std::string metadata_path(const std::string& article_id) {
    return "metadata/" + article_id + ".xml";
}

void MetadataPipeline::build(const std::vector<Document>& documents, const CitationGraph& graph,
                             const PipelineParams& params) {
    params_ = params;
    documents_ = documents;
    std::sort(documents_.begin(), documents_.end(),
              [](const Document& a, const Document& b) { return a.id < b.id; });
    doc_owner_.clear();
    for (const auto& d : documents_) doc_owner_[d.id] = d.owner_article;
    index_ = build_index(documents_);
    pagerank_ = graph.node_count() > 0 ? compute_pagerank(graph, params_.pagerank)
                                       : std::map<std::string, double>{};
    if (params_.run_lda && !documents_.empty())
        topics_ = extract_topics(documents_, params_.lda);
    else
        topics_.reset();
    built_ = true;
    rebuild_records();
}

void MetadataPipeline::incremental(const std::vector<Document>& new_documents,
                                   const CitationGraph& full_graph) {
    if (!built_) throw StateError("metadata pipeline has no state to extend; run a build first");
    InvertedIndex fresh = build_index(new_documents);
    index_.merge(fresh);
    documents_.insert(documents_.end(), new_documents.begin(), new_documents.end());
    std::sort(documents_.begin(), documents_.end(),
              [](const Document& a, const Document& b) { return a.id < b.id; });
    for (const auto& d : new_documents) doc_owner_[d.id] = d.owner_article;
    // Corpus-global results are recomputed over the union: document
    // frequencies, the citation graph and topic mixtures all shift when new
    // material arrives.
    pagerank_ = full_graph.node_count() > 0 ? compute_pagerank(full_graph, params_.pagerank)
                                            : std::map<std::string, double>{};
    if (params_.run_lda && !documents_.empty()) topics_ = extract_topics(documents_, params_.lda);
    rebuild_records();
}

const InvertedIndex& MetadataPipeline::index() const {
    if (!built_) throw StateError("index not built");
    return index_;
}

const std::map<std::string, model::MetadataRecord>& MetadataPipeline::records() const {
    if (!built_) throw StateError("index not built");
    return records_;
}

const std::map<std::string, double>& MetadataPipeline::pagerank() const {
    if (!built_) throw StateError("index not built");
    return pagerank_;
}

std::map<std::string, double> MetadataPipeline::score_articles(
    const std::vector<std::string>& terms) const {
    if (!built_) throw StateError("index not built");
    std::map<std::string, double> scores;
    for (const auto& term : terms) {
        auto it = index_.postings().find(term);
        if (it == index_.postings().end()) continue;
        for (const auto& posting : it->second) {
            auto owner = doc_owner_.find(posting.doc);
            const std::string& article =
                owner == doc_owner_.end() ? posting.doc : owner->second;
            scores[article] += index_.weight(term, posting.tf);
        }
    }
    return scores;
}

double MetadataPipeline::document_similarity(const std::string& article_a,
                                             const std::string& article_b) const {
    if (!built_) throw StateError("index not built");
    return cosine_similarity(index_, article_a, article_b);
}

void MetadataPipeline::rebuild_records() {
    records_.clear();
    for (const auto& d : documents_) {
        if (d.id != d.owner_article) continue; // transcripts fold into the index only
        model::MetadataRecord r;
        r.article_id = d.id;
        r.tfidf = index_.tfidf_vector(d.id);
        auto pr = pagerank_.find(d.id);
        r.pagerank = pr == pagerank_.end() ? 0.0 : pr->second;
        if (topics_) r.topic_distribution = topics_->doc_distribution(d.id);
        records_[d.id] = std::move(r);
    }
}

void MetadataPipeline::persist(
    const std::function<void(const std::string&, const std::string&)>& write) const {
    if (!built_) throw StateError("index not built");
    for (const auto& [id, record] : records_)
        write(metadata_path(id), model::serialize(record));
    json marker;
    marker["schema_version"] = 1;
    marker["documents"] = index_.doc_count();
    marker["articles"] = records_.size();
    marker["pagerank"] = {{"damping", params_.pagerank.damping},
                          {"epsilon", params_.pagerank.epsilon},
                          {"max_iterations", params_.pagerank.max_iterations}};
    marker["lda"] = {{"topics", params_.lda.topics},
                     {"alpha", params_.lda.effective_alpha()},
                     {"beta", params_.lda.beta},
                     {"iterations", params_.lda.iterations},
                     {"seed", params_.lda.seed},
                     {"enabled", params_.run_lda}};
    write(kPipelineMarkerPath, marker.dump(2));
}

bool MetadataPipeline::load(
    const std::vector<Document>& documents,
    const std::function<std::optional<std::string>(const std::string&)>& read) {
    auto marker_bytes = read(kPipelineMarkerPath);
    if (!marker_bytes) return false;
    json marker;
    try {
        marker = json::parse(*marker_bytes);
        params_.pagerank.damping = marker.at("pagerank").at("damping").get<double>();
        params_.pagerank.epsilon = marker.at("pagerank").at("epsilon").get<double>();
        params_.pagerank.max_iterations =
            marker.at("pagerank").at("max_iterations").get<uint32_t>();
        params_.lda.topics = marker.at("lda").at("topics").get<uint32_t>();
        params_.lda.alpha = marker.at("lda").at("alpha").get<double>();
        params_.lda.beta = marker.at("lda").at("beta").get<double>();
        params_.lda.iterations = marker.at("lda").at("iterations").get<uint32_t>();
        params_.lda.seed = marker.at("lda").at("seed").get<uint64_t>();
        params_.run_lda = marker.at("lda").at("enabled").get<bool>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid pipeline marker: ") + e.what());
    }
    documents_ = documents;
    std::sort(documents_.begin(), documents_.end(),
              [](const Document& a, const Document& b) { return a.id < b.id; });
    doc_owner_.clear();
    for (const auto& d : documents_) doc_owner_[d.id] = d.owner_article;
    index_ = build_index(documents_);
    records_.clear();
    pagerank_.clear();
    topics_.reset();
    for (const auto& d : documents_) {
        if (d.id != d.owner_article) continue;
        auto bytes = read(metadata_path(d.id));
        if (!bytes) throw StateError("metadata record missing for " + d.id);
        model::MetadataRecord r = model::parse_metadata(*bytes);
        pagerank_[r.article_id] = r.pagerank;
        records_[r.article_id] = std::move(r);
    }
    built_ = true;
    return true;
}

std::string MetadataPipeline::state_digest() const {
    if (!built_) throw StateError("index not built");
    Fnv1a64 d;
    for (const auto& [id, record] : records_) d.update(model::serialize(record));
    d.update(std::to_string(index_.doc_count()));
    d.update(std::to_string(index_.vocabulary_size()));
    return d.hex();
}

} // namespace nhb::meta
