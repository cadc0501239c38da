#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nhb::meta {

// One indexable document: an article body+title, or a media transcript.
// Transcripts index exactly like articles and count toward the corpus
// document total; `owner_article` ties a transcript's matches back to the
// article that references the media.
struct Document {
    std::string id;            // article id or media id
    std::string owner_article; // equals id for article documents
    std::string text;
};

struct Posting {
    std::string doc;
    uint32_t tf = 0;
    bool operator==(const Posting&) const = default;
};

// Term -> postings inverted index with document frequencies. Weights follow
// tf * ln(N / df): a term present in every document carries weight zero.
class InvertedIndex {
public:
    void add_document(const std::string& doc_id, const std::vector<std::string>& tokens);

    uint64_t doc_count() const { return doc_count_; }
    uint32_t df(const std::string& term) const;
    double idf(const std::string& term) const; // ln(N / df), 0 for unknown terms
    double weight(const std::string& term, uint32_t tf) const;
    // Raw term frequency of a term in one document (0 when absent).
    uint32_t tf(const std::string& term, const std::string& doc_id) const;

    const std::map<std::string, std::vector<Posting>>& postings() const { return postings_; }
    const std::map<std::string, std::map<std::string, uint32_t>>& documents() const {
        return docs_;
    }

    // Full tf-idf vector of one document.
    std::map<std::string, double> tfidf_vector(const std::string& doc_id) const;

    // Union of two indexes over disjoint document sets; refreshes df and the
    // document count globally, so the result equals a from-scratch build.
    void merge(const InvertedIndex& other);

    uint64_t vocabulary_size() const { return postings_.size(); }

    bool operator==(const InvertedIndex&) const = default;

private:
    std::map<std::string, std::vector<Posting>> postings_; // sorted by doc within each term
    std::map<std::string, std::map<std::string, uint32_t>> docs_; // doc -> term -> tf
    uint64_t doc_count_ = 0;
};

// Builds an index over the given documents (tokenizer: lowercase, split on
// non-alphanumerics, drop tokens shorter than 2). An empty corpus yields an
// empty index; a document with no tokens still counts toward N.
InvertedIndex build_index(const std::vector<Document>& documents);

// Cosine similarity between two documents' tf-idf vectors under the given
// index (0 when either vector is zero).
double cosine_similarity(const InvertedIndex& index, const std::string& doc_a,
                         const std::string& doc_b);

} // namespace nhb::meta
