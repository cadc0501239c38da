#include "meta/index.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/text.hpp"

namespace nhb::meta {

void InvertedIndex::add_document(const std::string& doc_id,
                                 const std::vector<std::string>& tokens) {
    if (docs_.count(doc_id)) throw ConflictError("document already indexed: " + doc_id);
    auto& terms = docs_[doc_id]; // zero-token documents still occupy a slot
    for (const auto& t : tokens) terms[t]++;
    for (const auto& [term, tf] : terms) {
        auto& plist = postings_[term];
        plist.insert(std::upper_bound(plist.begin(), plist.end(), doc_id,
                                      [](const std::string& id, const Posting& p) {
                                          return id < p.doc;
                                      }),
                     Posting{doc_id, tf});
    }
    doc_count_++;
}

uint32_t InvertedIndex::df(const std::string& term) const {
    auto it = postings_.find(term);
    return it == postings_.end() ? 0 : static_cast<uint32_t>(it->second.size());
}

double InvertedIndex::idf(const std::string& term) const {
    uint32_t d = df(term);
    if (d == 0 || doc_count_ == 0) return 0.0;
    return std::log(static_cast<double>(doc_count_) / static_cast<double>(d));
}

double InvertedIndex::weight(const std::string& term, uint32_t tf) const {
    return static_cast<double>(tf) * idf(term);
}

uint32_t InvertedIndex::tf(const std::string& term, const std::string& doc_id) const {
    auto it = docs_.find(doc_id);
    if (it == docs_.end()) return 0;
    auto jt = it->second.find(term);
    return jt == it->second.end() ? 0 : jt->second;
}

std::map<std::string, double> InvertedIndex::tfidf_vector(const std::string& doc_id) const {
    std::map<std::string, double> out;
    auto it = docs_.find(doc_id);
    if (it == docs_.end()) return out;
    for (const auto& [term, tf] : it->second) out[term] = weight(term, tf);
    return out;
}

void InvertedIndex::merge(const InvertedIndex& other) {
    for (const auto& [doc, terms] : other.docs_) {
        if (docs_.count(doc)) throw ConflictError("document already indexed: " + doc);
        docs_[doc] = terms;
        for (const auto& [term, tf] : terms) {
            auto& plist = postings_[term];
            plist.insert(std::upper_bound(plist.begin(), plist.end(), doc,
                                          [](const std::string& id, const Posting& p) {
                                              return id < p.doc;
                                          }),
                         Posting{doc, tf});
        }
    }
    doc_count_ += other.doc_count_;
}

InvertedIndex build_index(const std::vector<Document>& documents) {
    InvertedIndex index;
    for (const auto& d : documents) index.add_document(d.id, tokenize(d.text));
    return index;
}

double cosine_similarity(const InvertedIndex& index, const std::string& doc_a,
                         const std::string& doc_b) {
    auto va = index.tfidf_vector(doc_a);
    auto vb = index.tfidf_vector(doc_b);
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (const auto& [term, w] : va) {
        na += w * w;
        auto it = vb.find(term);
        if (it != vb.end()) dot += w * it->second;
    }
    for (const auto& [term, w] : vb) nb += w * w;
    if (na == 0.0 || nb == 0.0) return 0.0;
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

} // namespace nhb::meta
