#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "meta/index.hpp"

namespace nhb::meta {

struct LdaParams {
    uint32_t topics = 8; // K
    double alpha = 0.0;  // 0 = use 50 / K
    double beta = 0.01;
    uint32_t iterations = 200;
    uint64_t seed = 42;

    double effective_alpha() const { return alpha > 0.0 ? alpha : 50.0 / topics; }
};

// Fitted topic model: per-document topic mixtures and per-topic word
// distributions. Rows are normalized (sum to 1).
struct TopicModelState {
    LdaParams params;
    std::vector<std::string> doc_ids;         // sorted
    std::vector<std::string> vocabulary;      // sorted terms
    std::vector<std::vector<double>> theta;   // doc x topic
    std::vector<std::vector<double>> phi;     // topic x word

    const std::vector<double>& doc_distribution(const std::string& doc_id) const;
    // Topic with the largest mixture share for a document.
    uint32_t dominant_topic(const std::string& doc_id) const;
};

// Collapsed Gibbs sampling, deterministic for a fixed seed: documents are
// visited in id order, tokens in position order, and all randomness comes
// from one seeded generator. Throws ArgumentError when K < 2, K exceeds the
// vocabulary size, or no documents are given.
TopicModelState extract_topics(const std::vector<Document>& documents, const LdaParams& params);

} // namespace nhb::meta
