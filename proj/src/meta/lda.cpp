#include "meta/lda.hpp"

#include <algorithm>

#include "core/errors.hpp"
#include "core/rng.hpp"
#include "core/text.hpp"

namespace nhb::meta {

const std::vector<double>& TopicModelState::doc_distribution(const std::string& doc_id) const {
    auto it = std::lower_bound(doc_ids.begin(), doc_ids.end(), doc_id);
    if (it == doc_ids.end() || *it != doc_id)
        throw ArgumentError("document not part of the topic model: " + doc_id);
    return theta[static_cast<size_t>(it - doc_ids.begin())];
}

uint32_t TopicModelState::dominant_topic(const std::string& doc_id) const {
    const auto& dist = doc_distribution(doc_id);
    return static_cast<uint32_t>(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

TopicModelState extract_topics(const std::vector<Document>& documents, const LdaParams& params) {
    if (documents.empty()) throw ArgumentError("topic extraction needs at least one document");
    if (params.topics < 2) throw ArgumentError("topic count must be >= 2");

    // Stable document order, then integer-encode the token streams.
    std::vector<const Document*> docs;
    docs.reserve(documents.size());
    for (const auto& d : documents) docs.push_back(&d);
    std::sort(docs.begin(), docs.end(),
              [](const Document* a, const Document* b) { return a->id < b->id; });

    std::map<std::string, uint32_t> term_index;
    std::vector<std::vector<uint32_t>> token_streams(docs.size());
    for (size_t d = 0; d < docs.size(); d++) {
        for (const auto& tok : tokenize(docs[d]->text)) {
            auto [it, fresh] = term_index.emplace(tok, static_cast<uint32_t>(term_index.size()));
            token_streams[d].push_back(it->second);
        }
    }
    const uint32_t V = static_cast<uint32_t>(term_index.size());
    const uint32_t K = params.topics;
    if (K > V)
        throw ArgumentError("topic count " + std::to_string(K) +
                            " exceeds the vocabulary size " + std::to_string(V));

    const double alpha = params.effective_alpha();
    const double beta = params.beta;
    const size_t D = docs.size();

    std::vector<std::vector<uint32_t>> assignment(D);
    std::vector<std::vector<uint32_t>> n_dk(D, std::vector<uint32_t>(K, 0));
    std::vector<std::vector<uint32_t>> n_kw(K, std::vector<uint32_t>(V, 0));
    std::vector<uint64_t> n_k(K, 0);

    Rng rng(derive_seed(params.seed, "lda"));
    for (size_t d = 0; d < D; d++) {
        assignment[d].resize(token_streams[d].size());
        for (size_t i = 0; i < token_streams[d].size(); i++) {
            uint32_t z = static_cast<uint32_t>(rng.next_below(K));
            assignment[d][i] = z;
            n_dk[d][z]++;
            n_kw[z][token_streams[d][i]]++;
            n_k[z]++;
        }
    }

    std::vector<double> weights(K);
    for (uint32_t iter = 0; iter < params.iterations; iter++) {
        for (size_t d = 0; d < D; d++) {
            for (size_t i = 0; i < token_streams[d].size(); i++) {
                const uint32_t w = token_streams[d][i];
                const uint32_t old_z = assignment[d][i];
                n_dk[d][old_z]--;
                n_kw[old_z][w]--;
                n_k[old_z]--;
                double total = 0.0;
                for (uint32_t k = 0; k < K; k++) {
                    double p = (n_dk[d][k] + alpha) * (n_kw[k][w] + beta) /
                               (static_cast<double>(n_k[k]) + beta * V);
                    total += p;
                    weights[k] = total;
                }
                const double u = rng.next_double() * total;
                uint32_t z = 0;
                while (z + 1 < K && weights[z] < u) z++;
                assignment[d][i] = z;
                n_dk[d][z]++;
                n_kw[z][w]++;
                n_k[z]++;
            }
        }
    }

    TopicModelState state;
    state.params = params;
    state.params.alpha = alpha;
    state.doc_ids.reserve(D);
    for (const auto* d : docs) state.doc_ids.push_back(d->id);
    state.vocabulary.resize(V);
    for (const auto& [term, idx] : term_index) state.vocabulary[idx] = term;

    state.theta.assign(D, std::vector<double>(K, 0.0));
    for (size_t d = 0; d < D; d++) {
        const double denom = static_cast<double>(token_streams[d].size()) + K * alpha;
        for (uint32_t k = 0; k < K; k++)
            state.theta[d][k] = (n_dk[d][k] + alpha) / denom;
    }
    state.phi.assign(K, std::vector<double>(V, 0.0));
    for (uint32_t k = 0; k < K; k++) {
        const double denom = static_cast<double>(n_k[k]) + beta * V;
        for (uint32_t w = 0; w < V; w++) state.phi[k][w] = (n_kw[k][w] + beta) / denom;
    }
    return state;
}

} // namespace nhb::meta
