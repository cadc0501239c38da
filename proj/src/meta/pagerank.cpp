#include "meta/pagerank.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace nhb::meta {

CitationGraph::CitationGraph(std::vector<std::string> node_ids) : ids_(std::move(node_ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    edges_.resize(ids_.size());
}

void CitationGraph::add_edge(const std::string& citing, const std::string& cited, double weight) {
    if (weight <= 0.0) throw ArgumentError("citation weight must be positive");
    edges_[index_of(citing)][index_of(cited)] += weight;
}

uint32_t CitationGraph::index_of(const std::string& id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) throw ArgumentError("unknown graph node: " + id);
    return static_cast<uint32_t>(it - ids_.begin());
}

std::map<std::string, double> compute_pagerank(const CitationGraph& graph,
                                               const PagerankParams& params) {
    if (!(params.damping > 0.0 && params.damping < 1.0))
        throw ArgumentError("damping factor must lie in (0,1)");
    const size_t n = graph.node_count();
    if (n == 0) throw ArgumentError("pagerank needs at least one node");

    const double d = params.damping;
    std::vector<double> rank(n, 1.0 / static_cast<double>(n));
    std::vector<double> out_weight(n, 0.0);
    for (uint32_t u = 0; u < n; u++)
        for (const auto& [v, w] : graph.out_edges(u)) out_weight[u] += w;

    std::vector<double> next(n);
    for (uint32_t iter = 0; iter < params.max_iterations; iter++) {
        double dangling = 0.0;
        for (uint32_t u = 0; u < n; u++)
            if (out_weight[u] == 0.0) dangling += rank[u];
        const double base = (1.0 - d) / static_cast<double>(n) +
                            d * dangling / static_cast<double>(n);
        std::fill(next.begin(), next.end(), base);
        for (uint32_t u = 0; u < n; u++) {
            if (out_weight[u] == 0.0) continue;
            const double share = d * rank[u] / out_weight[u];
            for (const auto& [v, w] : graph.out_edges(u)) next[v] += share * w;
        }
        double delta = 0.0;
        for (uint32_t i = 0; i < n; i++) delta += std::abs(next[i] - rank[i]);
        rank.swap(next);
        if (delta < params.epsilon) break;
    }

    std::map<std::string, double> out;
    for (uint32_t i = 0; i < n; i++) out[graph.ids()[i]] = rank[i];
    return out;
}

} // namespace nhb::meta
