#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nhb::meta {

// Citation graph over article ids. Edge weight is the citation multiplicity
// (an article listing the same reference twice contributes weight 2).
class CitationGraph {
public:
    CitationGraph() = default;
    // Node set is fixed up front; ids are sorted and deduplicated so scores
    // do not depend on construction order.
    explicit CitationGraph(std::vector<std::string> node_ids);

    void add_edge(const std::string& citing, const std::string& cited, double weight = 1.0);

    size_t node_count() const { return ids_.size(); }
    const std::vector<std::string>& ids() const { return ids_; }
    // Outgoing edges of node index u as (target index, weight), ascending.
    const std::map<uint32_t, double>& out_edges(uint32_t u) const { return edges_[u]; }
    uint32_t index_of(const std::string& id) const;

private:
    std::vector<std::string> ids_;
    std::vector<std::map<uint32_t, double>> edges_;
};

struct PagerankParams {
    double damping = 0.85;
    double epsilon = 1e-8; // L1 stopping tolerance
    uint32_t max_iterations = 100;
};

// Power iteration on the weighted transition matrix with uniform teleport;
// dangling mass redistributes uniformly. Scores sum to 1 (within float
// accumulation error). Throws ArgumentError when damping is outside (0,1)
// or the graph is empty.
std::map<std::string, double> compute_pagerank(const CitationGraph& graph,
                                               const PagerankParams& params = {});

} // namespace nhb::meta
