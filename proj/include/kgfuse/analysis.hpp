#pragma once
// Graph statistics and centrality: degree moments and histograms,
// PageRank with uniform dangling-mass redistribution, and HITS.
// Parallel edges are counted individually throughout (multigraph
// semantics), which is what makes avg_degree = 2|E|/|N| hold exactly.

#include <cmath>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "kgfuse/graph.hpp"
#include "kgfuse/relations.hpp"
#include "kgfuse/util.hpp"

namespace kgfuse {

inline double average_degree(size_t edge_count, size_t node_count) {
    if (node_count == 0) throw ValidationError("average degree of an empty graph");
    return 2.0 * static_cast<double>(edge_count) / static_cast<double>(node_count);
}

struct DegreeStats {
    size_t nodes = 0;
    size_t edges = 0;
    size_t relations = 0;
    double avg_degree = 0.0;
    double std_degree = 0.0;  // population standard deviation
};

struct StatsReport {
    DegreeStats total;
    // keyed by source tag; an edge with several sources counts toward each
    std::map<std::string, DegreeStats> per_source;
    std::map<size_t, size_t> in_degree_histogram;
    std::map<size_t, size_t> out_degree_histogram;
};

namespace detail {

inline DegreeStats stats_over(const std::vector<size_t>& degrees, size_t edges,
                              size_t relations) {
    DegreeStats s;
    s.nodes = degrees.size();
    s.edges = edges;
    s.relations = relations;
    s.avg_degree = average_degree(edges, degrees.size());
    double sq = 0.0;
    for (size_t d : degrees) {
        double diff = static_cast<double>(d) - s.avg_degree;
        sq += diff * diff;
    }
    s.std_degree = std::sqrt(sq / static_cast<double>(degrees.size()));
    return s;
}

}  // namespace detail

inline StatsReport degree_stats(const Graph& graph) {
    if (graph.node_count() == 0) throw ValidationError("degree statistics of an empty graph");
    StatsReport report;

    std::vector<size_t> degrees(graph.node_count());
    std::set<std::string> relations;
    for (size_t i = 0; i < graph.node_count(); ++i) degrees[i] = graph.degree(i);
    for (const Edge& e : graph.table().edges) relations.insert(e.relation);
    report.total = detail::stats_over(degrees, graph.edge_count(), relations.size());

    for (size_t i = 0; i < graph.node_count(); ++i) {
        ++report.in_degree_histogram[graph.in_edges(i).size()];
        ++report.out_degree_histogram[graph.out_edges(i).size()];
    }

    // per-source subgraphs
    std::map<std::string, std::unordered_map<size_t, size_t>> src_degree;
    std::map<std::string, size_t> src_edges;
    std::map<std::string, std::set<std::string>> src_relations;
    for (size_t ei = 0; ei < graph.edge_count(); ++ei) {
        const Edge& e = graph.edge(ei);
        auto [u, v] = graph.edge_endpoints(ei);
        for (const std::string& s : e.sources) {
            ++src_edges[s];
            ++src_degree[s][u];
            ++src_degree[s][v];
            src_relations[s].insert(e.relation);
        }
    }
    for (const auto& [s, degs] : src_degree) {
        std::vector<size_t> d;
        d.reserve(degs.size());
        for (const auto& [node, deg] : degs) d.push_back(deg);
        report.per_source[s] = detail::stats_over(d, src_edges[s], src_relations[s].size());
    }
    return report;
}

struct CentralityResult {
    std::vector<double> scores;  // indexed like graph nodes
    bool converged = false;
    size_t iterations = 0;
};

inline CentralityResult pagerank(const Graph& graph, double damping = 0.85,
                                 double tol = 1e-9, size_t max_iter = 100) {
    if (graph.node_count() == 0) throw ValidationError("pagerank of an empty graph");
    if (!(damping > 0.0 && damping < 1.0)) {
        throw ValidationError("pagerank damping must be in (0, 1)");
    }
    const size_t n = graph.node_count();
    CentralityResult result;
    result.scores.assign(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n);
    for (size_t iter = 0; iter < max_iter; ++iter) {
        double dangling = 0.0;
        for (size_t u = 0; u < n; ++u) {
            if (graph.out_edges(u).empty()) dangling += result.scores[u];
        }
        const double base = (1.0 - damping) / static_cast<double>(n) +
                            damping * dangling / static_cast<double>(n);
        std::fill(next.begin(), next.end(), base);
        for (size_t u = 0; u < n; ++u) {
            const auto& out = graph.out_edges(u);
            if (out.empty()) continue;
            double share = damping * result.scores[u] / static_cast<double>(out.size());
            for (size_t ei : out) next[graph.edge_endpoints(ei).second] += share;
        }
        double change = 0.0;
        for (size_t i = 0; i < n; ++i) change += std::fabs(next[i] - result.scores[i]);
        result.scores.swap(next);
        result.iterations = iter + 1;
        if (change < tol) {
            result.converged = true;
            break;
        }
    }
    return result;
}

struct HitsResult {
    std::vector<double> hubs;
    std::vector<double> authorities;
    bool converged = false;
    size_t iterations = 0;
};

inline HitsResult hits(const Graph& graph, double tol = 1e-9, size_t max_iter = 100) {
    if (graph.edge_count() == 0) throw ValidationError("hits requires at least one edge");
    const size_t n = graph.node_count();
    HitsResult result;
    result.hubs.assign(n, 1.0);
    result.authorities.assign(n, 1.0);
    auto l2_normalize = [](std::vector<double>& v) {
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (norm > 0.0) {
            for (double& x : v) x /= norm;
        }
    };
    l2_normalize(result.hubs);
    l2_normalize(result.authorities);
    std::vector<double> new_auth(n), new_hub(n);
    for (size_t iter = 0; iter < max_iter; ++iter) {
        std::fill(new_auth.begin(), new_auth.end(), 0.0);
        for (size_t u = 0; u < n; ++u) {
            for (size_t ei : graph.out_edges(u)) {
                new_auth[graph.edge_endpoints(ei).second] += result.hubs[u];
            }
        }
        l2_normalize(new_auth);
        std::fill(new_hub.begin(), new_hub.end(), 0.0);
        for (size_t u = 0; u < n; ++u) {
            for (size_t ei : graph.out_edges(u)) {
                new_hub[u] += new_auth[graph.edge_endpoints(ei).second];
            }
        }
        l2_normalize(new_hub);
        double change = 0.0;
        for (size_t i = 0; i < n; ++i) {
            change += std::fabs(new_auth[i] - result.authorities[i]) +
                      std::fabs(new_hub[i] - result.hubs[i]);
        }
        result.authorities = new_auth;
        result.hubs = new_hub;
        result.iterations = iter + 1;
        if (change < tol) {
            result.converged = true;
            break;
        }
    }
    return result;
}

struct RankedNode {
    NodeId node;
    std::string label;
    double score;
};

// Top scores in descending order, ties broken by node id.
inline std::vector<RankedNode> top_k(const Graph& graph, const std::vector<double>& scores,
                                     size_t k) {
    if (k < 1) throw ValidationError("top_k requires k >= 1");
    std::vector<size_t> order(graph.node_count());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return graph.node(a) < graph.node(b);
    });
    if (order.size() > k) order.resize(k);
    std::vector<RankedNode> out;
    out.reserve(order.size());
    for (size_t i : order) out.push_back({graph.node(i), graph.display_label(i), scores[i]});
    return out;
}

}  // namespace kgfuse
