#pragma once
// Indexed, immutable view over an edge table: node index, adjacency by edge,
// per-node labels, and a normalized-label lookup.

#include <string>
#include <unordered_map>
#include <vector>

#include "kgfuse/edge.hpp"
#include "kgfuse/util.hpp"

namespace kgfuse {

// First-encounter-ordered union of every label attached to each node
// across the table.
inline std::unordered_map<NodeId, std::vector<std::string>> collect_node_labels(
    const EdgeTable& table) {
    std::unordered_map<NodeId, std::vector<std::string>> labels;
    for (const Edge& e : table.edges) {
        append_unique(labels[e.node1], e.node1_labels);
        append_unique(labels[e.node2], e.node2_labels);
    }
    return labels;
}

class Graph {
public:
    static Graph build(EdgeTable table) {
        Graph g;
        g.table_ = std::move(table);
        for (size_t ei = 0; ei < g.table_.edges.size(); ++ei) {
            const Edge& e = g.table_.edges[ei];
            size_t u = g.intern(e.node1);
            size_t v = g.intern(e.node2);
            append_unique(g.labels_[u], e.node1_labels);
            append_unique(g.labels_[v], e.node2_labels);
            g.out_[u].push_back(ei);
            g.in_[v].push_back(ei);
            g.endpoints_.push_back({u, v});
        }
        for (size_t n = 0; n < g.nodes_.size(); ++n) {
            for (const std::string& label : g.labels_[n]) {
                std::vector<size_t>& ids = g.label_index_[normalize_label(label)];
                if (ids.empty() || ids.back() != n) ids.push_back(n);
            }
        }
        return g;
    }

    size_t node_count() const { return nodes_.size(); }
    size_t edge_count() const { return table_.edges.size(); }
    const EdgeTable& table() const { return table_; }
    const std::vector<NodeId>& nodes() const { return nodes_; }
    const NodeId& node(size_t i) const { return nodes_[i]; }

    // -1 when the node is not in the graph
    long index_of(const NodeId& id) const {
        auto it = index_.find(id);
        return it == index_.end() ? -1 : static_cast<long>(it->second);
    }

    const std::vector<std::string>& labels(size_t i) const { return labels_[i]; }

    // First label, falling back to the id's final path/namespace segment.
    std::string display_label(size_t i) const {
        if (!labels_[i].empty()) return labels_[i][0];
        const NodeId& id = nodes_[i];
        size_t pos = id.find_last_of("/:");
        return pos == std::string::npos ? id : id.substr(pos + 1);
    }

    const std::vector<size_t>& out_edges(size_t i) const { return out_[i]; }
    const std::vector<size_t>& in_edges(size_t i) const { return in_[i]; }
    size_t degree(size_t i) const { return out_[i].size() + in_[i].size(); }

    std::pair<size_t, size_t> edge_endpoints(size_t ei) const { return endpoints_[ei]; }
    const Edge& edge(size_t ei) const { return table_.edges[ei]; }

    // Nodes carrying the given label, matched in normalized form.
    std::vector<size_t> nodes_with_label(const std::string& label) const {
        auto it = label_index_.find(normalize_label(label));
        if (it == label_index_.end()) return {};
        return it->second;
    }

    bool has_label(const std::string& normalized) const {
        return label_index_.count(normalized) > 0;
    }

private:
    size_t intern(const NodeId& id) {
        auto it = index_.find(id);
        if (it != index_.end()) return it->second;
        size_t n = nodes_.size();
        index_.emplace(id, n);
        nodes_.push_back(id);
        labels_.emplace_back();
        out_.emplace_back();
        in_.emplace_back();
        return n;
    }

    EdgeTable table_;
    std::vector<NodeId> nodes_;
    std::unordered_map<NodeId, size_t> index_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<std::vector<size_t>> out_;
    std::vector<std::vector<size_t>> in_;
    std::vector<std::pair<size_t, size_t>> endpoints_;
    std::unordered_map<std::string, std::vector<size_t>> label_index_;
};

}  // namespace kgfuse
