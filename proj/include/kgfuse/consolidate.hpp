#pragma once
// Consolidation: concatenate imported tables with mapping links,
// deduplicate statements, and merge identity classes connected by
// mw:SameAs into canonical nodes.

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "kgfuse/edge.hpp"
#include "kgfuse/graph.hpp"
#include "kgfuse/relations.hpp"

namespace kgfuse {

inline size_t count_nodes(const EdgeTable& table) {
    std::unordered_set<std::string> nodes;
    for (const Edge& e : table.edges) {
        nodes.insert(e.node1);
        nodes.insert(e.node2);
    }
    return nodes.size();
}

// Union of all edges; colliding ids are re-assigned the next free ordinal
// for their triple.
inline EdgeTable concatenate(const std::vector<EdgeTable>& tables) {
    EdgeTable out;
    std::unordered_set<std::string> used_ids;
    std::unordered_map<std::string, size_t> triple_ordinals;
    for (const EdgeTable& t : tables) {
        for (const Edge& e : t.edges) {
            Edge copy = e;
            if (!used_ids.insert(copy.id).second) {
                const std::string key = copy.node1 + "\t" + copy.relation + "\t" + copy.node2;
                size_t& ordinal = triple_ordinals[key];
                do {
                    copy.id = make_edge_id(copy.node1, copy.relation, copy.node2, ++ordinal);
                } while (!used_ids.insert(copy.id).second);
            }
            out.edges.push_back(std::move(copy));
        }
    }
    return out;
}

namespace detail {

// Content key ignoring the id: used to order duplicate statements
// canonically so merged label lists do not depend on input order.
inline std::string edge_content_key(const Edge& e) {
    Edge copy = e;
    copy.id.clear();
    std::sort(copy.sources.begin(), copy.sources.end());
    return serialize_edge(copy);
}

}  // namespace detail

// Collapses edges sharing (node1, relation, node2) into one: labels
// unioned, sources unioned and sorted, sentence and dimension taken from
// the first non-empty occurrence in canonical order. Output is sorted by id.
inline EdgeTable deduplicate(const EdgeTable& table) {
    std::map<std::string, std::vector<const Edge*>> groups;
    for (const Edge& e : table.edges) {
        groups[e.node1 + "\t" + e.relation + "\t" + e.node2].push_back(&e);
    }
    EdgeTable out;
    out.edges.reserve(groups.size());
    std::unordered_set<std::string> used_ids;
    for (auto& [key, members] : groups) {
        std::sort(members.begin(), members.end(), [](const Edge* a, const Edge* b) {
            return detail::edge_content_key(*a) < detail::edge_content_key(*b);
        });
        Edge merged;
        merged.node1 = members[0]->node1;
        merged.relation = members[0]->relation;
        merged.node2 = members[0]->node2;
        std::set<std::string> sources;
        for (const Edge* m : members) {
            append_unique(merged.node1_labels, m->node1_labels);
            append_unique(merged.node2_labels, m->node2_labels);
            append_unique(merged.relation_labels, m->relation_labels);
            sources.insert(m->sources.begin(), m->sources.end());
            if (merged.sentence.empty()) merged.sentence = m->sentence;
            if (merged.relation_dimension.empty()) merged.relation_dimension = m->relation_dimension;
        }
        merged.sources.assign(sources.begin(), sources.end());
        size_t ordinal = 0;
        merged.id = make_edge_id(merged.node1, merged.relation, merged.node2, 0);
        while (!used_ids.insert(merged.id).second) {
            merged.id = make_edge_id(merged.node1, merged.relation, merged.node2, ++ordinal);
        }
        out.edges.push_back(std::move(merged));
    }
    std::sort(out.edges.begin(), out.edges.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    return out;
}

// Partition of the table's nodes into identity classes: the connected
// components of its mw:SameAs subgraph, singletons elsewhere.
struct MergePlan {
    // every node in the table maps to its class representative
    std::unordered_map<NodeId, NodeId> canonical;
    // representative -> members ordered by (namespace priority, id);
    // only classes with two or more members are listed
    std::map<NodeId, std::vector<NodeId>> classes;

    const NodeId& canonical_of(const NodeId& n) const {
        auto it = canonical.find(n);
        return it == canonical.end() ? n : it->second;
    }
};

namespace detail {

class UnionFind {
public:
    size_t add() {
        parent_.push_back(parent_.size());
        return parent_.size() - 1;
    }
    size_t find(size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(size_t a, size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<size_t> parent_;
};

inline bool merge_precedes(const NodeId& a, const NodeId& b) {
    int pa = merge_priority(a);
    int pb = merge_priority(b);
    if (pa != pb) return pa < pb;
    return a < b;
}

}  // namespace detail

inline MergePlan build_merge_plan(const EdgeTable& table) {
    detail::UnionFind uf;
    std::unordered_map<NodeId, size_t> slot;
    std::vector<NodeId> ids;
    auto intern = [&](const NodeId& n) {
        auto it = slot.find(n);
        if (it != slot.end()) return it->second;
        size_t s = uf.add();
        slot.emplace(n, s);
        ids.push_back(n);
        return s;
    };
    for (const Edge& e : table.edges) {
        size_t a = intern(e.node1);
        size_t b = intern(e.node2);
        if (e.relation == kSameAsRelation) uf.unite(a, b);
    }
    std::unordered_map<size_t, std::vector<NodeId>> members;
    for (const NodeId& n : ids) members[uf.find(slot[n])].push_back(n);

    MergePlan plan;
    for (auto& [root, nodes] : members) {
        std::sort(nodes.begin(), nodes.end(), detail::merge_precedes);
        const NodeId& canonical = nodes.front();
        for (const NodeId& n : nodes) plan.canonical[n] = canonical;
        if (nodes.size() > 1) plan.classes[canonical] = nodes;
    }
    return plan;
}

// Rewrites endpoints to canonical ids, unions class labels onto the
// canonical node, drops mw:SameAs edges inside a class, and deduplicates.
inline EdgeTable apply_merge(const EdgeTable& table, const MergePlan& plan) {
    std::unordered_map<NodeId, std::vector<std::string>> node_labels = collect_node_labels(table);

    // label set per merged class: canonical node's labels first, then the
    // remaining members in class order
    std::unordered_map<NodeId, std::vector<std::string>> class_labels;
    for (const auto& [canonical, members] : plan.classes) {
        std::vector<std::string> labels = node_labels[canonical];
        for (const NodeId& m : members) {
            if (m != canonical) append_unique(labels, node_labels[m]);
        }
        class_labels[canonical] = std::move(labels);
    }

    EdgeTable rewritten;
    rewritten.edges.reserve(table.edges.size());
    for (const Edge& e : table.edges) {
        const NodeId& c1 = plan.canonical_of(e.node1);
        const NodeId& c2 = plan.canonical_of(e.node2);
        if (e.relation == kSameAsRelation && c1 == c2) continue;
        Edge copy = e;
        copy.node1 = c1;
        copy.node2 = c2;
        auto l1 = class_labels.find(c1);
        if (l1 != class_labels.end()) copy.node1_labels = l1->second;
        auto l2 = class_labels.find(c2);
        if (l2 != class_labels.end()) copy.node2_labels = l2->second;
        rewritten.edges.push_back(std::move(copy));
    }
    return deduplicate(rewritten);
}

struct ConsolidateResult {
    EdgeTable star;          // concatenated + deduplicated, mappings appended
    EdgeTable consolidated;  // after identity merge and final deduplication
};

inline ConsolidateResult consolidate(const std::vector<EdgeTable>& tables,
                                     const EdgeTable& links) {
    std::vector<EdgeTable> all = tables;
    all.push_back(links);
    ConsolidateResult result;
    result.star = deduplicate(concatenate(all));
    result.consolidated = apply_merge(result.star, build_merge_plan(result.star));
    return result;
}

// Rejects relations outside the configured vocabulary.
inline void check_relation_closure(const EdgeTable& table,
                                   const std::set<std::string>& allowlist) {
    for (size_t i = 0; i < table.edges.size(); ++i) {
        if (!allowlist.count(table.edges[i].relation)) {
            throw ValidationError("edge " + std::to_string(i + 1) + " ('" + table.edges[i].id +
                                  "'): relation '" + table.edges[i].relation +
                                  "' is not in the relation vocabulary");
        }
    }
}

}  // namespace kgfuse
