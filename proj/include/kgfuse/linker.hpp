#pragma once
// Identity and lexical-unit link generation between subgraphs: exact
// label matching, alignment tables, embedding similarity over a candidate
// index, and corpus-driven frame-element grounding.

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "kgfuse/edge.hpp"
#include "kgfuse/encoder.hpp"
#include "kgfuse/graph.hpp"
#include "kgfuse/relations.hpp"
#include "kgfuse/util.hpp"

namespace kgfuse {

enum class LinkMethod { lexical, table, embedding };

inline const char* link_method_name(LinkMethod m) {
    switch (m) {
        case LinkMethod::lexical: return "lexical";
        case LinkMethod::table: return "table";
        case LinkMethod::embedding: return "embedding";
    }
    return "?";
}

struct MappingLink {
    NodeId node1;
    NodeId node2;
    RelationId relation;  // mw:SameAs or fn:HasLexicalUnit
    LinkMethod method = LinkMethod::lexical;
    double confidence = 1.0;

    friend bool operator==(const MappingLink& a, const MappingLink& b) {
        return a.node1 == b.node1 && a.node2 == b.node2 && a.relation == b.relation &&
               a.method == b.method && a.confidence == b.confidence;
    }
    friend bool operator<(const MappingLink& a, const MappingLink& b) {
        return std::tie(a.node1, a.node2, a.relation, a.confidence) <
               std::tie(b.node1, b.node2, b.relation, b.confidence);
    }
};

// Identity links are oriented canonically: node1 < node2.
inline MappingLink make_sameas_link(NodeId a, NodeId b, LinkMethod method, double confidence) {
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b), std::string(kSameAsRelation), method, confidence};
}

// Lexical nodes are identified only by a surface form: plain /c/<lang>/<term>
// concepts, event nodes, and word nodes. Synsets, frames, and Q-nodes are
// sense-bound and never lexically matched.
inline bool is_lexical_node(const NodeId& id) {
    auto src = namespace_source(id);
    if (!src) return false;
    switch (*src) {
        case SourceTag::AT:
        case SourceTag::RG:
            return true;
        case SourceTag::CN: {
            size_t segments = 0;
            for (const auto& s : split(id, '/')) {
                if (!s.empty()) ++segments;
            }
            return segments == 3;
        }
        default:
            return false;
    }
}

// One mw:SameAs link per cross-source pair of lexical nodes sharing at
// least one label (normalized exact match). `sources` restricts which
// vocabularies participate; empty means all.
inline std::vector<MappingLink> link_lexical(const EdgeTable& table,
                                             const std::set<SourceTag>& sources = {}) {
    auto participates = [&](const NodeId& id) {
        if (!is_lexical_node(id)) return false;
        if (sources.empty()) return true;
        auto src = namespace_source(id);
        return src && sources.count(*src) > 0;
    };
    std::unordered_map<NodeId, std::vector<std::string>> node_labels = collect_node_labels(table);
    std::map<std::string, std::vector<NodeId>> by_label;
    for (const auto& [node, labels] : node_labels) {
        if (!participates(node)) continue;
        std::set<std::string> seen;
        for (const auto& label : labels) {
            std::string norm = normalize_label(label);
            if (!norm.empty() && seen.insert(norm).second) by_label[norm].push_back(node);
        }
    }
    std::set<MappingLink> links;
    for (auto& [label, nodes] : by_label) {
        std::sort(nodes.begin(), nodes.end());
        for (size_t i = 0; i < nodes.size(); ++i) {
            for (size_t j = i + 1; j < nodes.size(); ++j) {
                if (namespace_source(nodes[i]) == namespace_source(nodes[j])) continue;
                links.insert(make_sameas_link(nodes[i], nodes[j], LinkMethod::lexical, 1.0));
            }
        }
    }
    return {links.begin(), links.end()};
}

struct TableLinkResult {
    std::vector<MappingLink> links;
    size_t skipped = 0;  // rows with an endpoint absent from the graph
};

// Two-column alignment file of node-id pairs. Only rows whose both
// endpoints exist in the table become links.
inline TableLinkResult link_table(const std::string& alignment_path, const std::string& left_ns,
                                  const std::string& right_ns, const EdgeTable& table,
                                  const RelationId& relation = std::string(kSameAsRelation)) {
    std::unordered_set<NodeId> nodes;
    for (const Edge& e : table.edges) {
        nodes.insert(e.node1);
        nodes.insert(e.node2);
    }
    TableLinkResult result;
    std::set<MappingLink> links;
    auto lines = split_lines(read_file(alignment_path));
    for (size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty() || lines[i][0] == '#') continue;
        const std::string where = alignment_path + ": line " + std::to_string(i + 1);
        auto cells = split(lines[i], '\t');
        if (cells.size() != 2 || cells[0].empty() || cells[1].empty()) {
            throw ValidationError(where + ": expected 2 non-empty columns");
        }
        if (!left_ns.empty() && cells[0].rfind(left_ns, 0) != 0) {
            throw ValidationError(where + ": left id '" + cells[0] + "' lacks namespace '" +
                                  left_ns + "'");
        }
        if (!right_ns.empty() && cells[1].rfind(right_ns, 0) != 0) {
            throw ValidationError(where + ": right id '" + cells[1] + "' lacks namespace '" +
                                  right_ns + "'");
        }
        if (cells[0] == cells[1]) continue;
        if (!nodes.count(cells[0]) || !nodes.count(cells[1])) {
            ++result.skipped;
            continue;
        }
        if (relation == kSameAsRelation) {
            links.insert(make_sameas_link(cells[0], cells[1], LinkMethod::table, 1.0));
        } else {
            links.insert({cells[0], cells[1], relation, LinkMethod::table, 1.0});
        }
    }
    result.links.assign(links.begin(), links.end());
    return result;
}

// A candidate store yields up to k (node, description) pairs per query
// description. The built-in store is a token-overlap inverted index; real
// deployments may substitute a richer retrieval backend.
class CandidateIndex {
public:
    struct Candidate {
        NodeId node;
        std::string description;
    };
    virtual ~CandidateIndex() = default;
    virtual std::vector<Candidate> retrieve(const std::string& query, size_t k) const = 0;
};

class InvertedIndex : public CandidateIndex {
public:
    void add(NodeId node, std::string description) {
        size_t slot = entries_.size();
        for (const auto& tok : tokens(description)) postings_[tok].insert(slot);
        entries_.push_back({std::move(node), std::move(description)});
    }

    static InvertedIndex from_file(const std::string& path) {
        InvertedIndex index;
        auto lines = split_lines(read_file(path));
        for (size_t i = 0; i < lines.size(); ++i) {
            if (lines[i].empty() || lines[i][0] == '#') continue;
            auto cells = split(lines[i], '\t');
            if (cells.size() != 2) {
                throw ValidationError(path + ": line " + std::to_string(i + 1) +
                                      ": expected 2 columns (node, description)");
            }
            index.add(cells[0], cells[1]);
        }
        return index;
    }

    std::vector<Candidate> retrieve(const std::string& query, size_t k) const override {
        std::unordered_map<size_t, size_t> hits;
        for (const auto& tok : tokens(query)) {
            auto it = postings_.find(tok);
            if (it == postings_.end()) continue;
            for (size_t slot : it->second) ++hits[slot];
        }
        std::vector<std::pair<size_t, size_t>> ranked(hits.begin(), hits.end());
        std::sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return entries_[a.first].node < entries_[b.first].node;
        });
        if (ranked.size() > k) ranked.resize(k);
        std::vector<Candidate> out;
        out.reserve(ranked.size());
        for (const auto& [slot, score] : ranked) out.push_back(entries_[slot]);
        return out;
    }

private:
    static std::set<std::string> tokens(const std::string& text) {
        std::set<std::string> out;
        std::string cur;
        for (char c : to_lower_ascii(text)) {
            if (std::isalnum(static_cast<unsigned char>(c))) {
                cur.push_back(c);
            } else if (!cur.empty()) {
                out.insert(cur);
                cur.clear();
            }
        }
        if (!cur.empty()) out.insert(cur);
        return out;
    }

    std::vector<Candidate> entries_;
    std::unordered_map<std::string, std::set<size_t>> postings_;
};

struct EmbeddingQuery {
    NodeId node;
    std::string description;
};

// For each query, the candidate with the highest cosine similarity of the
// encoded descriptions becomes a mw:SameAs link carrying that cosine as
// confidence. Ties break toward the smaller node id.
inline std::vector<MappingLink> link_by_embedding(const std::vector<EmbeddingQuery>& queries,
                                                  const CandidateIndex& index,
                                                  const TextEncoder& encoder, size_t k = 50) {
    std::vector<MappingLink> links;
    for (const auto& query : queries) {
        auto candidates = index.retrieve(query.description, k);
        if (candidates.empty()) continue;
        std::vector<double> qvec = encoder.encode(query.description);
        bool found = false;
        NodeId best_node;
        double best_cos = 0.0;
        for (const auto& cand : candidates) {
            if (cand.node == query.node) continue;
            double cos = cosine(qvec, encoder.encode(cand.description));
            if (!found || cos > best_cos || (cos == best_cos && cand.node < best_node)) {
                found = true;
                best_cos = cos;
                best_node = cand.node;
            }
        }
        if (found) links.push_back(make_sameas_link(query.node, best_node,
                                                    LinkMethod::embedding, best_cos));
    }
    std::sort(links.begin(), links.end());
    return links;
}

// Corpus rows (frame, frame element, word): every word found in the
// grounding lexicon becomes a fn:HasLexicalUnit link from the frame
// element to the mapped concept node. Duplicates collapse.
inline std::vector<MappingLink> link_framenet_corpus(const std::string& annotations_path,
                                                     const std::string& lexicon_path) {
    std::unordered_map<std::string, NodeId> lexicon;
    {
        auto lines = split_lines(read_file(lexicon_path));
        for (size_t i = 0; i < lines.size(); ++i) {
            if (lines[i].empty() || lines[i][0] == '#') continue;
            auto cells = split(lines[i], '\t');
            if (cells.size() != 2) {
                throw ValidationError(lexicon_path + ": line " + std::to_string(i + 1) +
                                      ": expected 2 columns (word, node)");
            }
            lexicon[normalize_label(cells[0])] = cells[1];
        }
    }
    std::set<MappingLink> links;
    auto lines = split_lines(read_file(annotations_path));
    for (size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty() || lines[i][0] == '#') continue;
        auto cells = split(lines[i], '\t');
        if (cells.size() != 3) {
            throw ValidationError(annotations_path + ": line " + std::to_string(i + 1) +
                                  ": expected 3 columns (frame, frame element, word)");
        }
        auto hit = lexicon.find(normalize_label(cells[2]));
        if (hit == lexicon.end()) continue;
        NodeId fe = "fn:fe:" + to_lower_ascii(trim(cells[1]));
        links.insert({fe, hit->second, std::string(kHasLexicalUnitRelation),
                      LinkMethod::table, 1.0});
    }
    return {links.begin(), links.end()};
}

// 1 - editdistance/max length, on bytes; 1.0 when both strings are empty.
inline double levenshtein_similarity(const std::string& a, const std::string& b) {
    if (a.empty() && b.empty()) return 1.0;
    const size_t m = a.size();
    const size_t n = b.size();
    std::vector<size_t> row(n + 1);
    for (size_t j = 0; j <= n; ++j) row[j] = j;
    for (size_t i = 1; i <= m; ++i) {
        size_t diagonal = row[0];
        row[0] = i;
        for (size_t j = 1; j <= n; ++j) {
            size_t up = row[j];
            if (a[i - 1] == b[j - 1]) {
                row[j] = diagonal;
            } else {
                row[j] = 1 + std::min({diagonal, up, row[j - 1]});
            }
            diagonal = up;
        }
    }
    double dist = static_cast<double>(row[n]);
    return 1.0 - dist / static_cast<double>(std::max(m, n));
}

// Optional replay of human accept/reject judgments: TSV of
// (node1, node2, accept|reject).
struct JudgmentList {
    std::set<std::pair<NodeId, NodeId>> accepted;
    std::set<std::pair<NodeId, NodeId>> rejected;

    static JudgmentList from_file(const std::string& path) {
        JudgmentList list;
        auto lines = split_lines(read_file(path));
        for (size_t i = 0; i < lines.size(); ++i) {
            if (lines[i].empty() || lines[i][0] == '#') continue;
            auto cells = split(lines[i], '\t');
            if (cells.size() != 3 || (cells[2] != "accept" && cells[2] != "reject")) {
                throw ValidationError(path + ": line " + std::to_string(i + 1) +
                                      ": expected (node1, node2, accept|reject)");
            }
            std::pair<NodeId, NodeId> key(std::min(cells[0], cells[1]),
                                          std::max(cells[0], cells[1]));
            if (cells[2] == "accept") {
                list.accepted.insert(key);
            } else {
                list.rejected.insert(key);
            }
        }
        return list;
    }
};

// Confidence threshold plus optional judgment replay applied to embedding
// links; explicit judgments win over the threshold.
inline std::vector<MappingLink> filter_links(const std::vector<MappingLink>& links,
                                             double min_confidence,
                                             const JudgmentList* judgments = nullptr) {
    std::vector<MappingLink> out;
    for (const MappingLink& link : links) {
        std::pair<NodeId, NodeId> key(std::min(link.node1, link.node2),
                                      std::max(link.node1, link.node2));
        if (judgments) {
            if (judgments->rejected.count(key)) continue;
            if (judgments->accepted.count(key)) {
                out.push_back(link);
                continue;
            }
        }
        if (link.confidence >= min_confidence) out.push_back(link);
    }
    return out;
}

// Mapping links serialize as ordinary ten-column edges; the generating
// method and confidence ride along as a source-column suffix.
inline EdgeTable links_to_edge_table(const std::vector<MappingLink>& links,
                                     const EdgeTable& context) {
    std::unordered_map<NodeId, std::vector<std::string>> node_labels =
        collect_node_labels(context);
    std::vector<MappingLink> sorted = links;
    std::sort(sorted.begin(), sorted.end());
    EdgeTableBuilder builder;
    for (const MappingLink& link : sorted) {
        Edge& e = builder.add(link.node1, link.relation, link.node2);
        auto l1 = node_labels.find(link.node1);
        if (l1 != node_labels.end()) e.node1_labels = l1->second;
        auto l2 = node_labels.find(link.node2);
        if (l2 != node_labels.end()) e.node2_labels = l2->second;
        e.relation_labels = {derive_relation_label(link.relation)};
        e.sources = {std::string(link_method_name(link.method)) + ":" +
                     format_double_short(link.confidence)};
    }
    return builder.take();
}

}  // namespace kgfuse
