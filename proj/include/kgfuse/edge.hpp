#pragma once
// Hyper-relational edge model and its tabular serialization.
//
// An edge is one ten-column row: the (node1, relation, node2) statement,
// four lifted label/dimension columns, and the source/sentence qualifiers.
// The on-disk format is UTF-8 TSV, '\n' records, '|'-joined multi-value
// cells, and is byte-stable under read/write round trips.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kgfuse/util.hpp"

namespace kgfuse {

using NodeId = std::string;
using RelationId = std::string;

inline constexpr const char* kEdgeColumns[10] = {
    "id",          "node1",       "relation",           "node2",
    "node1;label", "node2;label", "relation;label",     "relation;dimension",
    "source",      "sentence",
};

inline std::string edge_header_line() {
    std::string h;
    for (size_t i = 0; i < 10; ++i) {
        if (i) h.push_back('\t');
        h.append(kEdgeColumns[i]);
    }
    return h;
}

struct Edge {
    std::string id;
    NodeId node1;
    RelationId relation;
    NodeId node2;
    std::vector<std::string> node1_labels;
    std::vector<std::string> node2_labels;
    std::vector<std::string> relation_labels;
    std::string relation_dimension;  // empty = absent
    std::vector<std::string> sources;
    std::string sentence;  // empty = absent

    // Source lists are insertion-ordered on disk but compared as sets.
    friend bool operator==(const Edge& a, const Edge& b) {
        auto as_set = [](const std::vector<std::string>& v) {
            std::vector<std::string> s = v;
            std::sort(s.begin(), s.end());
            return s;
        };
        return a.id == b.id && a.node1 == b.node1 && a.relation == b.relation &&
               a.node2 == b.node2 && a.node1_labels == b.node1_labels &&
               a.node2_labels == b.node2_labels && a.relation_labels == b.relation_labels &&
               a.relation_dimension == b.relation_dimension && a.sentence == b.sentence &&
               as_set(a.sources) == as_set(b.sources);
    }
};

struct EdgeTable {
    std::vector<Edge> edges;

    size_t size() const { return edges.size(); }
    bool empty() const { return edges.empty(); }

    friend bool operator==(const EdgeTable& a, const EdgeTable& b) {
        return a.edges == b.edges;
    }
};

// `node1-relation-node2`, with `-<ordinal>` appended for duplicate triples.
inline std::string make_edge_id(const NodeId& node1, const RelationId& relation,
                                const NodeId& node2, size_t ordinal) {
    std::string id = node1 + "-" + relation + "-" + node2;
    if (ordinal > 0) {
        id += "-";
        id += std::to_string(ordinal);
    }
    return id;
}

namespace detail {

inline bool has_forbidden_char(std::string_view s) {
    return s.find_first_of("\t\n\r") != std::string_view::npos;
}

// '|' separates multi-value cells; literal '|' and '\' are escaped.
inline std::string escape_item(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '\\' || c == '|') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

inline std::string join_multivalue(const std::vector<std::string>& items) {
    std::string out;
    for (size_t i = 0; i < items.size(); ++i) {
        if (i) out.push_back('|');
        out += escape_item(items[i]);
    }
    return out;
}

inline std::vector<std::string> split_multivalue(std::string_view cell) {
    std::vector<std::string> items;
    if (cell.empty()) return items;
    std::string cur;
    for (size_t i = 0; i < cell.size(); ++i) {
        char c = cell[i];
        if (c == '\\' && i + 1 < cell.size() &&
            (cell[i + 1] == '|' || cell[i + 1] == '\\')) {
            cur.push_back(cell[i + 1]);
            ++i;
        } else if (c == '|') {
            items.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    items.push_back(cur);
    return items;
}

inline void check_no_duplicates(const std::vector<std::string>& items,
                                const std::string& what, const std::string& where) {
    for (size_t i = 0; i < items.size(); ++i) {
        for (size_t j = i + 1; j < items.size(); ++j) {
            if (items[i] == items[j]) {
                throw ValidationError(where + ": duplicate entry '" + items[i] + "' in " + what);
            }
        }
    }
}

}  // namespace detail

// Field-level validation shared by the reader and the writer.
inline void validate_edge(const Edge& e, const std::string& where) {
    auto check_field = [&](std::string_view v, const char* name) {
        if (detail::has_forbidden_char(v)) {
            throw ValidationError(where + ": field '" + std::string(name) +
                                  "' contains tab, newline, or carriage return");
        }
    };
    if (e.id.empty()) throw ValidationError(where + ": empty id");
    if (e.node1.empty() || e.relation.empty() || e.node2.empty()) {
        throw ValidationError(where + ": node1, relation, and node2 must be non-empty");
    }
    check_field(e.id, "id");
    check_field(e.node1, "node1");
    check_field(e.relation, "relation");
    check_field(e.node2, "node2");
    check_field(e.relation_dimension, "relation;dimension");
    check_field(e.sentence, "sentence");
    for (const auto& l : e.node1_labels) check_field(l, "node1;label");
    for (const auto& l : e.node2_labels) check_field(l, "node2;label");
    for (const auto& l : e.relation_labels) check_field(l, "relation;label");
    for (const auto& s : e.sources) check_field(s, "source");
    detail::check_no_duplicates(e.node1_labels, "node1;label", where);
    detail::check_no_duplicates(e.node2_labels, "node2;label", where);
    detail::check_no_duplicates(e.relation_labels, "relation;label", where);
    detail::check_no_duplicates(e.sources, "source", where);
}

inline std::string serialize_edge(const Edge& e) {
    std::string row;
    row += e.id;
    row.push_back('\t');
    row += e.node1;
    row.push_back('\t');
    row += e.relation;
    row.push_back('\t');
    row += e.node2;
    row.push_back('\t');
    row += detail::join_multivalue(e.node1_labels);
    row.push_back('\t');
    row += detail::join_multivalue(e.node2_labels);
    row.push_back('\t');
    row += detail::join_multivalue(e.relation_labels);
    row.push_back('\t');
    row += e.relation_dimension;
    row.push_back('\t');
    row += detail::join_multivalue(e.sources);
    row.push_back('\t');
    row += e.sentence;
    return row;
}

inline std::string serialize_edge_table(const EdgeTable& table) {
    std::string out = edge_header_line();
    out.push_back('\n');
    for (size_t i = 0; i < table.edges.size(); ++i) {
        validate_edge(table.edges[i], "edge " + std::to_string(i + 1));
        out += serialize_edge(table.edges[i]);
        out.push_back('\n');
    }
    return out;
}

inline void write_edge_table(const EdgeTable& table, const std::string& path) {
    // validate ids are unique before touching the filesystem
    std::unordered_map<std::string, size_t> seen;
    for (size_t i = 0; i < table.edges.size(); ++i) {
        auto [it, inserted] = seen.emplace(table.edges[i].id, i);
        if (!inserted) {
            throw ValidationError("duplicate edge id '" + table.edges[i].id + "' at rows " +
                                  std::to_string(it->second + 1) + " and " + std::to_string(i + 1));
        }
    }
    write_file(path, serialize_edge_table(table));
}

inline EdgeTable parse_edge_table(std::string_view content, const std::string& name) {
    size_t bad = utf8_invalid_at(content);
    if (bad != std::string_view::npos) {
        size_t line = 1 + std::count(content.begin(), content.begin() + static_cast<long>(bad), '\n');
        throw ValidationError(name + ": invalid UTF-8 byte sequence at line " + std::to_string(line));
    }
    std::vector<std::string> lines = split_lines(content);
    if (lines.empty()) throw ValidationError(name + ": empty file, header row required");
    if (lines[0] != edge_header_line()) {
        throw ValidationError(name + ": line 1: bad header, expected '" + edge_header_line() + "'");
    }
    EdgeTable table;
    table.edges.reserve(lines.size() - 1);
    std::unordered_map<std::string, size_t> id_lines;
    for (size_t li = 1; li < lines.size(); ++li) {
        const std::string where = name + ": line " + std::to_string(li + 1);
        std::vector<std::string> cells = split(lines[li], '\t');
        if (cells.size() != 10) {
            throw ValidationError(where + ": expected 10 columns, found " +
                                  std::to_string(cells.size()));
        }
        Edge e;
        e.id = cells[0];
        e.node1 = cells[1];
        e.relation = cells[2];
        e.node2 = cells[3];
        e.node1_labels = detail::split_multivalue(cells[4]);
        e.node2_labels = detail::split_multivalue(cells[5]);
        e.relation_labels = detail::split_multivalue(cells[6]);
        e.relation_dimension = cells[7];
        e.sources = detail::split_multivalue(cells[8]);
        e.sentence = cells[9];
        validate_edge(e, where);
        auto [it, inserted] = id_lines.emplace(e.id, li + 1);
        if (!inserted) {
            throw ValidationError(name + ": duplicate edge id '" + e.id + "' at lines " +
                                  std::to_string(it->second) + " and " + std::to_string(li + 1));
        }
        table.edges.push_back(std::move(e));
    }
    return table;
}

inline EdgeTable read_edge_table(const std::string& path) {
    return parse_edge_table(read_file(path), path);
}

// Accumulates edges, assigning ids with per-triple ordinals so duplicate
// (node1, relation, node2) statements stay distinct until deduplication.
class EdgeTableBuilder {
public:
    Edge& add(NodeId node1, RelationId relation, NodeId node2) {
        Edge e;
        size_t& ordinal = triple_counts_[node1 + "\t" + relation + "\t" + node2];
        e.id = make_edge_id(node1, relation, node2, ordinal);
        ++ordinal;
        e.node1 = std::move(node1);
        e.relation = std::move(relation);
        e.node2 = std::move(node2);
        table_.edges.push_back(std::move(e));
        return table_.edges.back();
    }

    EdgeTable take() { return std::move(table_); }
    const EdgeTable& table() const { return table_; }

private:
    EdgeTable table_;
    std::unordered_map<std::string, size_t> triple_counts_;
};

}  // namespace kgfuse
