#pragma once
// Importers for the seven source dumps. Each importer reads one documented
// text format (see docs/formats.md) and emits the canonical ten-column
// table, applying per-source relation mappings and label normalization.
//
// Closed-vocabulary sources (ConceptNet, ATOMIC, FrameNet, Roget, WordNet)
// fail loudly on unknown relations; open ones (Visual Genome, Wikidata)
// drop unknown rows and report how many.

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "kgfuse/edge.hpp"
#include "kgfuse/relations.hpp"
#include "kgfuse/util.hpp"

namespace kgfuse {

// ---------------------------------------------------------------------------
// Label and id helpers

// ConceptNet URIs carry the surface term as the third segment
// (/c/<lang>/<term>[/...]); sense qualifiers that may follow do not change
// the label. Other URIs label by their final segment.
inline std::string conceptnet_node_label(const std::string& uri, const std::string& where) {
    std::vector<std::string> segs;
    for (auto& s : split(uri, '/')) {
        if (!s.empty()) segs.push_back(s);
    }
    if (uri.rfind("/c/", 0) == 0) {
        if (segs.size() < 3) throw ValidationError(where + ": malformed concept URI '" + uri + "'");
        std::string term = segs[2];
        std::replace(term.begin(), term.end(), '_', ' ');
        return term;
    }
    if (segs.empty()) throw ValidationError(where + ": malformed URI '" + uri + "'");
    std::string term = segs.back();
    std::replace(term.begin(), term.end(), '_', ' ');
    return term;
}

// wn:shoe.n.01 -> "shoe"; lemma underscores become spaces.
inline std::string synset_label(std::string_view synset) {
    std::string lemma(synset.substr(0, synset.find('.')));
    std::replace(lemma.begin(), lemma.end(), '_', ' ');
    return lemma;
}

// Lowercased text with non-alphanumeric runs collapsed to '_', used to mint
// node ids for sources whose dumps carry free text (events, words,
// attributes).
inline std::string slugify(std::string_view text) {
    std::string out;
    bool pending = false;
    for (char c : text) {
        unsigned char u = static_cast<unsigned char>(c);
        if (std::isalnum(u)) {
            if (pending && !out.empty()) out.push_back('_');
            pending = false;
            out.push_back(static_cast<char>(std::tolower(u)));
        } else {
            pending = true;
        }
    }
    return out;
}

// Event normalization: lowercase, drop person placeholders (with their
// possessive suffix) and blank markers, collapse whitespace.
inline std::string normalize_event_label(std::string_view event) {
    std::string lowered = to_lower_ascii(event);
    std::vector<std::string> kept;
    for (const auto& tok : split(collapse_whitespace(lowered), ' ')) {
        if (tok.empty()) continue;
        if (tok == "personx" || tok == "persony" || tok == "personz" ||
            tok == "personx's" || tok == "persony's" || tok == "personz's") {
            continue;
        }
        if (tok.find_first_not_of('_') == std::string::npos) continue;  // blank marker
        kept.push_back(tok);
    }
    return join(kept, " ");
}

namespace detail {

inline std::vector<std::string> require_columns(const std::string& line, size_t n,
                                                const std::string& where) {
    std::vector<std::string> cells = split(line, '\t');
    if (cells.size() != n) {
        throw ValidationError(where + ": expected " + std::to_string(n) + " columns, found " +
                              std::to_string(cells.size()));
    }
    return cells;
}

inline void set_relation_label(Edge& e) {
    e.relation_labels = {derive_relation_label(e.relation)};
}

inline bool is_comment_or_blank(const std::string& line) {
    return line.empty() || line[0] == '#';
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Relation mapping tables

// One mapping row: target relation plus whether the edge direction flips.
struct MappedRelation {
    RelationId relation;
    bool swap = false;
};

using RelationMap = std::map<std::string, MappedRelation>;

// FrameNet's 19 edge types collapse onto 9 relations. Inverse-direction
// source types map with an endpoint swap. The table is a curated artifact;
// a custom one can be supplied per import.
inline const RelationMap& framenet_relation_map() {
    static const RelationMap m = {
        {"inherits_from", {"/r/IsA", false}},
        {"is_inherited_by", {"/r/IsA", true}},
        {"perspective_on", {"/r/SimilarTo", false}},
        {"is_perspectivized_in", {"/r/SimilarTo", true}},
        {"uses", {"/r/UsedFor", true}},
        {"is_used_by", {"/r/UsedFor", false}},
        {"subframe_of", {"/r/PartOf", false}},
        {"has_subframe", {"/r/PartOf", true}},
        {"precedes", {"/r/HasPrerequisite", true}},
        {"is_preceded_by", {"/r/HasPrerequisite", false}},
        {"is_inchoative_of", {"/r/Causes", false}},
        {"is_causative_of", {"/r/Causes", false}},
        {"see_also", {"/r/RelatedTo", false}},
        {"has_frame_element", {"/r/HasA", false}},
        {"has_lexical_unit", {std::string(kHasLexicalUnitRelation), false}},
        {"fe_has_semtype", {"/r/IsA", false}},
        {"st_subtype_of", {"/r/IsA", false}},
        {"st_supertype_of", {"/r/IsA", true}},
        {"st_see_also", {"/r/RelatedTo", false}},
    };
    return m;
}

inline const std::map<std::string, RelationId>& wordnet_relation_map() {
    static const std::map<std::string, RelationId> m = {
        {"hypernym", "/r/IsA"},
        {"part_holonym", "/r/PartOf"},
        {"member_holonym", "/r/PartOf"},
        {"substance_meronym", "/r/MadeOf"},
    };
    return m;
}

// Two-column TSV: source relation -> target relation, optional third
// column "swap".
inline RelationMap load_relation_map(const std::string& path) {
    RelationMap m;
    auto lines = split_lines(read_file(path));
    for (size_t i = 0; i < lines.size(); ++i) {
        if (detail::is_comment_or_blank(lines[i])) continue;
        auto cells = split(lines[i], '\t');
        if (cells.size() != 2 && cells.size() != 3) {
            throw ValidationError(path + ": line " + std::to_string(i + 1) +
                                  ": expected 2 or 3 columns");
        }
        MappedRelation mr;
        mr.relation = cells[1];
        mr.swap = cells.size() == 3 && cells[2] == "swap";
        m[cells[0]] = mr;
    }
    return m;
}

// ---------------------------------------------------------------------------
// ConceptNet: assertion rows `uri \t relation \t start \t end \t metadata`.

inline EdgeTable import_conceptnet(const std::string& dump_path) {
    EdgeTableBuilder builder;
    auto lines = split_lines(read_file(dump_path));
    for (size_t i = 0; i < lines.size(); ++i) {
        if (detail::is_comment_or_blank(lines[i])) continue;
        const std::string where = dump_path + ": line " + std::to_string(i + 1);
        auto cells = detail::require_columns(lines[i], 5, where);
        const std::string& relation = cells[1];
        const std::string& start = cells[2];
        const std::string& end = cells[3];
        if (!conceptnet_relations().count(relation)) {
            throw ValidationError(where + ": unknown ConceptNet relation '" + relation + "'");
        }
        Edge& e = builder.add(start, relation, end);
        e.node1_labels = {conceptnet_node_label(start, where)};
        e.node2_labels = {conceptnet_node_label(end, where)};
        detail::set_relation_label(e);
        e.sources = {"CN"};
        if (!cells[4].empty()) {
            nlohmann::json meta;
            try {
                meta = nlohmann::json::parse(cells[4]);
            } catch (const nlohmann::json::exception& ex) {
                throw ValidationError(where + ": bad metadata JSON: " + ex.what());
            }
            if (meta.contains("surfaceText") && meta["surfaceText"].is_string()) {
                std::string text = meta["surfaceText"].get<std::string>();
                // surface text marks the matched terms as [[term]]
                std::string cleaned;
                for (size_t k = 0; k < text.size(); ++k) {
                    if (k + 1 < text.size() && (text.compare(k, 2, "[[") == 0 ||
                                                text.compare(k, 2, "]]") == 0)) {
                        ++k;
                        continue;
                    }
                    cleaned.push_back(text[k]);
                }
                e.sentence = cleaned;
            }
        }
    }
    return builder.take();
}

// ---------------------------------------------------------------------------
// ATOMIC: `event \t relation \t target`, nine event relations.

inline EdgeTable import_atomic(const std::string& dump_path) {
    EdgeTableBuilder builder;
    auto lines = split_lines(read_file(dump_path));
    for (size_t i = 0; i < lines.size(); ++i) {
        if (detail::is_comment_or_blank(lines[i])) continue;
        const std::string where = dump_path + ": line " + std::to_string(i + 1);
        auto cells = detail::require_columns(lines[i], 3, where);
        const RelationId relation = "at:" + cells[1];
        if (!atomic_relations().count(relation)) {
            throw ValidationError(where + ": unknown event relation '" + cells[1] + "'");
        }
        auto node_of = [&](const std::string& text) -> std::pair<NodeId, std::vector<std::string>> {
            std::string cleaned = collapse_whitespace(trim(text));
            if (cleaned.empty()) throw ValidationError(where + ": empty event text");
            std::vector<std::string> labels = {cleaned};
            std::string normalized = normalize_event_label(cleaned);
            if (!normalized.empty() && normalized != cleaned) labels.push_back(normalized);
            return {"at:" + slugify(cleaned), labels};
        };
        auto [n1, l1] = node_of(cells[0]);
        auto [n2, l2] = node_of(cells[2]);
        Edge& e = builder.add(n1, relation, n2);
        e.node1_labels = l1;
        e.node2_labels = l2;
        detail::set_relation_label(e);
        e.sources = {"AT"};
    }
    return builder.take();
}

// ---------------------------------------------------------------------------
// FrameNet: `node1 \t edge_type \t node2`. The edge type decides both the
// target relation and the node kinds on each side.

inline EdgeTable import_framenet(const std::string& dump_path,
                                 const RelationMap& map = framenet_relation_map()) {
    // node kinds per edge type: f=frame, e=frame element, l=lexical unit,
    // s=semantic type
    static const std::map<std::string, std::pair<char, char>> kinds = {
        {"inherits_from", {'f', 'f'}},    {"is_inherited_by", {'f', 'f'}},
        {"perspective_on", {'f', 'f'}},   {"is_perspectivized_in", {'f', 'f'}},
        {"uses", {'f', 'f'}},             {"is_used_by", {'f', 'f'}},
        {"subframe_of", {'f', 'f'}},      {"has_subframe", {'f', 'f'}},
        {"precedes", {'f', 'f'}},         {"is_preceded_by", {'f', 'f'}},
        {"is_inchoative_of", {'f', 'f'}}, {"is_causative_of", {'f', 'f'}},
        {"see_also", {'f', 'f'}},         {"has_frame_element", {'f', 'e'}},
        {"has_lexical_unit", {'f', 'l'}}, {"fe_has_semtype", {'e', 's'}},
        {"st_subtype_of", {'s', 's'}},    {"st_supertype_of", {'s', 's'}},
        {"st_see_also", {'s', 's'}},
    };
    auto make_node = [](char kind, const std::string& name) -> std::pair<NodeId, std::string> {
        std::string slug = to_lower_ascii(trim(name));
        std::string label = slug;
        std::replace(label.begin(), label.end(), '_', ' ');
        switch (kind) {
            case 'f': return {"fn:" + slug, label};
            case 'e': return {"fn:fe:" + slug, label};
            case 'l': return {"fn:lu:" + slug, label};
            default: return {"fn:st:" + slug, label};
        }
    };
    EdgeTableBuilder builder;
    auto lines = split_lines(read_file(dump_path));
    for (size_t i = 0; i < lines.size(); ++i) {
        if (detail::is_comment_or_blank(lines[i])) continue;
        const std::string where = dump_path + ": line " + std::to_string(i + 1);
        auto cells = detail::require_columns(lines[i], 3, where);
        const std::string& type = cells[1];
        auto kind_it = kinds.find(type);
        auto map_it = map.find(type);
        if (kind_it == kinds.end() || map_it == map.end()) {
            throw ValidationError(where + ": unmapped frame edge type '" + type + "'");
        }
        auto [n1, l1] = make_node(kind_it->second.first, cells[0]);
        auto [n2, l2] = make_node(kind_it->second.second, cells[2]);
        if (map_it->second.swap) {
            std::swap(n1, n2);
            std::swap(l1, l2);
        }
        Edge& e = builder.add(n1, map_it->second.relation, n2);
        e.node1_labels = {l1};
        e.node2_labels = {l2};
        detail::set_relation_label(e);
        e.sources = {"FN"};
    }
    return builder.take();
}

// ---------------------------------------------------------------------------
// Roget: `word1 \t {synonym|antonym} \t word2`.

inline EdgeTable import_roget(const std::string& dump_path) {
    EdgeTableBuilder builder;
    auto lines = split_lines(read_file(dump_path));
    for (size_t i = 0; i < lines.size(); ++i) {
        if (detail::is_comment_or_blank(lines[i])) continue;
        const std::string where = dump_path + ": line " + std::to_string(i + 1);
        auto cells = detail::require_columns(lines[i], 3, where);
        RelationId relation;
        if (cells[1] == "synonym") {
            relation = "/r/Synonym";
        } else if (cells[1] == "antonym") {
            relation = "/r/Antonym";
        } else {
            throw ValidationError(where + ": unknown word relation '" + cells[1] + "'");
        }
        std::string w1 = collapse_whitespace(trim(cells[0]));
        std::string w2 = collapse_whitespace(trim(cells[2]));
        if (w1.empty() || w2.empty()) throw ValidationError(where + ": empty word");
        Edge& e = builder.add("rg:" + slugify(w1), relation, "rg:" + slugify(w2));
        e.node1_labels = {w1};
        e.node2_labels = {w2};
        detail::set_relation_label(e);
        e.sources = {"RG"};
    }
    return builder.take();
}

// ---------------------------------------------------------------------------
// Visual Genome: typed lines over synset-annotated image objects.
//   object <oid> <synset>        declares an object (empty synset allowed)
//   rel <oid1> <predicate> <oid2>  object-object proximity
//   attr <oid> <attribute>       attribute, POS resolved via lexicon

struct VisualGenomeImport {
    EdgeTable table;
    size_t skipped_objects = 0;        // object declarations without a synset
    size_t skipped_relationships = 0;  // rel rows touching an unannotated object
    size_t skipped_attributes = 0;     // attr rows with unknown object or POS
};

inline std::unordered_map<std::string, std::string> load_pos_lexicon(const std::string& path) {
    std::unordered_map<std::string, std::string> lex;
    auto lines = split_lines(read_file(path));
    for (size_t i = 0; i < lines.size(); ++i) {
        if (detail::is_comment_or_blank(lines[i])) continue;
        auto cells = split(lines[i], '\t');
        if (cells.size() != 2) {
            throw ValidationError(path + ": line " + std::to_string(i + 1) +
                                  ": expected 2 columns");
        }
        lex[normalize_label(cells[0])] = cells[1];
    }
    return lex;
}

inline VisualGenomeImport import_visualgenome(const std::string& dump_path,
                                              const std::string& lexicon_path) {
    const auto pos_lexicon = load_pos_lexicon(lexicon_path);
    VisualGenomeImport result;
    EdgeTableBuilder builder;
    std::unordered_map<std::string, std::string> object_synset;
    auto lines = split_lines(read_file(dump_path));
    for (size_t i = 0; i < lines.size(); ++i) {
        if (detail::is_comment_or_blank(lines[i])) continue;
        const std::string where = dump_path + ": line " + std::to_string(i + 1);
        auto cells = split(lines[i], '\t');
        if (cells.empty()) continue;
        const std::string& kind = cells[0];
        if (kind == "object") {
            if (cells.size() != 3) throw ValidationError(where + ": object needs 3 columns");
            if (trim(cells[2]).empty()) {
                ++result.skipped_objects;
            } else {
                object_synset[cells[1]] = trim(cells[2]);
            }
        } else if (kind == "rel") {
            if (cells.size() != 4) throw ValidationError(where + ": rel needs 4 columns");
            auto a = object_synset.find(cells[1]);
            auto b = object_synset.find(cells[3]);
            if (a == object_synset.end() || b == object_synset.end()) {
                ++result.skipped_relationships;
                continue;
            }
            Edge& e = builder.add("wn:" + a->second, "/r/LocatedNear", "wn:" + b->second);
            e.node1_labels = {synset_label(a->second)};
            e.node2_labels = {synset_label(b->second)};
            detail::set_relation_label(e);
            e.sources = {"VG"};
        } else if (kind == "attr") {
            if (cells.size() != 3) throw ValidationError(where + ": attr needs 3 columns");
            auto obj = object_synset.find(cells[1]);
            if (obj == object_synset.end()) {
                ++result.skipped_attributes;
                continue;
            }
            std::string attr = collapse_whitespace(trim(cells[2]));
            auto pos = pos_lexicon.find(normalize_label(attr));
            RelationId relation;
            if (pos != pos_lexicon.end() && pos->second == "VERB") {
                relation = "/r/CapableOf";
            } else if (pos != pos_lexicon.end() && pos->second == "ADJ") {
                relation = std::string(kMayHavePropertyRelation);
            } else {
                ++result.skipped_attributes;
                continue;
            }
            Edge& e = builder.add("wn:" + obj->second, relation, "vg:" + slugify(attr));
            e.node1_labels = {synset_label(obj->second)};
            e.node2_labels = {attr};
            detail::set_relation_label(e);
            e.sources = {"VG"};
        } else {
            throw ValidationError(where + ": unknown record kind '" + kind + "'");
        }
    }
    result.table = builder.take();
    return result;
}

// ---------------------------------------------------------------------------
// Wikidata subset: `qnode \t label \t property \t qnode \t label`, with a
// property -> relation table supplied alongside the dump.

struct WikidataImport {
    EdgeTable table;
    size_t dropped_statements = 0;  // statements with an unmapped property
};

inline std::map<std::string, RelationId> load_property_map(const std::string& path) {
    std::map<std::string, RelationId> m;
    auto lines = split_lines(read_file(path));
    for (size_t i = 0; i < lines.size(); ++i) {
        if (detail::is_comment_or_blank(lines[i])) continue;
        auto cells = split(lines[i], '\t');
        if (cells.size() != 2) {
            throw ValidationError(path + ": line " + std::to_string(i + 1) +
                                  ": expected 2 columns");
        }
        m[cells[0]] = cells[1];
    }
    return m;
}

inline WikidataImport import_wikidata_cs(const std::string& dump_path,
                                         const std::string& property_map_path) {
    const auto pmap = load_property_map(property_map_path);
    WikidataImport result;
    EdgeTableBuilder builder;
    auto lines = split_lines(read_file(dump_path));
    for (size_t i = 0; i < lines.size(); ++i) {
        if (detail::is_comment_or_blank(lines[i])) continue;
        const std::string where = dump_path + ": line " + std::to_string(i + 1);
        auto cells = detail::require_columns(lines[i], 5, where);
        auto rel = pmap.find(cells[2]);
        if (rel == pmap.end()) {
            ++result.dropped_statements;
            continue;
        }
        Edge& e = builder.add("wd:" + cells[0], rel->second, "wd:" + cells[3]);
        if (!cells[1].empty()) e.node1_labels = {cells[1]};
        if (!cells[4].empty()) e.node2_labels = {cells[4]};
        detail::set_relation_label(e);
        e.sources = {"WD"};
    }
    result.table = builder.take();
    return result;
}

// ---------------------------------------------------------------------------
// WordNet: `synset \t relation \t synset` with the four taxonomic relations
// collapsing onto three.

inline EdgeTable import_wordnet(const std::string& dump_path) {
    EdgeTableBuilder builder;
    auto lines = split_lines(read_file(dump_path));
    for (size_t i = 0; i < lines.size(); ++i) {
        if (detail::is_comment_or_blank(lines[i])) continue;
        const std::string where = dump_path + ": line " + std::to_string(i + 1);
        auto cells = detail::require_columns(lines[i], 3, where);
        auto rel = wordnet_relation_map().find(cells[1]);
        if (rel == wordnet_relation_map().end()) {
            throw ValidationError(where + ": unknown synset relation '" + cells[1] + "'");
        }
        Edge& e = builder.add("wn:" + cells[0], rel->second, "wn:" + cells[2]);
        e.node1_labels = {synset_label(cells[0])};
        e.node2_labels = {synset_label(cells[2])};
        detail::set_relation_label(e);
        e.sources = {"WN"};
    }
    return builder.take();
}

}  // namespace kgfuse
