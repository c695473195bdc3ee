#pragma once
// Source tags, node namespaces, the consolidated relation vocabulary, and
// label derivation for relation ids.

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "kgfuse/util.hpp"

namespace kgfuse {

// Closed set of source tags used in the `source` column.
enum class SourceTag { CN, AT, FN, RG, VG, WD, WN };

inline constexpr std::array<SourceTag, 7> kAllSources = {
    SourceTag::CN, SourceTag::AT, SourceTag::FN, SourceTag::RG,
    SourceTag::VG, SourceTag::WD, SourceTag::WN};

inline const char* source_tag_name(SourceTag t) {
    switch (t) {
        case SourceTag::CN: return "CN";
        case SourceTag::AT: return "AT";
        case SourceTag::FN: return "FN";
        case SourceTag::RG: return "RG";
        case SourceTag::VG: return "VG";
        case SourceTag::WD: return "WD";
        case SourceTag::WN: return "WN";
    }
    return "?";
}

inline std::optional<SourceTag> parse_source_tag(std::string_view s) {
    for (SourceTag t : kAllSources) {
        if (s == source_tag_name(t)) return t;
    }
    return std::nullopt;
}

// The namespace prefix of a node id identifies its vocabulary of origin.
inline std::optional<SourceTag> namespace_source(std::string_view node_id) {
    if (node_id.rfind("/c/", 0) == 0) return SourceTag::CN;
    if (node_id.rfind("at:", 0) == 0) return SourceTag::AT;
    if (node_id.rfind("fn:", 0) == 0) return SourceTag::FN;
    if (node_id.rfind("rg:", 0) == 0) return SourceTag::RG;
    if (node_id.rfind("vg:", 0) == 0) return SourceTag::VG;
    if (node_id.rfind("wd:", 0) == 0) return SourceTag::WD;
    if (node_id.rfind("wn:", 0) == 0) return SourceTag::WN;
    return std::nullopt;
}

// Canonical-node preference when merging identity classes. Lower is better.
// Unknown namespaces sort last.
inline int merge_priority(std::string_view node_id) {
    auto src = namespace_source(node_id);
    if (!src) return 7;
    switch (*src) {
        case SourceTag::CN: return 0;
        case SourceTag::WN: return 1;
        case SourceTag::WD: return 2;
        case SourceTag::FN: return 3;
        case SourceTag::RG: return 4;
        case SourceTag::VG: return 5;
        case SourceTag::AT: return 6;
    }
    return 7;
}

inline constexpr std::string_view kSameAsRelation = "mw:SameAs";
inline constexpr std::string_view kMayHavePropertyRelation = "mw:MayHaveProperty";
inline constexpr std::string_view kHasLexicalUnitRelation = "fn:HasLexicalUnit";

// ConceptNet 5.7 relation inventory (47 relations).
inline const std::set<std::string>& conceptnet_relations() {
    static const std::set<std::string> rels = {
        "/r/RelatedTo", "/r/FormOf", "/r/IsA", "/r/PartOf", "/r/HasA",
        "/r/UsedFor", "/r/CapableOf", "/r/AtLocation", "/r/Causes",
        "/r/HasSubevent", "/r/HasFirstSubevent", "/r/HasLastSubevent",
        "/r/HasPrerequisite", "/r/HasProperty", "/r/MotivatedByGoal",
        "/r/ObstructedBy", "/r/Desires", "/r/CreatedBy", "/r/Synonym",
        "/r/Antonym", "/r/DistinctFrom", "/r/DerivedFrom", "/r/SymbolOf",
        "/r/DefinedAs", "/r/MannerOf", "/r/LocatedNear", "/r/HasContext",
        "/r/SimilarTo", "/r/EtymologicallyRelatedTo",
        "/r/EtymologicallyDerivedFrom", "/r/CausesDesire", "/r/MadeOf",
        "/r/ReceivesAction", "/r/ExternalURL", "/r/NotDesires",
        "/r/NotCapableOf", "/r/NotHasProperty", "/r/dbpedia/capital",
        "/r/dbpedia/field", "/r/dbpedia/genre", "/r/dbpedia/genus",
        "/r/dbpedia/influencedBy", "/r/dbpedia/knownFor",
        "/r/dbpedia/language", "/r/dbpedia/leader", "/r/dbpedia/occupation",
        "/r/dbpedia/product",
    };
    return rels;
}

inline const std::set<std::string>& atomic_relations() {
    static const std::set<std::string> rels = {
        "at:xIntent", "at:xNeed", "at:xAttr", "at:xEffect", "at:xReact",
        "at:xWant",   "at:oEffect", "at:oReact", "at:oWant",
    };
    return rels;
}

// The consolidated vocabulary: 58 relations (47 ConceptNet + 9 event
// relations + mw:MayHaveProperty + fn:HasLexicalUnit). mw:SameAs is only
// valid pre-merge, so `include_sameas` selects the 59-relation variant.
inline std::set<std::string> relation_allowlist(bool include_sameas = false) {
    std::set<std::string> rels = conceptnet_relations();
    rels.insert(atomic_relations().begin(), atomic_relations().end());
    rels.insert(std::string(kMayHavePropertyRelation));
    rels.insert(std::string(kHasLexicalUnitRelation));
    if (include_sameas) rels.insert(std::string(kSameAsRelation));
    return rels;
}

inline std::set<std::string> load_relation_allowlist(const std::string& path) {
    std::set<std::string> rels;
    for (const auto& line : split_lines(read_file(path))) {
        std::string r = trim(line);
        if (!r.empty() && r[0] != '#') rels.insert(r);
    }
    return rels;
}

// Human-readable label derived from a relation id: take the last path or
// namespace segment and split camel case, e.g. /r/UsedFor -> "used for".
inline std::string derive_relation_label(std::string_view relation) {
    size_t pos = relation.find_last_of("/:");
    std::string_view tail = pos == std::string_view::npos ? relation : relation.substr(pos + 1);
    std::string out;
    for (size_t i = 0; i < tail.size(); ++i) {
        char c = tail[i];
        if (std::isupper(static_cast<unsigned char>(c))) {
            if (i > 0 && !std::isupper(static_cast<unsigned char>(tail[i - 1]))) out.push_back(' ');
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        } else if (c == '_') {
            out.push_back(' ');
        } else {
            out.push_back(c);
        }
    }
    return collapse_whitespace(out);
}

}  // namespace kgfuse
