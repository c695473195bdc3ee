#pragma once
// Evidence retrieval for question answering: surface n-gram concept
// extraction against the graph's label index (longest match wins) and
// retrieval of edges connecting question concepts to answer concepts.

#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "kgfuse/edge.hpp"
#include "kgfuse/graph.hpp"
#include "kgfuse/util.hpp"

namespace kgfuse {

// Default stopword list; a custom one can be loaded from a file.
inline const std::set<std::string>& default_stopwords() {
    static const std::set<std::string> words = {
        "a",    "an",    "and",  "are",  "as",    "at",   "be",    "been",  "but",
        "by",   "did",   "do",   "does", "for",   "from", "had",   "has",   "have",
        "he",   "her",   "his",  "how",  "i",     "if",   "in",    "into",  "is",
        "it",   "its",   "me",   "my",   "no",    "not",  "of",    "on",    "or",
        "our",  "she",   "so",   "that", "the",   "their", "them", "then",  "there",
        "these", "they", "this", "those", "to",   "was",  "we",    "were",  "what",
        "when", "where", "which", "who",  "whom", "why",  "will",  "with",  "would",
        "you",  "your",
    };
    return words;
}

inline std::set<std::string> load_stopwords(const std::string& path) {
    std::set<std::string> words;
    for (const auto& line : split_lines(read_file(path))) {
        std::string w = normalize_label(line);
        if (!w.empty() && w[0] != '#') words.insert(w);
    }
    return words;
}

namespace detail {

inline std::vector<std::string> content_tokens(const std::string& text,
                                               const std::set<std::string>& stopwords) {
    std::vector<std::string> tokens;
    std::string cur;
    auto flush = [&]() {
        if (!cur.empty()) {
            if (!stopwords.count(cur)) tokens.push_back(cur);
            cur.clear();
        }
    };
    for (char c : to_lower_ascii(text)) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

}  // namespace detail

// All nodes whose normalized label equals some n-gram of the text
// (stopwords removed first). An n-gram that matches suppresses every
// strictly shorter n-gram nested inside its span.
inline std::set<NodeId> extract_concepts(const std::string& text, const Graph& graph,
                                         size_t max_ngram = 3,
                                         const std::set<std::string>& stopwords =
                                             default_stopwords()) {
    std::vector<std::string> tokens = detail::content_tokens(text, stopwords);
    struct Span {
        size_t begin;
        size_t end;  // exclusive
        std::string gram;
    };
    std::vector<Span> matches;
    for (size_t n = 1; n <= max_ngram; ++n) {
        if (n > tokens.size()) break;
        for (size_t i = 0; i + n <= tokens.size(); ++i) {
            std::string gram = tokens[i];
            for (size_t k = 1; k < n; ++k) gram += " " + tokens[i + k];
            if (graph.has_label(gram)) matches.push_back({i, i + n, gram});
        }
    }
    std::set<NodeId> concepts;
    for (const Span& s : matches) {
        bool suppressed = false;
        for (const Span& longer : matches) {
            if (longer.end - longer.begin > s.end - s.begin && longer.begin <= s.begin &&
                s.end <= longer.end) {
                suppressed = true;
                break;
            }
        }
        if (suppressed) continue;
        for (size_t node : graph.nodes_with_label(s.gram)) {
            concepts.insert(graph.node(node));
        }
    }
    return concepts;
}

struct QAItem {
    std::string question;
    std::vector<std::string> answers;
};

// JSON lines: {"question": ..., "answers": [...]}.
inline std::vector<QAItem> read_qa_items(const std::string& path) {
    std::vector<QAItem> items;
    auto lines = split_lines(read_file(path));
    for (size_t i = 0; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        const std::string where = path + ": line " + std::to_string(i + 1);
        nlohmann::json row = nlohmann::json::parse(lines[i], nullptr, false);
        if (row.is_discarded() || !row.contains("question") || !row.contains("answers") ||
            !row["answers"].is_array() || row["answers"].empty()) {
            throw ValidationError(where + ": expected {\"question\": ..., \"answers\": [...]}");
        }
        QAItem item;
        item.question = row["question"].get<std::string>();
        for (const auto& a : row["answers"]) item.answers.push_back(a.get<std::string>());
        items.push_back(std::move(item));
    }
    return items;
}

struct GroundingResult {
    QAItem item;
    // union over answers, deduplicated, in table order
    std::vector<Edge> triples;
    // per answer: count of distinct evidence triples for that answer
    std::vector<size_t> per_answer_counts;
    // sum of per-answer counts (triples shared between answers count per answer)
    size_t per_answer_total = 0;
};

// Evidence triples: edges, in either direction, with one endpoint matched
// from the question and the other from one of the answers.
inline GroundingResult retrieve_evidence(const Graph& graph, const QAItem& item,
                                         size_t max_ngram = 3,
                                         const std::set<std::string>& stopwords =
                                             default_stopwords()) {
    GroundingResult result;
    result.item = item;
    std::set<NodeId> question_concepts =
        extract_concepts(item.question, graph, max_ngram, stopwords);
    std::set<size_t> union_edges;
    for (const std::string& answer : item.answers) {
        std::set<NodeId> answer_concepts = extract_concepts(answer, graph, max_ngram, stopwords);
        std::set<size_t> answer_edges;
        for (size_t ei = 0; ei < graph.edge_count(); ++ei) {
            const Edge& e = graph.edge(ei);
            bool q1 = question_concepts.count(e.node1) > 0;
            bool q2 = question_concepts.count(e.node2) > 0;
            bool a1 = answer_concepts.count(e.node1) > 0;
            bool a2 = answer_concepts.count(e.node2) > 0;
            if ((q1 && a2) || (a1 && q2)) answer_edges.insert(ei);
        }
        result.per_answer_counts.push_back(answer_edges.size());
        result.per_answer_total += answer_edges.size();
        union_edges.insert(answer_edges.begin(), answer_edges.end());
    }
    for (size_t ei : union_edges) result.triples.push_back(graph.edge(ei));
    return result;
}

struct DatasetCounts {
    size_t questions = 0;
    size_t triples = 0;            // union-deduplicated per question
    size_t triples_per_answer = 0;  // per-answer sums (shared triples count per answer)
};

inline DatasetCounts count_dataset(const Graph& graph, const std::vector<QAItem>& items,
                                   size_t max_ngram = 3,
                                   const std::set<std::string>& stopwords =
                                       default_stopwords()) {
    DatasetCounts counts;
    counts.questions = items.size();
    for (const QAItem& item : items) {
        GroundingResult r = retrieve_evidence(graph, item, max_ngram, stopwords);
        counts.triples += r.triples.size();
        counts.triples_per_answer += r.per_answer_total;
    }
    return counts;
}

}  // namespace kgfuse
