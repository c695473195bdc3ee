#pragma once
// Word-association evaluation: per-stimulus retrieval from an embedding
// table, optional edit-similarity filtering of near-duplicate surface
// forms, and MAP / NDCG over frequency-ordered gold association lists.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "kgfuse/embeddings.hpp"
#include "kgfuse/graph.hpp"
#include "kgfuse/linker.hpp"
#include "kgfuse/util.hpp"

namespace kgfuse {

struct BenchmarkEntry {
    std::string stimulus;
    std::vector<std::string> gold;  // ordered descending by association frequency
};

struct AssociationBenchmark {
    std::vector<BenchmarkEntry> entries;
};

// TSV: `stimulus \t assoc1|assoc2|...` in gold order.
inline AssociationBenchmark read_benchmark(const std::string& path) {
    AssociationBenchmark bench;
    auto lines = split_lines(read_file(path));
    for (size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty() || lines[i][0] == '#') continue;
        const std::string where = path + ": line " + std::to_string(i + 1);
        auto cells = split(lines[i], '\t');
        if (cells.size() != 2) throw ValidationError(where + ": expected 2 columns");
        BenchmarkEntry entry;
        entry.stimulus = cells[0];
        entry.gold = detail::split_multivalue(cells[1]);
        if (entry.stimulus.empty() || entry.gold.empty() ||
            (entry.gold.size() == 1 && entry.gold[0].empty())) {
            throw ValidationError(where + ": stimulus and gold list must be non-empty");
        }
        std::unordered_set<std::string> seen;
        for (const auto& g : entry.gold) {
            if (!seen.insert(normalize_label(g)).second) {
                throw ValidationError(where + ": duplicate gold item '" + g + "'");
            }
        }
        bench.entries.push_back(std::move(entry));
    }
    return bench;
}

struct EvalConfig {
    // drop candidates whose edit similarity to the stimulus exceeds this;
    // unset keeps everything
    std::optional<double> levenshtein_threshold;
};

// Top-K associated labels for a stimulus: nearest neighbors of the
// stimulus vector, excluding nodes carrying the stimulus label, one label
// per node, de-duplicated, edit-filtered, first K.
inline std::vector<std::string> predict_associations(const EmbeddingTable& table,
                                                     const Graph& graph,
                                                     const std::string& stimulus, size_t K,
                                                     const EvalConfig& config) {
    std::vector<double> query = label_vector(table, graph, stimulus);
    std::unordered_set<NodeId> exclude;
    for (size_t n : graph.nodes_with_label(stimulus)) exclude.insert(graph.node(n));
    std::vector<Neighbor> neighbors =
        nearest_neighbors(table, query, table.node_vectors.size(), exclude);
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    for (const Neighbor& nb : neighbors) {
        if (out.size() >= K) break;
        long idx = graph.index_of(nb.node);
        if (idx < 0) continue;
        std::string label = graph.display_label(static_cast<size_t>(idx));
        if (config.levenshtein_threshold &&
            levenshtein_similarity(normalize_label(stimulus), normalize_label(label)) >
                *config.levenshtein_threshold) {
            continue;
        }
        if (seen.insert(normalize_label(label)).second) out.push_back(label);
    }
    return out;
}

// AP = (1/|gold|) * sum over hit positions of precision@position.
// Membership is case-insensitive; repeated predictions of the same item
// only score at their first occurrence.
inline double average_precision(const std::vector<std::string>& gold,
                                const std::vector<std::string>& predicted) {
    if (gold.empty()) throw ValidationError("average_precision requires a non-empty gold set");
    std::unordered_set<std::string> gold_set;
    for (const auto& g : gold) gold_set.insert(normalize_label(g));
    std::unordered_set<std::string> used;
    double sum = 0.0;
    size_t hits = 0;
    for (size_t i = 0; i < predicted.size(); ++i) {
        std::string item = normalize_label(predicted[i]);
        if (gold_set.count(item) && used.insert(item).second) {
            ++hits;
            sum += static_cast<double>(hits) / static_cast<double>(i + 1);
        }
    }
    return sum / static_cast<double>(gold_set.size());
}

// Graded relevance is the inverse gold rank: the first gold item is worth
// |gold|, the last is worth 1, absent items 0. Repeated predictions only
// score once.
inline double ndcg(const std::vector<std::string>& gold,
                   const std::vector<std::string>& predicted) {
    if (gold.empty()) throw ValidationError("ndcg requires a non-empty gold list");
    std::map<std::string, double> relevance;
    for (size_t i = 0; i < gold.size(); ++i) {
        relevance.emplace(normalize_label(gold[i]), static_cast<double>(gold.size() - i));
    }
    auto discount = [](size_t position) { return std::log2(static_cast<double>(position) + 1.0); };
    std::unordered_set<std::string> used;
    double dcg = 0.0;
    for (size_t i = 0; i < predicted.size(); ++i) {
        std::string item = normalize_label(predicted[i]);
        auto it = relevance.find(item);
        if (it != relevance.end() && used.insert(item).second) dcg += it->second / discount(i + 1);
    }
    double idcg = 0.0;
    for (size_t i = 0; i < gold.size(); ++i) {
        idcg += static_cast<double>(gold.size() - i) / discount(i + 1);
    }
    return dcg / idcg;
}

struct StimulusResult {
    std::string stimulus;
    std::vector<std::string> predicted;
    double ap = 0.0;
    double ndcg = 0.0;
};

struct EvalReport {
    double map = 0.0;
    double mean_ndcg = 0.0;
    size_t evaluated = 0;
    size_t skipped = 0;  // stimuli with no resolvable node, excluded from means
    std::vector<StimulusResult> per_stimulus;
    std::vector<std::string> skipped_stimuli;
};

// K follows the per-stimulus gold size. Aggregation is done in sorted
// stimulus order so the report is invariant to benchmark entry order.
inline EvalReport evaluate(const EmbeddingTable& table, const Graph& graph,
                           const AssociationBenchmark& bench, const EvalConfig& config) {
    if (bench.entries.empty()) throw ValidationError("empty association benchmark");
    EvalReport report;
    std::vector<const BenchmarkEntry*> ordered;
    ordered.reserve(bench.entries.size());
    for (const auto& e : bench.entries) ordered.push_back(&e);
    std::sort(ordered.begin(), ordered.end(),
              [](const BenchmarkEntry* a, const BenchmarkEntry* b) {
                  return a->stimulus < b->stimulus;
              });
    double ap_sum = 0.0;
    double ndcg_sum = 0.0;
    for (const BenchmarkEntry* entry : ordered) {
        if (graph.nodes_with_label(entry->stimulus).empty()) {
            ++report.skipped;
            report.skipped_stimuli.push_back(entry->stimulus);
            continue;
        }
        StimulusResult r;
        r.stimulus = entry->stimulus;
        r.predicted = predict_associations(table, graph, entry->stimulus, entry->gold.size(),
                                           config);
        r.ap = average_precision(entry->gold, r.predicted);
        r.ndcg = ndcg(entry->gold, r.predicted);
        ap_sum += r.ap;
        ndcg_sum += r.ndcg;
        report.per_stimulus.push_back(std::move(r));
    }
    report.evaluated = report.per_stimulus.size();
    if (report.evaluated > 0) {
        report.map = ap_sum / static_cast<double>(report.evaluated);
        report.mean_ndcg = ndcg_sum / static_cast<double>(report.evaluated);
    }
    return report;
}

}  // namespace kgfuse
