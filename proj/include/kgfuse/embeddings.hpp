#pragma once
// Graph embeddings (translation, bilinear-diagonal, complex bilinear, and
// full bilinear scoring) trained with SGD on a logistic loss over uniformly
// corrupted negatives, plus neighborhood-sentence text embeddings and
// cosine nearest-neighbor search.
//
// Training is single-threaded and byte-deterministic for a fixed seed by
// default; an opt-in sharded mode trades determinism for speed.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "kgfuse/encoder.hpp"
#include "kgfuse/graph.hpp"
#include "kgfuse/linker.hpp"
#include "kgfuse/util.hpp"

namespace kgfuse {

enum class EmbeddingModel { translation, bilinear_diag, complex_bilinear, bilinear, text };

inline const char* embedding_model_name(EmbeddingModel m) {
    switch (m) {
        case EmbeddingModel::translation: return "transe";
        case EmbeddingModel::bilinear_diag: return "distmult";
        case EmbeddingModel::complex_bilinear: return "complex";
        case EmbeddingModel::bilinear: return "rescal";
        case EmbeddingModel::text: return "text";
    }
    return "?";
}

inline EmbeddingModel parse_embedding_model(const std::string& name) {
    if (name == "transe") return EmbeddingModel::translation;
    if (name == "distmult") return EmbeddingModel::bilinear_diag;
    if (name == "complex") return EmbeddingModel::complex_bilinear;
    if (name == "rescal") return EmbeddingModel::bilinear;
    if (name == "text") return EmbeddingModel::text;
    throw ValidationError("unknown embedding model '" + name + "'");
}

// Relation parameters are a d-vector for all models except the full
// bilinear one, which uses a flattened d x d matrix.
inline size_t relation_param_size(EmbeddingModel model, size_t dimension) {
    return model == EmbeddingModel::bilinear ? dimension * dimension : dimension;
}

inline double score(EmbeddingModel model, const std::vector<double>& h,
                    const std::vector<double>& r, const std::vector<double>& t) {
    const size_t d = h.size();
    if (t.size() != d || r.size() != relation_param_size(model, d)) {
        throw ValidationError("embedding dimension mismatch");
    }
    switch (model) {
        case EmbeddingModel::translation: {
            double s = 0.0;
            for (size_t i = 0; i < d; ++i) s += (h[i] + r[i]) * t[i];
            return s;
        }
        case EmbeddingModel::bilinear_diag: {
            double s = 0.0;
            for (size_t i = 0; i < d; ++i) s += h[i] * r[i] * t[i];
            return s;
        }
        case EmbeddingModel::complex_bilinear: {
            if (d % 2 != 0) throw ValidationError("complex model needs an even dimension");
            const size_t m = d / 2;
            double s = 0.0;
            for (size_t j = 0; j < m; ++j) {
                double a = h[j], b = h[m + j];
                double c = r[j], dd = r[m + j];
                double e = t[j], f = t[m + j];
                s += (a * c - b * dd) * e + (a * dd + b * c) * f;
            }
            return s;
        }
        case EmbeddingModel::bilinear: {
            double s = 0.0;
            for (size_t i = 0; i < d; ++i) {
                double hi = h[i];
                if (hi == 0.0) continue;
                const double* row = r.data() + i * d;
                double acc = 0.0;
                for (size_t j = 0; j < d; ++j) acc += row[j] * t[j];
                s += hi * acc;
            }
            return s;
        }
        case EmbeddingModel::text:
            throw ValidationError("text embeddings have no triple score");
    }
    return 0.0;
}

// d(score)/d(h), d(score)/d(r), d(score)/d(t) accumulated into the given
// buffers scaled by `coeff` (the upstream loss gradient).
inline void accumulate_score_gradients(EmbeddingModel model, const std::vector<double>& h,
                                       const std::vector<double>& r,
                                       const std::vector<double>& t, double coeff,
                                       std::vector<double>& gh, std::vector<double>& gr,
                                       std::vector<double>& gt) {
    const size_t d = h.size();
    switch (model) {
        case EmbeddingModel::translation:
            for (size_t i = 0; i < d; ++i) {
                gh[i] += coeff * t[i];
                gr[i] += coeff * t[i];
                gt[i] += coeff * (h[i] + r[i]);
            }
            break;
        case EmbeddingModel::bilinear_diag:
            for (size_t i = 0; i < d; ++i) {
                gh[i] += coeff * r[i] * t[i];
                gr[i] += coeff * h[i] * t[i];
                gt[i] += coeff * h[i] * r[i];
            }
            break;
        case EmbeddingModel::complex_bilinear: {
            const size_t m = d / 2;
            for (size_t j = 0; j < m; ++j) {
                double a = h[j], b = h[m + j];
                double c = r[j], dd = r[m + j];
                double e = t[j], f = t[m + j];
                gh[j] += coeff * (c * e + dd * f);
                gh[m + j] += coeff * (-dd * e + c * f);
                gr[j] += coeff * (a * e + b * f);
                gr[m + j] += coeff * (-b * e + a * f);
                gt[j] += coeff * (a * c - b * dd);
                gt[m + j] += coeff * (a * dd + b * c);
            }
            break;
        }
        case EmbeddingModel::bilinear:
            for (size_t i = 0; i < d; ++i) {
                const double* row = r.data() + i * d;
                double rt = 0.0;
                for (size_t j = 0; j < d; ++j) {
                    rt += row[j] * t[j];
                    gr[i * d + j] += coeff * h[i] * t[j];
                    gt[j] += coeff * h[i] * row[j];
                }
                gh[i] += coeff * rt;
            }
            break;
        case EmbeddingModel::text:
            break;
    }
}

inline double softplus(double x) {
    // numerically stable log(1 + e^x)
    if (x > 35.0) return x;
    if (x < -35.0) return std::exp(x);
    return std::log1p(std::exp(x));
}

inline double sigmoid(double x) {
    if (x >= 0.0) {
        double z = std::exp(-x);
        return 1.0 / (1.0 + z);
    }
    double z = std::exp(x);
    return z / (1.0 + z);
}

struct TrainConfig {
    size_t dimension = 100;
    double learning_rate = 0.1;
    size_t epochs = 100;
    size_t negatives_per_positive = 10;
    uint64_t seed = 1;
    size_t threads = 1;  // >1 enables the non-deterministic sharded mode
};

struct EmbeddingTable {
    std::string model;
    size_t dimension = 0;
    std::map<NodeId, std::vector<double>> node_vectors;
    std::map<RelationId, std::vector<double>> relation_params;
    std::vector<double> epoch_losses;  // mean logistic loss per epoch

    const std::vector<double>& vector_of(const NodeId& node) const {
        auto it = node_vectors.find(node);
        if (it == node_vectors.end()) throw ValidationError("no embedding for node: " + node);
        return it->second;
    }
};

namespace detail {

struct Triple {
    size_t head;
    size_t rel;
    size_t tail;
};

// Deterministic bounded draw; modulo bias is irrelevant at these scales.
inline size_t draw(std::mt19937_64& rng, size_t bound) {
    return static_cast<size_t>(rng() % bound);
}

struct TrainingData {
    std::vector<NodeId> nodes;
    std::vector<RelationId> relations;
    std::vector<Triple> triples;
};

inline TrainingData training_data(const Graph& graph) {
    TrainingData data;
    data.nodes = graph.nodes();
    std::map<RelationId, size_t> rel_index;
    for (const Edge& e : graph.table().edges) rel_index.emplace(e.relation, 0);
    size_t next = 0;
    for (auto& [rel, idx] : rel_index) {
        idx = next++;
        data.relations.push_back(rel);
    }
    data.triples.reserve(graph.edge_count());
    for (size_t ei = 0; ei < graph.edge_count(); ++ei) {
        auto [u, v] = graph.edge_endpoints(ei);
        data.triples.push_back({u, rel_index[graph.edge(ei).relation], v});
    }
    return data;
}

class Parameters {
public:
    Parameters(EmbeddingModel model, size_t dim, size_t nodes, size_t relations, uint64_t seed)
        : model_(model), dim_(dim), rel_size_(relation_param_size(model, dim)) {
        std::mt19937_64 rng(seed);
        const double bound = 0.5 / std::sqrt(static_cast<double>(dim));
        auto init = [&](std::vector<double>& v, size_t n) {
            v.resize(n);
            for (double& x : v) {
                // uniform in [-bound, bound]
                x = (static_cast<double>(rng()) / static_cast<double>(UINT64_MAX) * 2.0 - 1.0) *
                    bound;
            }
        };
        init(node_params_, nodes * dim);
        init(rel_params_, relations * rel_size_);
    }

    std::vector<double> node_vec(size_t i) const {
        return {node_params_.begin() + static_cast<long>(i * dim_),
                node_params_.begin() + static_cast<long>((i + 1) * dim_)};
    }
    std::vector<double> rel_vec(size_t i) const {
        return {rel_params_.begin() + static_cast<long>(i * rel_size_),
                rel_params_.begin() + static_cast<long>((i + 1) * rel_size_)};
    }
    void apply_node(size_t i, const std::vector<double>& grad, double lr) {
        double* p = node_params_.data() + i * dim_;
        for (size_t k = 0; k < dim_; ++k) p[k] -= lr * grad[k];
    }
    void apply_rel(size_t i, const std::vector<double>& grad, double lr) {
        double* p = rel_params_.data() + i * rel_size_;
        for (size_t k = 0; k < rel_size_; ++k) p[k] -= lr * grad[k];
    }

    EmbeddingModel model_;
    size_t dim_;
    size_t rel_size_;
    std::vector<double> node_params_;
    std::vector<double> rel_params_;
};

// One SGD step on (h, r, t) with target y (+1 positive, -1 negative).
// Returns the loss at the current parameters.
inline double sgd_step(Parameters& params, const Triple& triple, double y, double lr) {
    std::vector<double> h = params.node_vec(triple.head);
    std::vector<double> r = params.rel_vec(triple.rel);
    std::vector<double> t = params.node_vec(triple.tail);
    double s = score(params.model_, h, r, t);
    double loss = softplus(-y * s);
    double g = -y * sigmoid(-y * s);
    std::vector<double> gh(h.size(), 0.0), gr(r.size(), 0.0), gt(t.size(), 0.0);
    accumulate_score_gradients(params.model_, h, r, t, g, gh, gr, gt);
    if (triple.head == triple.tail) {
        // self-loop: head and tail share storage, so fold the gradients
        for (size_t k = 0; k < gh.size(); ++k) gh[k] += gt[k];
        params.apply_node(triple.head, gh, lr);
    } else {
        params.apply_node(triple.head, gh, lr);
        params.apply_node(triple.tail, gt, lr);
    }
    params.apply_rel(triple.rel, gr, lr);
    return loss;
}

inline double train_shard(Parameters& params, const std::vector<Triple>& triples,
                          size_t begin, size_t end, size_t node_count,
                          const TrainConfig& config, uint64_t rng_seed) {
    std::mt19937_64 rng(rng_seed);
    double loss_sum = 0.0;
    for (size_t i = begin; i < end; ++i) {
        const Triple& pos = triples[i];
        loss_sum += sgd_step(params, pos, +1.0, config.learning_rate);
        for (size_t nn = 0; nn < config.negatives_per_positive; ++nn) {
            Triple neg = pos;
            if (draw(rng, 2) == 0) {
                neg.head = draw(rng, node_count);
            } else {
                neg.tail = draw(rng, node_count);
            }
            loss_sum += sgd_step(params, neg, -1.0, config.learning_rate);
        }
    }
    return loss_sum;
}

}  // namespace detail

inline EmbeddingTable train(const Graph& graph, EmbeddingModel model, const TrainConfig& config) {
    if (graph.node_count() == 0) throw ValidationError("cannot train on an empty graph");
    if (graph.edge_count() == 0) throw ValidationError("cannot train on a graph with no edges");
    if (model == EmbeddingModel::text) {
        throw ValidationError("text embeddings are produced by encode, not trained");
    }
    if (model == EmbeddingModel::complex_bilinear && config.dimension % 2 != 0) {
        throw ValidationError("complex model needs an even dimension");
    }
    const detail::TrainingData data = detail::training_data(graph);
    detail::Parameters params(model, config.dimension, data.nodes.size(), data.relations.size(),
                              config.seed);

    EmbeddingTable table;
    table.model = embedding_model_name(model);
    table.dimension = config.dimension;

    const size_t samples_per_epoch = data.triples.size() * (1 + config.negatives_per_positive);
    for (size_t epoch = 0; epoch < config.epochs; ++epoch) {
        double loss_sum = 0.0;
        if (config.threads <= 1) {
            loss_sum = detail::train_shard(params, data.triples, 0, data.triples.size(),
                                           data.nodes.size(), config,
                                           config.seed + 0x51ED2701ULL * (epoch + 1));
        } else {
            const size_t nthreads = std::min(config.threads, data.triples.size());
            std::vector<double> shard_loss(nthreads, 0.0);
            std::vector<std::thread> workers;
            const size_t chunk = (data.triples.size() + nthreads - 1) / nthreads;
            for (size_t w = 0; w < nthreads; ++w) {
                workers.emplace_back([&, w]() {
                    size_t begin = w * chunk;
                    size_t end = std::min(begin + chunk, data.triples.size());
                    shard_loss[w] = detail::train_shard(
                        params, data.triples, begin, end, data.nodes.size(), config,
                        config.seed + 0x51ED2701ULL * (epoch + 1) + w);
                });
            }
            for (auto& t : workers) t.join();
            for (double l : shard_loss) loss_sum += l;
        }
        double mean_loss = loss_sum / static_cast<double>(samples_per_epoch);
        if (!std::isfinite(mean_loss)) {
            throw std::runtime_error(
                "training diverged (loss is not finite); try a lower learning rate");
        }
        table.epoch_losses.push_back(mean_loss);
    }

    for (size_t i = 0; i < data.nodes.size(); ++i) {
        table.node_vectors[data.nodes[i]] = params.node_vec(i);
    }
    for (size_t i = 0; i < data.relations.size(); ++i) {
        table.relation_params[data.relations[i]] = params.rel_vec(i);
    }
    return table;
}

// ---------------------------------------------------------------------------
// Text embeddings over neighborhood sentences

inline constexpr size_t kNeighborhoodCap = 20;

// "<label> <relation-label> <neighbor-label>" units joined by ", " and
// period-terminated; an isolated node is just its label. Outgoing edges
// only, in (relation, neighbor-id) order, capped.
inline std::string neighborhood_sentence(const Graph& graph, size_t node,
                                         size_t cap = kNeighborhoodCap) {
    const std::string label = graph.display_label(node);
    std::vector<std::pair<std::pair<RelationId, NodeId>, size_t>> order;
    for (size_t ei : graph.out_edges(node)) {
        const Edge& e = graph.edge(ei);
        order.push_back({{e.relation, graph.node(graph.edge_endpoints(ei).second)}, ei});
    }
    std::sort(order.begin(), order.end());
    if (order.size() > cap) order.resize(cap);
    if (order.empty()) return label;
    std::vector<std::string> units;
    units.reserve(order.size());
    for (const auto& [key, ei] : order) {
        const Edge& e = graph.edge(ei);
        std::string rel_label = e.relation_labels.empty() ? derive_relation_label(e.relation)
                                                          : e.relation_labels.front();
        std::string neighbor = graph.display_label(graph.edge_endpoints(ei).second);
        units.push_back(label + " " + rel_label + " " + neighbor);
    }
    return join(units, ", ") + ".";
}

inline std::vector<double> text_embed(const Graph& graph, const NodeId& node,
                                      const TextEncoder& encoder) {
    long idx = graph.index_of(node);
    if (idx < 0) throw ValidationError("node not in graph: " + node);
    return encoder.encode(neighborhood_sentence(graph, static_cast<size_t>(idx)));
}

struct TextEmbeddingResult {
    EmbeddingTable table;
    size_t unlabeled_nodes = 0;  // nodes that fell back to their id segment
};

inline TextEmbeddingResult text_embed_all(const Graph& graph, const TextEncoder& encoder) {
    TextEmbeddingResult result;
    result.table.model = "text";
    result.table.dimension = encoder.dimension();
    for (size_t i = 0; i < graph.node_count(); ++i) {
        if (graph.labels(i).empty()) ++result.unlabeled_nodes;
        result.table.node_vectors[graph.node(i)] =
            encoder.encode(neighborhood_sentence(graph, i));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Similarity queries

struct Neighbor {
    NodeId node;
    double cosine;
};

inline std::vector<Neighbor> nearest_neighbors(const EmbeddingTable& table,
                                               const std::vector<double>& query, size_t k,
                                               const std::unordered_set<NodeId>& exclude = {}) {
    if (k < 1) throw ValidationError("nearest_neighbors requires k >= 1");
    if (norm(query) == 0.0) throw ValidationError("nearest_neighbors: query vector has zero norm");
    std::vector<Neighbor> all;
    all.reserve(table.node_vectors.size());
    for (const auto& [node, vec] : table.node_vectors) {
        if (exclude.count(node)) continue;
        all.push_back({node, cosine(query, vec)});
    }
    std::sort(all.begin(), all.end(), [](const Neighbor& a, const Neighbor& b) {
        if (a.cosine != b.cosine) return a.cosine > b.cosine;
        return a.node < b.node;
    });
    if (all.size() > k) all.resize(k);
    return all;
}

// Mean vector of every node carrying the label. Unknown labels report the
// closest known ones to make typos diagnosable.
inline std::vector<double> label_vector(const EmbeddingTable& table, const Graph& graph,
                                        const std::string& label) {
    std::vector<size_t> nodes = graph.nodes_with_label(label);
    if (nodes.empty()) {
        std::set<std::string> all_labels;
        for (size_t i = 0; i < graph.node_count(); ++i) {
            for (const auto& l : graph.labels(i)) all_labels.insert(normalize_label(l));
        }
        std::vector<std::pair<double, std::string>> ranked;
        for (const auto& l : all_labels) {
            ranked.push_back({levenshtein_similarity(normalize_label(label), l), l});
        }
        std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        std::string hint;
        for (size_t i = 0; i < std::min<size_t>(3, ranked.size()); ++i) {
            if (i) hint += ", ";
            hint += "'" + ranked[i].second + "'";
        }
        throw ValidationError("no node carries label '" + label + "'" +
                              (hint.empty() ? "" : "; nearest labels: " + hint));
    }
    std::vector<double> mean(table.dimension, 0.0);
    for (size_t n : nodes) {
        const std::vector<double>& v = table.vector_of(graph.node(n));
        for (size_t i = 0; i < mean.size(); ++i) mean[i] += v[i];
    }
    for (double& x : mean) x /= static_cast<double>(nodes.size());
    return mean;
}

// ---------------------------------------------------------------------------
// Persistence: vectors as TSV (id, space-separated components), metadata as
// a JSON sidecar, relation parameters in a companion TSV.

inline void write_vector_tsv(const std::map<std::string, std::vector<double>>& vectors,
                             const std::string& path) {
    std::string out;
    for (const auto& [id, vec] : vectors) {
        out += id;
        out.push_back('\t');
        for (size_t i = 0; i < vec.size(); ++i) {
            if (i) out.push_back(' ');
            out += format_double(vec[i]);
        }
        out.push_back('\n');
    }
    write_file(path, out);
}

inline std::map<std::string, std::vector<double>> read_vector_tsv(const std::string& path) {
    std::map<std::string, std::vector<double>> vectors;
    auto lines = split_lines(read_file(path));
    for (size_t i = 0; i < lines.size(); ++i) {
        auto cells = split(lines[i], '\t');
        if (cells.size() != 2) {
            throw ValidationError(path + ": line " + std::to_string(i + 1) +
                                  ": expected 2 columns");
        }
        std::vector<double> vec;
        for (const auto& comp : split(cells[1], ' ')) {
            if (comp.empty()) continue;
            vec.push_back(std::stod(comp));
        }
        vectors[cells[0]] = std::move(vec);
    }
    return vectors;
}

inline void save_embedding_table(const EmbeddingTable& table, const std::string& path) {
    write_vector_tsv(table.node_vectors, path);
    if (!table.relation_params.empty()) {
        write_vector_tsv(table.relation_params, path + ".relations.tsv");
    }
    nlohmann::ordered_json meta;
    meta["model"] = table.model;
    meta["dimension"] = table.dimension;
    meta["comparator"] = "dot";
    meta["loss"] = "logistic";
    meta["nodes"] = table.node_vectors.size();
    meta["relations"] = table.relation_params.size();
    if (!table.epoch_losses.empty()) {
        meta["final_mean_loss"] = table.epoch_losses.back();
        meta["epochs"] = table.epoch_losses.size();
    }
    write_file(path + ".meta.json", meta.dump(2) + "\n");
}

inline EmbeddingTable load_embedding_table(const std::string& path) {
    EmbeddingTable table;
    table.node_vectors = read_vector_tsv(path);
    if (table.node_vectors.empty()) throw ValidationError(path + ": no vectors");
    table.dimension = table.node_vectors.begin()->second.size();
    for (const auto& [id, vec] : table.node_vectors) {
        if (vec.size() != table.dimension) {
            throw ValidationError(path + ": inconsistent dimension for node " + id);
        }
    }
    std::ifstream meta_in(path + ".meta.json");
    if (meta_in) {
        nlohmann::json meta = nlohmann::json::parse(meta_in, nullptr, false);
        if (!meta.is_discarded() && meta.contains("model")) {
            table.model = meta["model"].get<std::string>();
        }
    }
    std::ifstream rel_in(path + ".relations.tsv");
    if (rel_in) {
        rel_in.close();
        table.relation_params = read_vector_tsv(path + ".relations.tsv");
    }
    return table;
}

}  // namespace kgfuse
