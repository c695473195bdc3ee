#pragma once
// End-to-end pipeline: a validated config drives import -> link ->
// consolidate -> stats/centrality -> embed -> association eval -> grounding,
// writing one artifact directory. Stages log edge/node counts; outputs are
// byte-stable for a fixed config and seed.

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "kgfuse/analysis.hpp"
#include "kgfuse/consolidate.hpp"
#include "kgfuse/embeddings.hpp"
#include "kgfuse/encoder.hpp"
#include "kgfuse/evaluation.hpp"
#include "kgfuse/graph.hpp"
#include "kgfuse/grounding.hpp"
#include "kgfuse/importers.hpp"
#include "kgfuse/linker.hpp"
#include "kgfuse/util.hpp"

namespace kgfuse {

inline const std::vector<std::string>& importer_names() {
    static const std::vector<std::string> names = {
        "conceptnet", "atomic", "framenet", "roget", "visualgenome", "wikidata", "wordnet"};
    return names;
}

struct AlignmentSpec {
    std::string path;
    std::string left_ns;
    std::string right_ns;
    std::string relation = "sameas";  // sameas | lexunit
};

struct PipelineConfig {
    std::string output_dir = "out";

    std::map<std::string, std::string> source_inputs;  // importer -> dump path
    std::map<std::string, std::string> source_aux;     // importer -> aux path

    bool lexical_linking = true;
    std::vector<AlignmentSpec> alignments;
    std::string fn_corpus_annotations;
    std::string fn_corpus_lexicon;
    std::string embedding_queries;  // TSV: node, description
    std::string embedding_index;    // TSV: node, description
    size_t embedding_link_k = 50;
    double link_min_confidence = 0.0;
    std::string judgments_path;

    double pagerank_damping = 0.85;
    double centrality_tol = 1e-9;
    size_t centrality_max_iter = 100;
    size_t centrality_top = 5;

    std::string embed_model = "transe";
    TrainConfig train;
    size_t encoder_dimension = 128;

    std::string benchmark_path;
    std::optional<double> levenshtein_threshold;

    std::string qa_items_path;
    std::string stopwords_path;
    size_t grounding_max_ngram = 3;
};

namespace detail {

inline std::string resolve_path(const std::filesystem::path& base, const std::string& p) {
    if (p.empty()) return p;
    std::filesystem::path path(p);
    if (path.is_absolute()) return p;
    return (base / path).lexically_normal().string();
}

}  // namespace detail

// Parses the JSON config; relative paths resolve against the config file's
// directory.
inline PipelineConfig load_pipeline_config(const std::string& config_path) {
    nlohmann::json doc = nlohmann::json::parse(read_file(config_path), nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        throw ValidationError(config_path + ": not a JSON object");
    }
    const std::filesystem::path base = std::filesystem::path(config_path).parent_path();
    auto path_of = [&](const nlohmann::json& v) {
        return detail::resolve_path(base, v.get<std::string>());
    };
    PipelineConfig cfg;
    if (doc.contains("output_dir")) cfg.output_dir = path_of(doc["output_dir"]);

    if (doc.contains("sources")) {
        for (const auto& [name, spec] : doc["sources"].items()) {
            if (!contains(importer_names(), name)) {
                throw ValidationError(config_path + ": unknown source '" + name + "'");
            }
            if (!spec.contains("input")) {
                throw ValidationError(config_path + ": source '" + name + "' needs an input");
            }
            cfg.source_inputs[name] = path_of(spec["input"]);
            if (spec.contains("aux")) cfg.source_aux[name] = path_of(spec["aux"]);
        }
    }

    if (doc.contains("linking")) {
        const auto& link = doc["linking"];
        if (link.contains("lexical")) cfg.lexical_linking = link["lexical"].get<bool>();
        if (link.contains("alignments")) {
            for (const auto& a : link["alignments"]) {
                AlignmentSpec spec;
                spec.path = path_of(a.at("path"));
                if (a.contains("left_ns")) spec.left_ns = a["left_ns"].get<std::string>();
                if (a.contains("right_ns")) spec.right_ns = a["right_ns"].get<std::string>();
                if (a.contains("relation")) spec.relation = a["relation"].get<std::string>();
                if (spec.relation != "sameas" && spec.relation != "lexunit") {
                    throw ValidationError(config_path + ": alignment relation must be sameas or lexunit");
                }
                cfg.alignments.push_back(std::move(spec));
            }
        }
        if (link.contains("fn_corpus")) {
            cfg.fn_corpus_annotations = path_of(link["fn_corpus"].at("annotations"));
            cfg.fn_corpus_lexicon = path_of(link["fn_corpus"].at("lexicon"));
        }
        if (link.contains("embedding")) {
            cfg.embedding_queries = path_of(link["embedding"].at("queries"));
            cfg.embedding_index = path_of(link["embedding"].at("index"));
            if (link["embedding"].contains("k")) {
                cfg.embedding_link_k = link["embedding"]["k"].get<size_t>();
            }
        }
        if (link.contains("min_confidence")) {
            cfg.link_min_confidence = link["min_confidence"].get<double>();
        }
        if (link.contains("judgments")) cfg.judgments_path = path_of(link["judgments"]);
    }

    if (doc.contains("analysis")) {
        const auto& a = doc["analysis"];
        if (a.contains("damping")) cfg.pagerank_damping = a["damping"].get<double>();
        if (a.contains("tol")) cfg.centrality_tol = a["tol"].get<double>();
        if (a.contains("max_iter")) cfg.centrality_max_iter = a["max_iter"].get<size_t>();
        if (a.contains("top")) cfg.centrality_top = a["top"].get<size_t>();
    }

    if (doc.contains("embeddings")) {
        const auto& e = doc["embeddings"];
        if (e.contains("model")) cfg.embed_model = e["model"].get<std::string>();
        if (e.contains("dimension")) cfg.train.dimension = e["dimension"].get<size_t>();
        if (e.contains("learning_rate")) cfg.train.learning_rate = e["learning_rate"].get<double>();
        if (e.contains("epochs")) cfg.train.epochs = e["epochs"].get<size_t>();
        if (e.contains("negatives")) {
            cfg.train.negatives_per_positive = e["negatives"].get<size_t>();
        }
        if (e.contains("seed")) cfg.train.seed = e["seed"].get<uint64_t>();
        if (e.contains("threads")) cfg.train.threads = e["threads"].get<size_t>();
        if (e.contains("encoder_dimension")) {
            cfg.encoder_dimension = e["encoder_dimension"].get<size_t>();
        }
    }

    if (doc.contains("evaluation")) {
        const auto& e = doc["evaluation"];
        if (e.contains("benchmark")) cfg.benchmark_path = path_of(e["benchmark"]);
        if (e.contains("levenshtein_threshold") && !e["levenshtein_threshold"].is_null()) {
            cfg.levenshtein_threshold = e["levenshtein_threshold"].get<double>();
        }
    }

    if (doc.contains("grounding")) {
        const auto& g = doc["grounding"];
        if (g.contains("data")) cfg.qa_items_path = path_of(g["data"]);
        if (g.contains("stopwords")) cfg.stopwords_path = path_of(g["stopwords"]);
        if (g.contains("max_ngram")) cfg.grounding_max_ngram = g["max_ngram"].get<size_t>();
    }
    return cfg;
}

// Every referenced input must exist before any stage runs.
inline void validate_pipeline_config(const PipelineConfig& cfg) {
    std::vector<std::string> paths;
    for (const auto& [name, path] : cfg.source_inputs) paths.push_back(path);
    for (const auto& [name, path] : cfg.source_aux) paths.push_back(path);
    for (const auto& a : cfg.alignments) paths.push_back(a.path);
    for (const std::string& p :
         {cfg.fn_corpus_annotations, cfg.fn_corpus_lexicon, cfg.embedding_queries,
          cfg.embedding_index, cfg.judgments_path, cfg.benchmark_path, cfg.qa_items_path,
          cfg.stopwords_path}) {
        if (!p.empty()) paths.push_back(p);
    }
    for (const std::string& p : paths) {
        if (!std::filesystem::exists(p)) {
            throw ValidationError("configured input does not exist: " + p);
        }
    }
    if (cfg.source_inputs.count("visualgenome") && !cfg.source_aux.count("visualgenome")) {
        throw ValidationError("visualgenome requires an aux part-of-speech lexicon");
    }
    if (cfg.source_inputs.count("wikidata") && !cfg.source_aux.count("wikidata")) {
        throw ValidationError("wikidata requires an aux property map");
    }
    if (cfg.source_inputs.empty()) throw ValidationError("no sources configured");
    parse_embedding_model(cfg.embed_model);
}

struct StageFailure : std::runtime_error {
    std::string stage;
    StageFailure(std::string stage_name, const std::string& msg)
        : std::runtime_error("stage '" + stage_name + "' failed: " + msg),
          stage(std::move(stage_name)) {}
};

struct PipelineReport {
    nlohmann::ordered_json consolidation;
    nlohmann::ordered_json stats;
};

namespace detail {

inline nlohmann::ordered_json stats_json(const DegreeStats& s) {
    nlohmann::ordered_json j;
    j["nodes"] = s.nodes;
    j["edges"] = s.edges;
    j["relations"] = s.relations;
    j["avg_degree"] = s.avg_degree;
    j["std_degree"] = s.std_degree;
    return j;
}

inline void write_json(const nlohmann::ordered_json& j, const std::string& path) {
    write_file(path, j.dump(2) + "\n");
}

inline void write_histogram(const std::map<size_t, size_t>& hist, const std::string& path) {
    std::string out = "degree\tcount\n";
    for (const auto& [degree, count] : hist) {
        out += std::to_string(degree) + "\t" + std::to_string(count) + "\n";
    }
    write_file(path, out);
}

}  // namespace detail

// Runs one importer by name; aux is required for visualgenome/wikidata.
inline EdgeTable run_importer(const std::string& name, const std::string& input,
                              const std::string& aux) {
    if (name == "conceptnet") return import_conceptnet(input);
    if (name == "atomic") return import_atomic(input);
    if (name == "framenet") {
        return aux.empty() ? import_framenet(input) : import_framenet(input, load_relation_map(aux));
    }
    if (name == "roget") return import_roget(input);
    if (name == "visualgenome") {
        if (aux.empty()) throw ValidationError("visualgenome requires --aux <pos lexicon>");
        return import_visualgenome(input, aux).table;
    }
    if (name == "wikidata") {
        if (aux.empty()) throw ValidationError("wikidata requires --aux <property map>");
        return import_wikidata_cs(input, aux).table;
    }
    if (name == "wordnet") return import_wordnet(input);
    throw ValidationError("unknown source '" + name + "'");
}

inline nlohmann::ordered_json consolidation_report(const std::vector<EdgeTable>& tables,
                                                   const EdgeTable& links,
                                                   const ConsolidateResult& result) {
    nlohmann::ordered_json report;
    std::map<std::string, std::pair<size_t, size_t>> by_tag;
    for (const EdgeTable& t : tables) {
        std::set<std::string> tags;
        for (const Edge& e : t.edges) tags.insert(e.sources.begin(), e.sources.end());
        std::string key = tags.empty() ? "?" : join({tags.begin(), tags.end()}, "+");
        by_tag[key] = {count_nodes(t), t.size()};
    }
    nlohmann::ordered_json per_source = nlohmann::ordered_json::object();
    for (const auto& [key, counts] : by_tag) {
        per_source[key] = {{"nodes", counts.first}, {"edges", counts.second}};
    }
    report["per_source"] = per_source;
    report["links"] = {{"edges", links.size()}};
    report["star"] = {{"nodes", count_nodes(result.star)}, {"edges", result.star.size()}};
    report["consolidated"] = {{"nodes", count_nodes(result.consolidated)},
                              {"edges", result.consolidated.size()}};
    return report;
}

inline PipelineReport run_pipeline(const PipelineConfig& cfg, std::ostream& log) {
    validate_pipeline_config(cfg);
    namespace fs = std::filesystem;
    const fs::path out(cfg.output_dir);
    fs::create_directories(out / "imported");

    auto stage = [&](const std::string& name, auto&& fn) {
        try {
            fn();
        } catch (const StageFailure&) {
            throw;
        } catch (const std::exception& ex) {
            throw StageFailure(name, ex.what());
        }
    };

    PipelineReport report;

    // import
    std::vector<EdgeTable> tables;
    stage("import", [&]() {
        for (const std::string& name : importer_names()) {
            auto it = cfg.source_inputs.find(name);
            if (it == cfg.source_inputs.end()) continue;
            auto aux_it = cfg.source_aux.find(name);
            EdgeTable t = run_importer(name, it->second,
                                       aux_it == cfg.source_aux.end() ? "" : aux_it->second);
            write_edge_table(t, (out / "imported" / (name + ".tsv")).string());
            log << "[import] " << name << ": " << t.size() << " edges, " << count_nodes(t)
                << " nodes\n";
            tables.push_back(std::move(t));
        }
    });

    // link
    EdgeTable links;
    stage("link", [&]() {
        EdgeTable combined = concatenate(tables);
        std::vector<MappingLink> all;
        if (cfg.lexical_linking) {
            std::vector<MappingLink> lex = link_lexical(combined);
            log << "[link] lexical: " << lex.size() << " links\n";
            all.insert(all.end(), lex.begin(), lex.end());
        }
        for (const AlignmentSpec& a : cfg.alignments) {
            RelationId rel = a.relation == "lexunit" ? std::string(kHasLexicalUnitRelation)
                                                     : std::string(kSameAsRelation);
            TableLinkResult r = link_table(a.path, a.left_ns, a.right_ns, combined, rel);
            log << "[link] table " << a.path << ": " << r.links.size() << " links, "
                << r.skipped << " skipped\n";
            all.insert(all.end(), r.links.begin(), r.links.end());
        }
        if (!cfg.fn_corpus_annotations.empty()) {
            std::vector<MappingLink> fe =
                link_framenet_corpus(cfg.fn_corpus_annotations, cfg.fn_corpus_lexicon);
            log << "[link] frame corpus: " << fe.size() << " links\n";
            all.insert(all.end(), fe.begin(), fe.end());
        }
        if (!cfg.embedding_queries.empty()) {
            InvertedIndex index = InvertedIndex::from_file(cfg.embedding_index);
            std::vector<EmbeddingQuery> queries;
            auto lines = split_lines(read_file(cfg.embedding_queries));
            for (size_t i = 0; i < lines.size(); ++i) {
                if (lines[i].empty() || lines[i][0] == '#') continue;
                auto cells = split(lines[i], '\t');
                if (cells.size() != 2) {
                    throw ValidationError(cfg.embedding_queries + ": line " +
                                          std::to_string(i + 1) + ": expected 2 columns");
                }
                queries.push_back({cells[0], cells[1]});
            }
            BuiltinEncoder encoder(cfg.encoder_dimension);
            std::vector<MappingLink> emb =
                link_by_embedding(queries, index, encoder, cfg.embedding_link_k);
            log << "[link] embedding: " << emb.size() << " links\n";
            all.insert(all.end(), emb.begin(), emb.end());
        }
        if (cfg.link_min_confidence > 0.0 || !cfg.judgments_path.empty()) {
            std::optional<JudgmentList> judgments;
            if (!cfg.judgments_path.empty()) {
                judgments = JudgmentList::from_file(cfg.judgments_path);
            }
            size_t before = all.size();
            all = filter_links(all, cfg.link_min_confidence,
                               judgments ? &*judgments : nullptr);
            log << "[link] filtered: " << before - all.size() << " links removed\n";
        }
        links = links_to_edge_table(all, combined);
        write_edge_table(links, (out / "links.tsv").string());
        log << "[link] total: " << links.size() << " link edges\n";
    });

    // consolidate
    ConsolidateResult consolidated;
    stage("consolidate", [&]() {
        consolidated = consolidate(tables, links);
        write_edge_table(consolidated.star, (out / "cskg_star.tsv").string());
        write_edge_table(consolidated.consolidated, (out / "cskg.tsv").string());
        report.consolidation = consolidation_report(tables, links, consolidated);
        detail::write_json(report.consolidation, (out / "report.json").string());
        log << "[consolidate] star: " << count_nodes(consolidated.star) << " nodes, "
            << consolidated.star.size() << " edges\n";
        log << "[consolidate] merged: " << count_nodes(consolidated.consolidated) << " nodes, "
            << consolidated.consolidated.size() << " edges\n";
    });

    Graph graph;
    stage("stats", [&]() {
        graph = Graph::build(consolidated.consolidated);
        StatsReport stats = degree_stats(graph);
        nlohmann::ordered_json j;
        j["total"] = detail::stats_json(stats.total);
        nlohmann::ordered_json per_source = nlohmann::ordered_json::object();
        for (const auto& [tag, s] : stats.per_source) per_source[tag] = detail::stats_json(s);
        j["per_source"] = per_source;
        report.stats = j;
        detail::write_json(j, (out / "stats.json").string());
        detail::write_histogram(stats.in_degree_histogram, (out / "degree_hist.in.tsv").string());
        detail::write_histogram(stats.out_degree_histogram,
                                (out / "degree_hist.out.tsv").string());
        log << "[stats] avg degree " << stats.total.avg_degree << "\n";
    });

    stage("centrality", [&]() {
        CentralityResult pr = pagerank(graph, cfg.pagerank_damping, cfg.centrality_tol,
                                       cfg.centrality_max_iter);
        HitsResult h = hits(graph, cfg.centrality_tol, cfg.centrality_max_iter);
        auto ranked_json = [&](const std::vector<double>& scores) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const RankedNode& r : top_k(graph, scores, cfg.centrality_top)) {
                arr.push_back({{"node", r.node}, {"label", r.label}, {"score", r.score}});
            }
            return arr;
        };
        nlohmann::ordered_json j;
        j["pagerank"] = {{"converged", pr.converged},
                         {"iterations", pr.iterations},
                         {"top", ranked_json(pr.scores)}};
        j["hits"] = {{"converged", h.converged},
                     {"iterations", h.iterations},
                     {"hubs", ranked_json(h.hubs)},
                     {"authorities", ranked_json(h.authorities)}};
        detail::write_json(j, (out / "centrality.json").string());
        log << "[centrality] pagerank " << (pr.converged ? "converged" : "hit max iterations")
            << " after " << pr.iterations << " iterations\n";
    });

    EmbeddingTable embeddings;
    stage("embed", [&]() {
        EmbeddingModel model = parse_embedding_model(cfg.embed_model);
        if (model == EmbeddingModel::text) {
            BuiltinEncoder encoder(cfg.encoder_dimension, cfg.train.seed);
            TextEmbeddingResult r = text_embed_all(graph, encoder);
            embeddings = std::move(r.table);
            log << "[embed] text vectors for " << embeddings.node_vectors.size() << " nodes ("
                << r.unlabeled_nodes << " unlabeled)\n";
        } else {
            embeddings = train(graph, model, cfg.train);
            log << "[embed] " << cfg.embed_model << " final mean loss "
                << embeddings.epoch_losses.back() << "\n";
        }
        save_embedding_table(embeddings, (out / "emb.tsv").string());
    });

    if (!cfg.benchmark_path.empty()) {
        stage("eval-assoc", [&]() {
            AssociationBenchmark bench = read_benchmark(cfg.benchmark_path);
            EvalConfig eval_config;
            eval_config.levenshtein_threshold = cfg.levenshtein_threshold;
            EvalReport r = evaluate(embeddings, graph, bench, eval_config);
            nlohmann::ordered_json j;
            j["map"] = r.map;
            j["ndcg"] = r.mean_ndcg;
            j["evaluated"] = r.evaluated;
            j["skipped"] = r.skipped;
            j["skipped_stimuli"] = r.skipped_stimuli;
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (const StimulusResult& s : r.per_stimulus) {
                rows.push_back({{"stimulus", s.stimulus},
                                {"ap", s.ap},
                                {"ndcg", s.ndcg},
                                {"predicted", s.predicted}});
            }
            j["per_stimulus"] = rows;
            detail::write_json(j, (out / "eval.json").string());
            log << "[eval-assoc] MAP " << r.map << ", NDCG " << r.mean_ndcg << ", skipped "
                << r.skipped << "\n";
        });
    }

    if (!cfg.qa_items_path.empty()) {
        stage("ground", [&]() {
            std::set<std::string> stopwords = cfg.stopwords_path.empty()
                                                  ? default_stopwords()
                                                  : load_stopwords(cfg.stopwords_path);
            std::vector<QAItem> items = read_qa_items(cfg.qa_items_path);
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            DatasetCounts totals;
            totals.questions = items.size();
            for (const QAItem& item : items) {
                GroundingResult r =
                    retrieve_evidence(graph, item, cfg.grounding_max_ngram, stopwords);
                totals.triples += r.triples.size();
                totals.triples_per_answer += r.per_answer_total;
                rows.push_back({{"question", item.question},
                                {"triples", r.triples.size()},
                                {"per_answer", r.per_answer_counts}});
            }
            nlohmann::ordered_json j;
            j["questions"] = totals.questions;
            j["triples"] = totals.triples;
            j["triples_per_answer"] = totals.triples_per_answer;
            j["items"] = rows;
            detail::write_json(j, (out / "grounding.json").string());
            log << "[ground] " << totals.questions << " questions, " << totals.triples
                << " evidence triples\n";
        });
    }

    return report;
}

}  // namespace kgfuse
