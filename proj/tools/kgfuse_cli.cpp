// Command-line entry point: each pipeline stage is an independently
// invocable subcommand over plain files, and `run` chains them from a
// config. Exit codes: 0 success, 1 validation problem, 2 runtime failure.

#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
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
#include "kgfuse/pipeline.hpp"

namespace {

using namespace kgfuse;

void write_json_file(const nlohmann::ordered_json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        write_file(path, j.dump(2) + "\n");
    }
}

int run_import(const std::string& source, const std::string& input, const std::string& output,
               const std::string& aux) {
    EdgeTable table = run_importer(source, input, aux);
    write_edge_table(table, output);
    std::cout << "[import] " << source << ": " << table.size() << " edges, "
              << count_nodes(table) << " nodes -> " << output << "\n";
    return 0;
}

std::unique_ptr<TextEncoder> make_encoder(const std::string& vectors_path, size_t dim) {
    if (!vectors_path.empty()) return std::make_unique<FileEncoder>(vectors_path);
    return std::make_unique<BuiltinEncoder>(dim);
}

int run_link(const std::string& method, const std::string& graph_path,
             const std::string& output, const std::string& alignment,
             const std::string& left_ns, const std::string& right_ns,
             const std::string& relation, const std::string& queries_path,
             const std::string& index_path, size_t k, double min_confidence,
             const std::string& judgments_path, const std::string& annotations,
             const std::string& lexicon, size_t encoder_dim,
             const std::string& encoder_vectors) {
    EdgeTable context;
    if (!graph_path.empty()) context = read_edge_table(graph_path);
    std::vector<MappingLink> links;
    if (method == "lexical") {
        if (graph_path.empty()) throw ValidationError("lexical linking requires --graph");
        links = link_lexical(context);
    } else if (method == "table") {
        if (graph_path.empty() || alignment.empty()) {
            throw ValidationError("table linking requires --graph and --alignment");
        }
        RelationId rel = relation == "lexunit" ? std::string(kHasLexicalUnitRelation)
                                               : std::string(kSameAsRelation);
        TableLinkResult r = link_table(alignment, left_ns, right_ns, context, rel);
        std::cout << "[link] skipped rows with missing endpoints: " << r.skipped << "\n";
        links = std::move(r.links);
    } else if (method == "embedding") {
        if (queries_path.empty() || index_path.empty()) {
            throw ValidationError("embedding linking requires --queries and --index");
        }
        InvertedIndex index = InvertedIndex::from_file(index_path);
        std::vector<EmbeddingQuery> queries;
        auto lines = split_lines(read_file(queries_path));
        for (size_t i = 0; i < lines.size(); ++i) {
            if (lines[i].empty() || lines[i][0] == '#') continue;
            auto cells = split(lines[i], '\t');
            if (cells.size() != 2) {
                throw ValidationError(queries_path + ": line " + std::to_string(i + 1) +
                                      ": expected 2 columns");
            }
            queries.push_back({cells[0], cells[1]});
        }
        std::unique_ptr<TextEncoder> encoder = make_encoder(encoder_vectors, encoder_dim);
        links = link_by_embedding(queries, index, *encoder, k);
    } else if (method == "fn-corpus") {
        if (annotations.empty() || lexicon.empty()) {
            throw ValidationError("fn-corpus linking requires --annotations and --lexicon");
        }
        links = link_framenet_corpus(annotations, lexicon);
    } else {
        throw ValidationError("unknown link method '" + method + "'");
    }
    if (min_confidence > 0.0 || !judgments_path.empty()) {
        std::optional<JudgmentList> judgments;
        if (!judgments_path.empty()) judgments = JudgmentList::from_file(judgments_path);
        links = filter_links(links, min_confidence, judgments ? &*judgments : nullptr);
    }
    EdgeTable table = links_to_edge_table(links, context);
    write_edge_table(table, output);
    std::cout << "[link] " << method << ": " << table.size() << " link edges -> " << output
              << "\n";
    return 0;
}

int run_consolidate(const std::vector<std::string>& inputs, const std::string& links_path,
                    const std::string& out_star, const std::string& out,
                    const std::string& report_path, const std::string& allowlist_path) {
    std::vector<EdgeTable> tables;
    for (const std::string& path : inputs) tables.push_back(read_edge_table(path));
    EdgeTable links;
    if (!links_path.empty()) links = read_edge_table(links_path);
    ConsolidateResult result = consolidate(tables, links);
    if (!allowlist_path.empty()) {
        // the merged graph must stay in the closed vocabulary; the pre-merge
        // graph may additionally carry identity edges
        std::set<std::string> allow = load_relation_allowlist(allowlist_path);
        check_relation_closure(result.consolidated, allow);
        allow.insert(std::string(kSameAsRelation));
        check_relation_closure(result.star, allow);
    }
    if (!out_star.empty()) write_edge_table(result.star, out_star);
    write_edge_table(result.consolidated, out);
    nlohmann::ordered_json report = consolidation_report(tables, links, result);
    if (!report_path.empty()) write_json_file(report, report_path);
    std::cout << "[consolidate] star: " << count_nodes(result.star) << " nodes / "
              << result.star.size() << " edges; merged: " << count_nodes(result.consolidated)
              << " nodes / " << result.consolidated.size() << " edges\n";
    return 0;
}

int run_stats(const std::string& graph_path, const std::string& report_path,
              const std::string& hist_prefix) {
    Graph graph = Graph::build(read_edge_table(graph_path));
    StatsReport stats = degree_stats(graph);
    nlohmann::ordered_json j;
    auto one = [](const DegreeStats& s) {
        return nlohmann::ordered_json{{"nodes", s.nodes},
                                      {"edges", s.edges},
                                      {"relations", s.relations},
                                      {"avg_degree", s.avg_degree},
                                      {"std_degree", s.std_degree}};
    };
    j["total"] = one(stats.total);
    nlohmann::ordered_json per_source = nlohmann::ordered_json::object();
    for (const auto& [tag, s] : stats.per_source) per_source[tag] = one(s);
    j["per_source"] = per_source;
    write_json_file(j, report_path);
    if (!hist_prefix.empty()) {
        auto dump_hist = [](const std::map<size_t, size_t>& hist, const std::string& path) {
            std::string out = "degree\tcount\n";
            for (const auto& [d, c] : hist) {
                out += std::to_string(d) + "\t" + std::to_string(c) + "\n";
            }
            write_file(path, out);
        };
        dump_hist(stats.in_degree_histogram, hist_prefix + ".in.tsv");
        dump_hist(stats.out_degree_histogram, hist_prefix + ".out.tsv");
    }
    std::cout << "[stats] " << stats.total.nodes << " nodes, " << stats.total.edges
              << " edges, avg degree " << stats.total.avg_degree << "\n";
    return 0;
}

int run_centrality(const std::string& graph_path, const std::string& method, size_t top,
                   double damping, double tol, size_t max_iter, const std::string& report_path,
                   const std::string& scores_path) {
    Graph graph = Graph::build(read_edge_table(graph_path));
    auto ranked_json = [&](const std::vector<double>& scores) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const RankedNode& r : top_k(graph, scores, top)) {
            arr.push_back({{"node", r.node}, {"label", r.label}, {"score", r.score}});
        }
        return arr;
    };
    auto write_scores = [&](const std::vector<double>& scores, const std::string& path) {
        std::string out;
        for (const RankedNode& r : top_k(graph, scores, graph.node_count())) {
            out += r.node + "\t" + r.label + "\t" + format_double(r.score) + "\n";
        }
        write_file(path, out);
    };
    nlohmann::ordered_json j;
    if (method == "pagerank") {
        CentralityResult r = pagerank(graph, damping, tol, max_iter);
        j["method"] = "pagerank";
        j["converged"] = r.converged;
        j["iterations"] = r.iterations;
        j["top"] = ranked_json(r.scores);
        if (!scores_path.empty()) write_scores(r.scores, scores_path);
    } else if (method == "hits") {
        HitsResult r = hits(graph, tol, max_iter);
        j["method"] = "hits";
        j["converged"] = r.converged;
        j["iterations"] = r.iterations;
        j["hubs"] = ranked_json(r.hubs);
        j["authorities"] = ranked_json(r.authorities);
        if (!scores_path.empty()) {
            write_scores(r.hubs, scores_path + ".hubs.tsv");
            write_scores(r.authorities, scores_path + ".authorities.tsv");
        }
    } else {
        throw ValidationError("unknown centrality method '" + method + "'");
    }
    write_json_file(j, report_path);
    return 0;
}

int run_embed(const std::string& graph_path, const std::string& model_name, size_t dim,
              double lr, size_t epochs, size_t negatives, uint64_t seed, size_t threads,
              const std::string& out, size_t encoder_dim, const std::string& encoder_vectors,
              const std::string& dump_sentences) {
    Graph graph = Graph::build(read_edge_table(graph_path));
    EmbeddingModel model = parse_embedding_model(model_name);
    if (!dump_sentences.empty()) {
        // node sentences for feeding an external sentence encoder
        std::string sentences;
        for (size_t i = 0; i < graph.node_count(); ++i) {
            sentences += graph.node(i) + "\t" + neighborhood_sentence(graph, i) + "\n";
        }
        write_file(dump_sentences, sentences);
        std::cout << "[embed] " << graph.node_count() << " sentences -> " << dump_sentences
                  << "\n";
    }
    EmbeddingTable table;
    if (model == EmbeddingModel::text) {
        std::unique_ptr<TextEncoder> encoder =
            encoder_vectors.empty()
                ? std::unique_ptr<TextEncoder>(std::make_unique<BuiltinEncoder>(encoder_dim, seed))
                : make_encoder(encoder_vectors, encoder_dim);
        TextEmbeddingResult r = text_embed_all(graph, *encoder);
        table = std::move(r.table);
        if (r.unlabeled_nodes > 0) {
            std::cout << "[embed] " << r.unlabeled_nodes
                      << " nodes had no label; their id segment was used\n";
        }
    } else {
        TrainConfig config;
        config.dimension = dim;
        config.learning_rate = lr;
        config.epochs = epochs;
        config.negatives_per_positive = negatives;
        config.seed = seed;
        config.threads = threads;
        table = train(graph, model, config);
        std::cout << "[embed] mean loss " << table.epoch_losses.front() << " -> "
                  << table.epoch_losses.back() << " over " << epochs << " epochs\n";
    }
    save_embedding_table(table, out);
    std::cout << "[embed] " << table.node_vectors.size() << " vectors (dim "
              << table.dimension << ") -> " << out << "\n";
    return 0;
}

int run_neighbors(const std::string& emb_path, const std::string& graph_path,
                  const std::string& node, const std::string& label, size_t k) {
    EmbeddingTable table = load_embedding_table(emb_path);
    std::vector<double> query;
    std::unordered_set<NodeId> exclude;
    if (!node.empty()) {
        query = table.vector_of(node);
        exclude.insert(node);
    } else if (!label.empty()) {
        if (graph_path.empty()) throw ValidationError("--label requires --graph");
        Graph graph = Graph::build(read_edge_table(graph_path));
        query = label_vector(table, graph, label);
        for (size_t n : graph.nodes_with_label(label)) exclude.insert(graph.node(n));
    } else {
        throw ValidationError("neighbors requires --node or --label");
    }
    for (const Neighbor& n : nearest_neighbors(table, query, k, exclude)) {
        std::cout << n.node << "\t" << format_double_short(n.cosine) << "\n";
    }
    return 0;
}

int run_eval_assoc(const std::string& emb_path, const std::string& graph_path,
                   const std::string& bench_path, std::optional<double> threshold,
                   const std::string& report_path) {
    EmbeddingTable table = load_embedding_table(emb_path);
    Graph graph = Graph::build(read_edge_table(graph_path));
    AssociationBenchmark bench = read_benchmark(bench_path);
    EvalConfig config;
    config.levenshtein_threshold = threshold;
    EvalReport r = evaluate(table, graph, bench, config);
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
    write_json_file(j, report_path);
    std::cout << "[eval-assoc] MAP " << r.map << ", NDCG " << r.mean_ndcg << " over "
              << r.evaluated << " stimuli (" << r.skipped << " skipped)\n";
    return 0;
}

int run_ground(const std::string& graph_path, const std::string& data_path,
               const std::string& report_path, const std::string& dump_path,
               const std::string& stopwords_path, size_t max_ngram) {
    Graph graph = Graph::build(read_edge_table(graph_path));
    std::vector<QAItem> items = read_qa_items(data_path);
    std::set<std::string> stopwords =
        stopwords_path.empty() ? default_stopwords() : load_stopwords(stopwords_path);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    DatasetCounts totals;
    totals.questions = items.size();
    EdgeTable dump;
    std::set<std::string> dumped_ids;
    for (const QAItem& item : items) {
        GroundingResult r = retrieve_evidence(graph, item, max_ngram, stopwords);
        totals.triples += r.triples.size();
        totals.triples_per_answer += r.per_answer_total;
        for (const Edge& e : r.triples) {
            if (dumped_ids.insert(e.id).second) dump.edges.push_back(e);
        }
        rows.push_back({{"question", item.question},
                        {"triples", r.triples.size()},
                        {"per_answer", r.per_answer_counts}});
    }
    nlohmann::ordered_json j;
    j["questions"] = totals.questions;
    j["triples"] = totals.triples;
    j["triples_per_answer"] = totals.triples_per_answer;
    j["items"] = rows;
    write_json_file(j, report_path);
    if (!dump_path.empty()) write_edge_table(dump, dump_path);
    std::cout << "[ground] " << totals.questions << " questions, " << totals.triples
              << " evidence triples\n";
    return 0;
}

int run_run(const std::string& config_path, const std::string& out_dir,
            const std::optional<uint64_t>& seed_override) {
    PipelineConfig config = load_pipeline_config(config_path);
    if (!out_dir.empty()) config.output_dir = out_dir;
    if (seed_override) config.train.seed = *seed_override;
    run_pipeline(config, std::cout);
    std::cout << "[run] artifacts in " << config.output_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"knowledge-graph consolidation engine"};
    app.require_subcommand(1);

    // import
    std::string source, input, output, aux;
    auto* import_cmd = app.add_subcommand("import", "transform a source dump into edge TSV");
    import_cmd->add_option("--source", source, "source format")
        ->required()
        ->check(CLI::IsMember(kgfuse::importer_names()));
    import_cmd->add_option("--input", input, "source dump path")->required();
    import_cmd->add_option("--output", output, "edge table output path")->required();
    import_cmd->add_option("--aux", aux, "auxiliary table (pos lexicon / property map)");

    // link
    std::string method, graph_path, alignment, left_ns, right_ns;
    std::string relation = "sameas";
    std::string queries_path, index_path, judgments_path, annotations, lexicon;
    size_t link_k = 50;
    double min_confidence = 0.0;
    size_t encoder_dim = 128;
    auto* link_cmd = app.add_subcommand("link", "generate identity / lexical-unit links");
    link_cmd->add_option("--method", method, "link generator")
        ->required()
        ->check(CLI::IsMember({"lexical", "table", "embedding", "fn-corpus"}));
    link_cmd->add_option("--graph", graph_path, "edge table giving nodes and labels");
    link_cmd->add_option("--output", output, "link edge table output")->required();
    link_cmd->add_option("--alignment", alignment, "two-column alignment TSV");
    link_cmd->add_option("--left-ns", left_ns, "expected namespace of left ids");
    link_cmd->add_option("--right-ns", right_ns, "expected namespace of right ids");
    link_cmd->add_option("--relation", relation, "sameas | lexunit")
        ->check(CLI::IsMember({"sameas", "lexunit"}));
    link_cmd->add_option("--queries", queries_path, "TSV of node, description");
    link_cmd->add_option("--index", index_path, "TSV of candidate node, description");
    link_cmd->add_option("--k", link_k, "candidates per query");
    link_cmd->add_option("--min-confidence", min_confidence, "drop links below this confidence");
    link_cmd->add_option("--judgments", judgments_path, "accept/reject replay TSV");
    link_cmd->add_option("--annotations", annotations, "frame corpus rows (frame, FE, word)");
    link_cmd->add_option("--lexicon", lexicon, "word to concept-node TSV");
    link_cmd->add_option("--encoder-dim", encoder_dim, "built-in encoder dimension");
    std::string encoder_vectors;
    link_cmd->add_option("--encoder-vectors", encoder_vectors,
                         "precomputed text-vector TSV replacing the built-in encoder");

    // consolidate
    std::vector<std::string> inputs;
    std::string links_path, out_star, report_path, allowlist_path;
    auto* cons_cmd = app.add_subcommand("consolidate", "merge imported tables and links");
    cons_cmd->add_option("--inputs", inputs, "imported edge tables")->required()->expected(-1);
    cons_cmd->add_option("--links", links_path, "link edge table");
    cons_cmd->add_option("--out-star", out_star, "pre-merge graph output");
    cons_cmd->add_option("--out", output, "consolidated graph output")->required();
    cons_cmd->add_option("--report", report_path, "JSON count report");
    cons_cmd->add_option("--allowlist", allowlist_path,
                         "relation vocabulary file; reject anything outside it");

    // stats
    std::string hist_prefix;
    auto* stats_cmd = app.add_subcommand("stats", "degree statistics and histograms");
    stats_cmd->add_option("--graph", graph_path, "edge table")->required();
    stats_cmd->add_option("--report", report_path, "JSON report path (default stdout)");
    stats_cmd->add_option("--degree-hist", hist_prefix, "histogram TSV path prefix");

    // centrality
    size_t top = 5;
    double damping = 0.85, tol = 1e-9;
    size_t max_iter = 100;
    std::string scores_path;
    auto* cent_cmd = app.add_subcommand("centrality", "pagerank / hits scores");
    cent_cmd->add_option("--graph", graph_path, "edge table")->required();
    cent_cmd->add_option("--method", method, "pagerank | hits")
        ->required()
        ->check(CLI::IsMember({"pagerank", "hits"}));
    cent_cmd->add_option("--top", top, "ranked nodes in the report");
    cent_cmd->add_option("--damping", damping, "pagerank damping factor");
    cent_cmd->add_option("--tol", tol, "convergence tolerance");
    cent_cmd->add_option("--max-iter", max_iter, "iteration cap");
    cent_cmd->add_option("--report", report_path, "JSON report path (default stdout)");
    cent_cmd->add_option("--scores", scores_path, "full score table TSV");

    // embed
    std::string model_name = "transe";
    size_t dim = 100, epochs = 100, negatives = 10, threads = 1;
    double lr = 0.1;
    uint64_t seed = 1;
    auto* embed_cmd = app.add_subcommand("embed", "train or compute node embeddings");
    embed_cmd->add_option("--graph", graph_path, "edge table")->required();
    embed_cmd->add_option("--model", model_name, "embedding model")
        ->check(CLI::IsMember({"transe", "distmult", "complex", "rescal", "text"}));
    embed_cmd->add_option("--dim", dim, "embedding dimension");
    embed_cmd->add_option("--lr", lr, "learning rate");
    embed_cmd->add_option("--epochs", epochs, "training epochs");
    embed_cmd->add_option("--negatives", negatives, "negatives per positive");
    embed_cmd->add_option("--seed", seed, "RNG seed");
    embed_cmd->add_option("--threads", threads, "training shards (>1 is non-deterministic)");
    embed_cmd->add_option("--encoder-dim", encoder_dim, "text encoder dimension");
    embed_cmd->add_option("--encoder-vectors", encoder_vectors,
                          "precomputed text-vector TSV replacing the built-in encoder");
    std::string dump_sentences;
    embed_cmd->add_option("--dump-sentences", dump_sentences,
                          "write node sentences for an external encoder");
    embed_cmd->add_option("--out", output, "vector TSV output")->required();

    // neighbors
    std::string emb_path, node, label;
    size_t k = 5;
    auto* nb_cmd = app.add_subcommand("neighbors", "nearest neighbors by cosine");
    nb_cmd->add_option("--emb", emb_path, "vector TSV")->required();
    nb_cmd->add_option("--graph", graph_path, "edge table (for --label)");
    nb_cmd->add_option("--node", node, "query node id");
    nb_cmd->add_option("--label", label, "query label");
    nb_cmd->add_option("--k", k, "neighbors to print");

    // eval-assoc
    std::string bench_path;
    double lev_threshold = -1.0;
    auto* eval_cmd = app.add_subcommand("eval-assoc", "word-association ranking metrics");
    eval_cmd->add_option("--emb", emb_path, "vector TSV")->required();
    eval_cmd->add_option("--graph", graph_path, "edge table")->required();
    eval_cmd->add_option("--bench", bench_path, "benchmark TSV")->required();
    eval_cmd->add_option("--lev-threshold", lev_threshold,
                         "drop candidates with edit similarity above this");
    eval_cmd->add_option("--report", report_path, "JSON report path (default stdout)");

    // ground
    std::string data_path, dump_path, stopwords_path;
    size_t max_ngram = 3;
    auto* ground_cmd = app.add_subcommand("ground", "retrieve question-answer evidence");
    ground_cmd->add_option("--graph", graph_path, "edge table")->required();
    ground_cmd->add_option("--data", data_path, "JSON-lines QA items")->required();
    ground_cmd->add_option("--report", report_path, "JSON count report (default stdout)");
    ground_cmd->add_option("--dump-triples", dump_path, "retrieved triples as edge TSV");
    ground_cmd->add_option("--stopwords", stopwords_path, "custom stopword list");
    ground_cmd->add_option("--max-ngram", max_ngram, "longest concept n-gram");

    // run
    std::string config_path, out_dir;
    uint64_t run_seed = 0;
    auto* run_cmd = app.add_subcommand("run", "execute the whole pipeline from a config");
    run_cmd->add_option("--config", config_path, "pipeline config JSON")->required();
    run_cmd->add_option("--out-dir", out_dir, "override the configured output directory");
    auto* seed_opt = run_cmd->add_option("--seed", run_seed, "override the configured seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*import_cmd) return run_import(source, input, output, aux);
        if (*link_cmd) {
            return run_link(method, graph_path, output, alignment, left_ns, right_ns, relation,
                            queries_path, index_path, link_k, min_confidence, judgments_path,
                            annotations, lexicon, encoder_dim, encoder_vectors);
        }
        if (*cons_cmd) {
            return run_consolidate(inputs, links_path, out_star, output, report_path,
                                   allowlist_path);
        }
        if (*stats_cmd) return run_stats(graph_path, report_path, hist_prefix);
        if (*cent_cmd) {
            return run_centrality(graph_path, method, top, damping, tol, max_iter, report_path,
                                  scores_path);
        }
        if (*embed_cmd) {
            return run_embed(graph_path, model_name, dim, lr, epochs, negatives, seed, threads,
                             output, encoder_dim, encoder_vectors, dump_sentences);
        }
        if (*nb_cmd) return run_neighbors(emb_path, graph_path, node, label, k);
        if (*eval_cmd) {
            std::optional<double> threshold;
            if (lev_threshold >= 0.0) threshold = lev_threshold;
            return run_eval_assoc(emb_path, graph_path, bench_path, threshold, report_path);
        }
        if (*ground_cmd) {
            return run_ground(graph_path, data_path, report_path, dump_path, stopwords_path,
                              max_ngram);
        }
        if (*run_cmd) {
            std::optional<uint64_t> seed_override;
            if (seed_opt->count() > 0) seed_override = run_seed;
            return run_run(config_path, out_dir, seed_override);
        }
    } catch (const kgfuse::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const kgfuse::StageFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
