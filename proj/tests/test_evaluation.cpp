#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "kgfuse/evaluation.hpp"
#include "oracles.hpp"

using namespace kgfuse;

namespace {

// Graph + embedding fixture where similarity structure is fully controlled:
// vectors are placed by hand, labels are one per node.
struct EvalFixture {
    Graph graph;
    EmbeddingTable table;
};

EvalFixture make_fixture() {
    EdgeTableBuilder builder;
    auto add_node = [&](const std::string& id, const std::string& label) {
        Edge& e = builder.add(id, "/r/RelatedTo", "x:root");
        e.node1_labels = {label};
        e.node2_labels = {"root"};
        e.sources = {"CN"};
    };
    add_node("x:day", "day");
    add_node("x:night", "night");
    add_node("x:sun", "sun");
    add_node("x:daily", "daily");
    add_node("x:moon", "moon");
    EvalFixture f{Graph::build(builder.take()), {}};
    f.table.model = "fixture";
    f.table.dimension = 2;
    // day's nearest: night, then daily, then sun, then moon, then root
    f.table.node_vectors = {
        {"x:day", {1.0, 0.0}},   {"x:night", {0.99, 0.14}}, {"x:daily", {0.95, 0.31}},
        {"x:sun", {0.8, 0.6}},   {"x:moon", {0.0, 1.0}},    {"x:root", {-1.0, 0.0}},
    };
    return f;
}

std::vector<std::string> random_items(std::mt19937_64& rng, size_t max_len,
                                      const std::vector<std::string>& pool) {
    size_t n = 1 + rng() % max_len;
    std::vector<std::string> out;
    for (size_t i = 0; i < n; ++i) out.push_back(pool[rng() % pool.size()]);
    return out;
}

}  // namespace

TEST_CASE("average precision worked examples") {
    CHECK(average_precision({"a", "b"}, {"a", "b"}) == 1.0);
    CHECK(average_precision({"a", "b"}, {"x", "a"}) == 0.25);
    CHECK(average_precision({"a"}, {"x", "y"}) == 0.0);
}

TEST_CASE("ndcg worked examples") {
    CHECK(ndcg({"a", "b"}, {"a", "b"}) == 1.0);
    CHECK(ndcg({"a", "b"}, {"b", "a"}) == Catch::Approx(0.8597).margin(5e-5));
    CHECK(ndcg({"a", "b"}, {"x", "y"}) == 0.0);
}

TEST_CASE("metrics stay in range and equal the naive reimplementation") {
    const std::vector<std::string> pool = {"a", "b", "c", "d", "e", "f", "g", "h"};
    std::mt19937_64 rng(1312);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<std::string> gold = random_items(rng, 5, pool);
        // gold lists carry no duplicates
        std::sort(gold.begin(), gold.end());
        gold.erase(std::unique(gold.begin(), gold.end()), gold.end());
        std::shuffle(gold.begin(), gold.end(), rng);
        std::vector<std::string> predicted = random_items(rng, 8, pool);

        double ap = average_precision(gold, predicted);
        double nd = ndcg(gold, predicted);
        CHECK(ap >= 0.0);
        CHECK(ap <= 1.0);
        CHECK(nd >= 0.0);
        CHECK(nd <= 1.0);
        CHECK(ap == Catch::Approx(oracle::naive_average_precision(gold, predicted)).margin(1e-12));
        CHECK(nd == Catch::Approx(oracle::naive_ndcg(gold, predicted)).margin(1e-12));
        // perfect prediction scores 1 on both
        CHECK(average_precision(gold, gold) == Catch::Approx(1.0).margin(1e-12));
        CHECK(ndcg(gold, gold) == Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("membership is case-insensitive") {
    CHECK(average_precision({"Day"}, {"day"}) == 1.0);
    CHECK(ndcg({"Day"}, {"dAy"}) == 1.0);
}

TEST_CASE("predictions exclude the stimulus node and respect K") {
    EvalFixture f = make_fixture();
    EvalConfig config;
    std::vector<std::string> predicted = predict_associations(f.table, f.graph, "day", 3, config);
    REQUIRE(predicted.size() == 3);
    CHECK(predicted[0] == "night");
    CHECK(predicted[1] == "daily");
    CHECK(predicted[2] == "sun");
    for (const auto& p : predicted) CHECK(p != "day");
}

TEST_CASE("the edit filter drops identical surface forms and keeps daily") {
    EvalFixture f = make_fixture();
    // another node that duplicates the stimulus label: filtered by t=0.9
    EvalConfig strict;
    strict.levenshtein_threshold = 0.9;
    std::vector<std::string> predicted =
        predict_associations(f.table, f.graph, "day", 3, strict);
    CHECK(std::find(predicted.begin(), predicted.end(), "daily") != predicted.end());
    // "daily" has similarity 0.6 <= 0.9, so it stays
    for (const auto& p : predicted) {
        CHECK(levenshtein_similarity("day", normalize_label(p)) <= 0.9);
    }
    // threshold 1.0 removes only exact-equal strings; none remain after
    // node exclusion, so the lists agree with the unfiltered run
    EvalConfig loose;
    loose.levenshtein_threshold = 1.0;
    EvalConfig off;
    CHECK(predict_associations(f.table, f.graph, "day", 3, loose) ==
          predict_associations(f.table, f.graph, "day", 3, off));
}

TEST_CASE("evaluation aggregates per-stimulus metrics and counts skips") {
    EvalFixture f = make_fixture();
    AssociationBenchmark bench;
    bench.entries.push_back({"day", {"night", "sun", "light"}});
    bench.entries.push_back({"moon", {"sun"}});
    bench.entries.push_back({"zebra", {"stripes"}});  // unresolvable, skipped
    EvalConfig config;
    EvalReport report = evaluate(f.table, f.graph, bench, config);
    CHECK(report.evaluated == 2);
    CHECK(report.skipped == 1);
    CHECK(report.skipped_stimuli == std::vector<std::string>{"zebra"});

    // spreadsheet-style recomputation from the per-stimulus rows
    double ap_sum = 0.0, ndcg_sum = 0.0;
    for (const auto& row : report.per_stimulus) {
        const auto& entry = *std::find_if(bench.entries.begin(), bench.entries.end(),
                                          [&](const auto& e) { return e.stimulus == row.stimulus; });
        ap_sum += oracle::naive_average_precision(entry.gold, row.predicted);
        ndcg_sum += oracle::naive_ndcg(entry.gold, row.predicted);
    }
    CHECK(report.map == Catch::Approx(ap_sum / 2.0).margin(1e-12));
    CHECK(report.mean_ndcg == Catch::Approx(ndcg_sum / 2.0).margin(1e-12));

    // entry order does not matter
    std::reverse(bench.entries.begin(), bench.entries.end());
    EvalReport reversed = evaluate(f.table, f.graph, bench, config);
    CHECK(reversed.map == report.map);
    CHECK(reversed.mean_ndcg == report.mean_ndcg);
    REQUIRE(reversed.per_stimulus.size() == report.per_stimulus.size());
    for (size_t i = 0; i < report.per_stimulus.size(); ++i) {
        CHECK(reversed.per_stimulus[i].stimulus == report.per_stimulus[i].stimulus);
    }
}

TEST_CASE("a perfect single-stimulus benchmark scores one on both metrics") {
    EvalFixture f = make_fixture();
    AssociationBenchmark bench;
    bench.entries.push_back({"day", {"night"}});
    EvalReport report = evaluate(f.table, f.graph, bench, EvalConfig{});
    CHECK(report.map == 1.0);
    CHECK(report.mean_ndcg == 1.0);
}

TEST_CASE("empty benchmarks are rejected") {
    EvalFixture f = make_fixture();
    CHECK_THROWS_AS(evaluate(f.table, f.graph, AssociationBenchmark{}, EvalConfig{}),
                    ValidationError);
}

TEST_CASE("benchmark files parse gold lists in order") {
    testutil::TempDir dir;
    std::string path = dir.write("bench.tsv",
                                 "day\tnight|light|sun|time|week|break\n"
                                 "# comment\n"
                                 "happy\tjoyful\n");
    AssociationBenchmark bench = read_benchmark(path);
    REQUIRE(bench.entries.size() == 2);
    CHECK(bench.entries[0].gold.size() == 6);
    CHECK(bench.entries[0].gold[0] == "night");
    CHECK(bench.entries[0].gold[5] == "break");
    CHECK_THROWS_AS(read_benchmark(dir.write("bad.tsv", "day\tnight|night\n")), ValidationError);
    CHECK_THROWS_AS(read_benchmark(dir.write("bad2.tsv", "day\t\n")), ValidationError);
}
