#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "kgfuse/pipeline.hpp"

using namespace kgfuse;

namespace {

const std::string kFixtures = KGFUSE_FIXTURES_DIR;

nlohmann::json load_json(const std::string& path) {
    return nlohmann::json::parse(read_file(path));
}

std::map<std::string, std::string> directory_bytes(const std::string& dir) {
    std::map<std::string, std::string> files;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string rel = std::filesystem::relative(entry.path(), dir).string();
        files[rel] = read_file(entry.path().string());
    }
    return files;
}

}  // namespace

TEST_CASE("the fixture pipeline reproduces the expected counts") {
    testutil::TempDir dir;
    PipelineConfig config = load_pipeline_config(kFixtures + "/pipeline.json");
    config.output_dir = dir.file("out");
    std::ostringstream log;
    PipelineReport report = run_pipeline(config, log);

    nlohmann::json expected = load_json(kFixtures + "/expected_report.json");
    nlohmann::json got = load_json(config.output_dir + "/report.json");
    for (const std::string key : {"per_source", "links", "star", "consolidated"}) {
        INFO("key " << key << "\nexpected " << expected[key].dump() << "\ngot "
                    << got[key].dump());
        CHECK(got[key] == expected[key]);
    }

    // the merge shrinks the node count and never grows the edge count
    CHECK(got["consolidated"]["nodes"].get<size_t>() < got["star"]["nodes"].get<size_t>());
    CHECK(got["consolidated"]["edges"].get<size_t>() <= got["star"]["edges"].get<size_t>());

    // all advertised artifacts exist
    for (const std::string name :
         {"cskg_star.tsv", "cskg.tsv", "links.tsv", "report.json", "stats.json",
          "centrality.json", "emb.tsv", "emb.tsv.meta.json", "eval.json", "grounding.json",
          "degree_hist.in.tsv", "degree_hist.out.tsv"}) {
        INFO(name);
        CHECK(std::filesystem::exists(config.output_dir + "/" + name));
    }

    // the consolidated table is a valid, canonically sorted edge table
    EdgeTable cskg = read_edge_table(config.output_dir + "/cskg.tsv");
    CHECK(deduplicate(cskg) == cskg);

    // grounding found the lizard evidence
    nlohmann::json grounding = load_json(config.output_dir + "/grounding.json");
    CHECK(grounding["items"][0]["triples"].get<size_t>() == 3);
    CHECK(grounding["items"][0]["per_answer"][0].get<size_t>() == 3);
    CHECK(grounding["items"][0]["per_answer"][1].get<size_t>() == 0);
    CHECK(grounding["items"][1]["triples"].get<size_t>() == 1);

    // the association eval skipped the unresolvable stimulus
    nlohmann::json eval = load_json(config.output_dir + "/eval.json");
    CHECK(eval["evaluated"].get<size_t>() == 2);
    CHECK(eval["skipped"].get<size_t>() == 1);
    CHECK(eval["skipped_stimuli"][0].get<std::string>() == "zebra");
}

TEST_CASE("two runs produce byte-identical artifact directories") {
    testutil::TempDir dir;
    PipelineConfig config = load_pipeline_config(kFixtures + "/pipeline.json");
    std::ostringstream log;
    config.output_dir = dir.file("a");
    run_pipeline(config, log);
    config.output_dir = dir.file("b");
    run_pipeline(config, log);
    auto a = directory_bytes(dir.file("a"));
    auto b = directory_bytes(dir.file("b"));
    REQUIRE(a.size() == b.size());
    for (const auto& [name, bytes] : a) {
        INFO(name);
        REQUIRE(b.count(name) == 1);
        CHECK(bytes == b.at(name));
    }
}

TEST_CASE("a config naming an absent file fails before any work") {
    testutil::TempDir dir;
    PipelineConfig config = load_pipeline_config(kFixtures + "/pipeline.json");
    config.output_dir = dir.file("out");
    config.source_inputs["roget"] = dir.file("missing.tsv");
    std::ostringstream log;
    CHECK_THROWS_AS(run_pipeline(config, log), ValidationError);
    CHECK_FALSE(std::filesystem::exists(config.output_dir + "/cskg.tsv"));
}

TEST_CASE("a failing stage names itself and preserves earlier outputs") {
    testutil::TempDir dir;
    PipelineConfig config = load_pipeline_config(kFixtures + "/pipeline.json");
    config.output_dir = dir.file("out");
    // a benchmark whose rows are malformed trips the eval stage
    std::ofstream bad(dir.file("bad_bench.tsv"));
    bad << "only_one_column\n";
    bad.close();
    config.benchmark_path = dir.file("bad_bench.tsv");
    std::ostringstream log;
    try {
        run_pipeline(config, log);
        FAIL("expected a stage failure");
    } catch (const StageFailure& e) {
        CHECK(e.stage == "eval-assoc");
    }
    // earlier artifacts survive
    CHECK(std::filesystem::exists(config.output_dir + "/cskg.tsv"));
    CHECK(std::filesystem::exists(config.output_dir + "/emb.tsv"));
}

TEST_CASE("config defaults mirror the documented values") {
    PipelineConfig config;
    CHECK(config.train.dimension == 100);
    CHECK(config.train.learning_rate == 0.1);
    CHECK(config.embedding_link_k == 50);
    CHECK(config.pagerank_damping == 0.85);
}

TEST_CASE("unknown config sources are rejected") {
    testutil::TempDir dir;
    std::string path = dir.write("cfg.json", R"({"sources": {"webchild": {"input": "x.tsv"}}})");
    CHECK_THROWS_AS(load_pipeline_config(path), ValidationError);
}
