#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "kgfuse/edge.hpp"

using namespace kgfuse;

TEST_CASE("edge id construction") {
    CHECK(make_edge_id("a", "/r/IsA", "b", 0) == "a-/r/IsA-b");
    CHECK(make_edge_id("a", "/r/IsA", "b", 2) == "a-/r/IsA-b-2");
    CHECK(make_edge_id("a", "/r/IsA", "b", 1) == make_edge_id("a", "/r/IsA", "b", 1));
}

TEST_CASE("builder assigns ordinals to duplicate triples") {
    EdgeTableBuilder builder;
    builder.add("a", "/r/IsA", "b");
    builder.add("a", "/r/IsA", "b");
    builder.add("a", "/r/IsA", "c");
    EdgeTable t = builder.take();
    CHECK(t.edges[0].id == "a-/r/IsA-b");
    CHECK(t.edges[1].id == "a-/r/IsA-b-1");
    CHECK(t.edges[2].id == "a-/r/IsA-c");
}

TEST_CASE("header-only table parses to zero edges") {
    EdgeTable t = parse_edge_table(edge_header_line() + "\n", "mem");
    CHECK(t.edges.empty());
}

TEST_CASE("single-row table parses per the column contract") {
    std::string row =
        "/c/en/piano-/r/UsedFor-/c/en/music\t/c/en/piano\t/r/UsedFor\t/c/en/music"
        "\tpiano\tmusic\tused for\t\tCN\t";
    std::string content = edge_header_line() + "\n" + row + "\n";
    EdgeTable t = parse_edge_table(content, "mem");
    REQUIRE(t.edges.size() == 1);
    const Edge& e = t.edges[0];
    CHECK(e.id == "/c/en/piano-/r/UsedFor-/c/en/music");
    CHECK(e.node1 == "/c/en/piano");
    CHECK(e.relation == "/r/UsedFor");
    CHECK(e.node2 == "/c/en/music");
    CHECK(e.node1_labels == std::vector<std::string>{"piano"});
    CHECK(e.node2_labels == std::vector<std::string>{"music"});
    CHECK(e.relation_labels == std::vector<std::string>{"used for"});
    CHECK(e.relation_dimension.empty());
    CHECK(e.sources == std::vector<std::string>{"CN"});
    CHECK(e.sentence.empty());
    // re-serializing the hand-built row reproduces the input bytes
    CHECK(serialize_edge_table(t) == content);
}

TEST_CASE("wrong column counts are rejected with a line number") {
    std::string nine = edge_header_line() + "\na\tb\tc\td\te\tf\tg\th\ti\n";
    CHECK_THROWS_WITH(parse_edge_table(nine, "mem"),
                      Catch::Matchers::ContainsSubstring("line 2") &&
                          Catch::Matchers::ContainsSubstring("9"));
    std::string eleven = edge_header_line() + "\na\tb\tc\td\te\tf\tg\th\ti\tj\tk\n";
    CHECK_THROWS_WITH(parse_edge_table(eleven, "mem"),
                      Catch::Matchers::ContainsSubstring("line 2") &&
                          Catch::Matchers::ContainsSubstring("11"));
}

TEST_CASE("duplicate ids are rejected naming both occurrences") {
    std::string content = edge_header_line() +
                          "\nx\ta\t/r/IsA\tb\t\t\t\t\tCN\t"
                          "\nx\ta\t/r/IsA\tc\t\t\t\t\tCN\t\n";
    CHECK_THROWS_WITH(parse_edge_table(content, "mem"),
                      Catch::Matchers::ContainsSubstring("lines 2 and 3"));
}

TEST_CASE("non-UTF-8 input is rejected") {
    std::string content = edge_header_line() + "\nx\ta\t/r/IsA\tb\t\xFF\t\t\t\tCN\t\n";
    CHECK_THROWS_WITH(parse_edge_table(content, "mem"),
                      Catch::Matchers::ContainsSubstring("UTF-8"));
}

TEST_CASE("bad header is rejected") {
    CHECK_THROWS_AS(parse_edge_table("id\tnode1\n", "mem"), ValidationError);
    CHECK_THROWS_AS(parse_edge_table("", "mem"), ValidationError);
}

TEST_CASE("multi-valued cells join with pipe in insertion order") {
    EdgeTableBuilder builder;
    Edge& e = builder.add("a", "/r/IsA", "b");
    e.sources = {"CN", "WN"};
    std::string serialized = serialize_edge_table(builder.table());
    CHECK(serialized.find("\tCN|WN\t") != std::string::npos);
}

TEST_CASE("pipes and backslashes in values survive a round trip") {
    EdgeTableBuilder builder;
    Edge& e = builder.add("a", "/r/IsA", "b");
    e.node1_labels = {"left|right", "trailing\\", "\\|both|\\"};
    e.sources = {"CN"};
    EdgeTable t = builder.take();
    EdgeTable back = parse_edge_table(serialize_edge_table(t), "mem");
    CHECK(back == t);
    CHECK(back.edges[0].node1_labels == t.edges[0].node1_labels);
}

TEST_CASE("fields with tabs or newlines are rejected on write") {
    EdgeTableBuilder builder;
    Edge& e = builder.add("a", "/r/IsA", "b");
    e.sources = {"CN"};
    e.sentence = "has a\ttab";
    CHECK_THROWS_AS(serialize_edge_table(builder.table()), ValidationError);
}

TEST_CASE("duplicate entries within a multi-valued cell are rejected") {
    EdgeTableBuilder builder;
    Edge& e = builder.add("a", "/r/IsA", "b");
    e.sources = {"CN", "CN"};
    CHECK_THROWS_AS(serialize_edge_table(builder.table()), ValidationError);
}

TEST_CASE("file round trip: read(write(T)) == T and bytes are canonical") {
    testutil::TempDir dir;
    std::mt19937_64 rng(20260811);
    for (int trial = 0; trial < 50; ++trial) {
        EdgeTable t = testutil::random_edge_table(rng);
        std::string path = dir.file("t.tsv");
        write_edge_table(t, path);
        EdgeTable back = read_edge_table(path);
        REQUIRE(back == t);
        // writing again reproduces identical bytes
        std::string again = dir.file("t2.tsv");
        write_edge_table(back, again);
        CHECK(read_file(path) == read_file(again));
    }
}

TEST_CASE("id injectivity within a built table") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        EdgeTable t = testutil::random_edge_table(rng, 30);
        std::set<std::string> ids;
        for (const Edge& e : t.edges) ids.insert(e.id);
        CHECK(ids.size() == t.edges.size());
    }
}

TEST_CASE("every serialized row carries exactly ten cells") {
    std::mt19937_64 rng(99);
    EdgeTable t = testutil::random_edge_table(rng, 20);
    std::string content = serialize_edge_table(t);
    for (const std::string& line : split_lines(content)) {
        CHECK(split(line, '\t').size() == 10);
    }
}
