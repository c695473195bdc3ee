#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "kgfuse/consolidate.hpp"
#include "kgfuse/importers.hpp"

using namespace kgfuse;

namespace {

const char* kPianoRow =
    "/a/[/r/UsedFor/,/c/en/piano/,/c/en/music/]\t/r/UsedFor\t/c/en/piano\t/c/en/music\t"
    "{\"surfaceText\": \"[[piano]] is used for [[music]]\"}\n";

}  // namespace

TEST_CASE("conceptnet rows import 1:1 with CN source") {
    testutil::TempDir dir;
    std::string path = dir.write("cn.tsv", kPianoRow);
    EdgeTable t = import_conceptnet(path);
    REQUIRE(t.edges.size() == 1);
    CHECK(t.edges[0].node1 == "/c/en/piano");
    CHECK(t.edges[0].relation == "/r/UsedFor");
    CHECK(t.edges[0].node2 == "/c/en/music");
    CHECK(t.edges[0].sources == std::vector<std::string>{"CN"});
    CHECK(t.edges[0].sentence == "piano is used for music");
}

TEST_CASE("conceptnet labels come from the term segment, underscores to spaces") {
    testutil::TempDir dir;
    std::string path = dir.write(
        "cn.tsv",
        "/a/x\t/r/AtLocation\t/c/en/tropical_rainforest\t/c/en/earth\t\n"
        "/a/y\t/r/IsA\t/c/en/piano/n/wn/artifact\t/c/en/instrument\t\n");
    EdgeTable t = import_conceptnet(path);
    CHECK(t.edges[0].node1_labels == std::vector<std::string>{"tropical rainforest"});
    // sense-qualified concepts keep the term as label
    CHECK(t.edges[1].node1_labels == std::vector<std::string>{"piano"});
}

TEST_CASE("empty conceptnet dump yields an empty table") {
    testutil::TempDir dir;
    CHECK(import_conceptnet(dir.write("cn.tsv", "")).empty());
}

TEST_CASE("unknown conceptnet relation is an error listing it") {
    testutil::TempDir dir;
    std::string path = dir.write("cn.tsv", "/a/x\t/r/Bogus\t/c/en/a\t/c/en/b\t\n");
    CHECK_THROWS_WITH(import_conceptnet(path),
                      Catch::Matchers::ContainsSubstring("/r/Bogus"));
}

TEST_CASE("malformed concept URI reports the line") {
    testutil::TempDir dir;
    std::string path = dir.write("cn.tsv", "/a/x\t/r/IsA\t/c/en\t/c/en/b\t\n");
    CHECK_THROWS_WITH(import_conceptnet(path), Catch::Matchers::ContainsSubstring("line 1"));
}

TEST_CASE("event nodes carry original plus normalized labels") {
    testutil::TempDir dir;
    std::string path = dir.write(
        "at.tsv", "personX accepts personY's invitation\txEffect\tpersonX goes to a party\n");
    EdgeTable t = import_atomic(path);
    REQUIRE(t.edges.size() == 1);
    CHECK(t.edges[0].node1_labels ==
          std::vector<std::string>{"personX accepts personY's invitation", "accepts invitation"});
    CHECK(t.edges[0].relation == "at:xEffect");
    CHECK(t.edges[0].node2_labels ==
          std::vector<std::string>{"personX goes to a party", "goes to a party"});
}

TEST_CASE("events without placeholders normalize to themselves") {
    // the normalized label equals the lowercased original, so no second label
    testutil::TempDir dir;
    std::string path = dir.write("at.tsv", "to be social\txIntent\thappy\n");
    EdgeTable t = import_atomic(path);
    CHECK(t.edges[0].node1_labels == std::vector<std::string>{"to be social"});
    CHECK(t.edges[0].node2_labels == std::vector<std::string>{"happy"});
}

TEST_CASE("blank markers drop out of normalized event labels") {
    CHECK(normalize_event_label("personX plays ___ piano") == "plays piano");
    CHECK(normalize_event_label("personx accepts persony's invitation") == "accepts invitation");
}

TEST_CASE("unknown event relation is rejected") {
    testutil::TempDir dir;
    std::string path = dir.write("at.tsv", "a\tbogusRel\tb\n");
    CHECK_THROWS_AS(import_atomic(path), ValidationError);
}

TEST_CASE("frame causative edges map to /r/Causes") {
    testutil::TempDir dir;
    std::string path = dir.write("fn.tsv", "Cause_to_start\tis_causative_of\tProcess_start\n");
    EdgeTable t = import_framenet(path);
    REQUIRE(t.edges.size() == 1);
    CHECK(t.edges[0].node1 == "fn:cause_to_start");
    CHECK(t.edges[0].relation == "/r/Causes");
    CHECK(t.edges[0].node2 == "fn:process_start");
    CHECK(t.edges[0].sources == std::vector<std::string>{"FN"});
}

TEST_CASE("frame to frame-element edges use the single frame-FE relation") {
    testutil::TempDir dir;
    std::string path = dir.write("fn.tsv", "Performance\thas_frame_element\tPerformer\n");
    EdgeTable t = import_framenet(path);
    CHECK(t.edges[0].relation == "/r/HasA");
    CHECK(t.edges[0].node2 == "fn:fe:performer");
}

TEST_CASE("frame lexical-unit edges keep their own relation") {
    testutil::TempDir dir;
    std::string path = dir.write("fn.tsv", "Performance\thas_lexical_unit\tconcert.n\n");
    EdgeTable t = import_framenet(path);
    CHECK(t.edges[0].relation == "fn:HasLexicalUnit");
    CHECK(t.edges[0].node2 == "fn:lu:concert.n");
}

TEST_CASE("inverse-direction frame edge types swap endpoints") {
    testutil::TempDir dir;
    std::string path = dir.write("fn.tsv", "Performance\tis_inherited_by\tConcert\n");
    EdgeTable t = import_framenet(path);
    CHECK(t.edges[0].node1 == "fn:concert");
    CHECK(t.edges[0].relation == "/r/IsA");
    CHECK(t.edges[0].node2 == "fn:performance");
}

TEST_CASE("the frame map covers 19 edge types with 9 targets") {
    std::set<RelationId> targets;
    for (const auto& [type, mapped] : framenet_relation_map()) targets.insert(mapped.relation);
    CHECK(framenet_relation_map().size() == 19);
    CHECK(targets.size() == 9);
}

TEST_CASE("unmapped frame edge type is rejected") {
    testutil::TempDir dir;
    std::string path = dir.write("fn.tsv", "A\tmade_up_type\tB\n");
    CHECK_THROWS_AS(import_framenet(path), ValidationError);
}

TEST_CASE("a custom frame relation map can replace the built-in table") {
    testutil::TempDir dir;
    std::string map_path = dir.write("map.tsv",
                                     "# comment\n"
                                     "inherits_from\t/r/MannerOf\n"
                                     "uses\t/r/HasContext\tswap\n");
    RelationMap map = load_relation_map(map_path);
    CHECK(map.size() == 2);
    CHECK(map.at("uses").swap);
    std::string dump = dir.write("fn.tsv", "Concert\tinherits_from\tPerformance\n");
    EdgeTable t = import_framenet(dump, map);
    CHECK(t.edges[0].relation == "/r/MannerOf");
}

TEST_CASE("word pairs import as synonym or antonym edges only") {
    testutil::TempDir dir;
    std::string path = dir.write("rg.tsv",
                                 "truncate\tantonym\textend\n"
                                 "big\tsynonym\tlarge\n");
    EdgeTable t = import_roget(path);
    REQUIRE(t.edges.size() == 2);
    CHECK(t.edges[0].relation == "/r/Antonym");
    CHECK(t.edges[0].node1 == "rg:truncate");
    CHECK(t.edges[1].relation == "/r/Synonym");
    CHECK(t.edges[1].sources == std::vector<std::string>{"RG"});
    CHECK_THROWS_AS(import_roget(dir.write("bad.tsv", "a\thyponym\tb\n")), ValidationError);
}

namespace {

const char* kSceneDump =
    "object\to1\twoman.n.01\n"
    "object\to2\tpiano.n.01\n"
    "object\to3\tdog.n.01\n"
    "object\to4\tperson.n.01\n"
    "object\to5\t\n"
    "rel\to1\tnext to\to2\n"
    "attr\to3\twhite\n"
    "attr\to4\trunning\n"
    "attr\to3\tthree\n"
    "rel\to5\tnear\to1\n";

const char* kPosLexicon = "white\tADJ\nrunning\tVERB\nthree\tNUM\ntropical\tADJ\n";

}  // namespace

TEST_CASE("scene graphs become proximity, ability, and property edges") {
    testutil::TempDir dir;
    std::string dump = dir.write("vg.tsv", kSceneDump);
    std::string lex = dir.write("pos.tsv", kPosLexicon);
    VisualGenomeImport result = import_visualgenome(dump, lex);
    REQUIRE(result.table.edges.size() == 3);
    CHECK(result.table.edges[0].node1 == "wn:woman.n.01");
    CHECK(result.table.edges[0].relation == "/r/LocatedNear");
    CHECK(result.table.edges[0].node2 == "wn:piano.n.01");
    CHECK(result.table.edges[1].relation == "mw:MayHaveProperty");
    CHECK(result.table.edges[1].node2 == "vg:white");
    CHECK(result.table.edges[2].relation == "/r/CapableOf");
    CHECK(result.table.edges[2].node2 == "vg:running");
    CHECK(result.skipped_objects == 1);       // o5 has no synset
    CHECK(result.skipped_relationships == 1);  // rel touching o5
    CHECK(result.skipped_attributes == 1);     // NUM attribute
}

TEST_CASE("statement tables rewrite properties via the supplied map") {
    testutil::TempDir dir;
    std::string pmap = dir.write("pmap.tsv", "P31\t/r/IsA\nP186\t/r/MadeOf\n");
    std::string dump = dir.write("wd.tsv",
                                 "Q5994\tpiano\tP31\tQ34379\tmusical instrument\n"
                                 "Q5994\tpiano\tP186\tQ287\twood\n"
                                 "Q5994\tpiano\tP999\tQ1\tuniverse\n");
    WikidataImport result = import_wikidata_cs(dump, pmap);
    REQUIRE(result.table.edges.size() == 2);
    CHECK(result.table.edges[0].node1 == "wd:Q5994");
    CHECK(result.table.edges[0].relation == "/r/IsA");
    CHECK(result.table.edges[0].node1_labels == std::vector<std::string>{"piano"});
    CHECK(result.table.edges[0].node2_labels == std::vector<std::string>{"musical instrument"});
    CHECK(result.dropped_statements == 1);
    WikidataImport empty = import_wikidata_cs(dir.write("e.tsv", ""), pmap);
    CHECK(empty.table.empty());
    CHECK(empty.dropped_statements == 0);
}

TEST_CASE("the four synset relations collapse onto three") {
    testutil::TempDir dir;
    std::string path = dir.write("wn.tsv",
                                 "dog.n.01\thypernym\tcanine.n.02\n"
                                 "wheel.n.01\tpart_holonym\tcar.n.01\n"
                                 "tree.n.01\tmember_holonym\tforest.n.01\n"
                                 "tire.n.01\tsubstance_meronym\trubber.n.01\n");
    EdgeTable t = import_wordnet(path);
    REQUIRE(t.edges.size() == 4);
    CHECK(t.edges[0].relation == "/r/IsA");
    CHECK(t.edges[0].node1 == "wn:dog.n.01");
    CHECK(t.edges[0].node1_labels == std::vector<std::string>{"dog"});
    CHECK(t.edges[1].relation == "/r/PartOf");
    CHECK(t.edges[2].relation == "/r/PartOf");
    CHECK(t.edges[3].relation == "/r/MadeOf");
    CHECK_THROWS_AS(import_wordnet(dir.write("bad.tsv", "a.n.01\tantonym\tb.n.01\n")),
                    ValidationError);
}

TEST_CASE("imported relations stay inside the consolidated vocabulary") {
    testutil::TempDir dir;
    std::set<std::string> allow = relation_allowlist(true);
    check_relation_closure(import_conceptnet(dir.write("cn.tsv", kPianoRow)), allow);
    check_relation_closure(import_atomic(dir.write("at.tsv", "a\txAttr\tb\n")), allow);
    check_relation_closure(
        import_framenet(dir.write("fn.tsv", "A\tinherits_from\tB\nA\thas_lexical_unit\tw.n\n")),
        allow);
    check_relation_closure(import_roget(dir.write("rg.tsv", "a\tsynonym\tb\n")), allow);
    check_relation_closure(
        import_visualgenome(dir.write("vg.tsv", kSceneDump), dir.write("pos.tsv", kPosLexicon))
            .table,
        allow);
    check_relation_closure(import_wordnet(dir.write("wn.tsv", "a.n.01\thypernym\tb.n.01\n")),
                           allow);
}

TEST_CASE("importing the same dump twice is byte-identical") {
    testutil::TempDir dir;
    std::string path = dir.write("at.tsv",
                                 "personX pays rent\txNeed\tto have money\n"
                                 "personX pays rent\txEffect\tpersonX feels poor\n");
    CHECK(serialize_edge_table(import_atomic(path)) ==
          serialize_edge_table(import_atomic(path)));
}

TEST_CASE("closed-vocabulary importers preserve assertion counts") {
    testutil::TempDir dir;
    std::string cn;
    for (int i = 0; i < 7; ++i) {
        cn += "/a/x\t/r/IsA\t/c/en/a" + std::to_string(i) + "\t/c/en/b\t\n";
    }
    CHECK(import_conceptnet(dir.write("cn.tsv", cn)).size() == 7);
    std::string rg;
    for (int i = 0; i < 5; ++i) rg += "w" + std::to_string(i) + "\tsynonym\tv\n";
    CHECK(import_roget(dir.write("rg.tsv", rg)).size() == 5);
}

TEST_CASE("the fixture bundle imports with pure sources and conserved counts") {
    const std::string fixtures = KGFUSE_FIXTURES_DIR;
    auto line_count = [&](const std::string& name) {
        return split_lines(read_file(fixtures + "/" + name)).size();
    };
    struct Expectation {
        std::string tag;
        EdgeTable table;
        size_t assertions;
    };
    std::vector<Expectation> imports;
    imports.push_back({"CN", import_conceptnet(fixtures + "/conceptnet.tsv"),
                       line_count("conceptnet.tsv")});
    imports.push_back({"AT", import_atomic(fixtures + "/atomic.tsv"), line_count("atomic.tsv")});
    imports.push_back(
        {"FN", import_framenet(fixtures + "/framenet.tsv"), line_count("framenet.tsv")});
    imports.push_back({"RG", import_roget(fixtures + "/roget.tsv"), line_count("roget.tsv")});
    imports.push_back(
        {"WN", import_wordnet(fixtures + "/wordnet.tsv"), line_count("wordnet.tsv")});
    for (const Expectation& e : imports) {
        INFO(e.tag);
        CHECK(e.table.size() == e.assertions);
        for (const Edge& edge : e.table.edges) {
            CHECK(edge.sources == std::vector<std::string>{e.tag});
        }
    }
    // open-vocabulary importers drop exactly what they report
    VisualGenomeImport vg = import_visualgenome(fixtures + "/visualgenome.tsv",
                                                fixtures + "/vg_pos_lexicon.tsv");
    size_t vg_assertions = 0;
    for (const auto& line : split_lines(read_file(fixtures + "/visualgenome.tsv"))) {
        if (line.rfind("rel\t", 0) == 0 || line.rfind("attr\t", 0) == 0) ++vg_assertions;
    }
    CHECK(vg.table.size() + vg.skipped_relationships + vg.skipped_attributes == vg_assertions);
    WikidataImport wd = import_wikidata_cs(fixtures + "/wikidata.tsv",
                                           fixtures + "/wikidata_pmap.tsv");
    CHECK(wd.table.size() + wd.dropped_statements == line_count("wikidata.tsv"));
}
