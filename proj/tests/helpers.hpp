#pragma once
// Shared generators and scratch-file helpers for the test suites.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "kgfuse/edge.hpp"

namespace testutil {

// Scratch directory cleaned up per object; names are unique per process.
class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("kgfuse_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }
    std::string path() const { return path_.string(); }

    std::string write(const std::string& name, const std::string& content) const {
        std::string p = file(name);
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p;
    }

private:
    std::filesystem::path path_;
};

inline std::string random_token(std::mt19937_64& rng, size_t min_len = 1, size_t max_len = 8) {
    static const char alphabet[] = "abcdefghijklmnopqrstuvwxyz0123456789_";
    size_t len = min_len + rng() % (max_len - min_len + 1);
    std::string s;
    for (size_t i = 0; i < len; ++i) s.push_back(alphabet[rng() % (sizeof(alphabet) - 2 + 1)]);
    return s;
}

// Free text for labels/sentences: includes separators and multibyte
// characters that stress the codec.
inline std::string random_text(std::mt19937_64& rng, size_t max_len = 12) {
    static const std::vector<std::string> pieces = {
        "a", "b", "c", "x", "y", "z", " ", "|", "\\", "\"", "'", ",", ".",
        "\xC3\xA9" /* e-acute */, "\xE6\xB0\xB4" /* CJK water */, "0", "9", "-", "/",
    };
    size_t len = 1 + rng() % max_len;
    std::string s;
    for (size_t i = 0; i < len; ++i) s += pieces[rng() % pieces.size()];
    return s;
}

inline std::vector<std::string> random_distinct_texts(std::mt19937_64& rng, size_t max_items) {
    size_t n = rng() % (max_items + 1);
    std::vector<std::string> out;
    for (size_t i = 0; i < n; ++i) {
        std::string t = random_text(rng);
        if (!kgfuse::contains(out, t)) out.push_back(t);
    }
    return out;
}

// A structurally valid random table: ids assigned through the builder so
// duplicate triples get ordinals.
inline kgfuse::EdgeTable random_edge_table(std::mt19937_64& rng, size_t max_edges = 12) {
    kgfuse::EdgeTableBuilder builder;
    size_t n_edges = rng() % (max_edges + 1);
    std::vector<std::string> node_pool;
    for (size_t i = 0; i < 6; ++i) node_pool.push_back("n:" + random_token(rng));
    std::vector<std::string> rel_pool = {"/r/IsA", "/r/PartOf", "/r/RelatedTo", "mw:SameAs"};
    for (size_t i = 0; i < n_edges; ++i) {
        kgfuse::Edge& e = builder.add(node_pool[rng() % node_pool.size()],
                                      rel_pool[rng() % rel_pool.size()],
                                      node_pool[rng() % node_pool.size()]);
        e.node1_labels = random_distinct_texts(rng, 3);
        e.node2_labels = random_distinct_texts(rng, 3);
        e.relation_labels = random_distinct_texts(rng, 2);
        if (rng() % 3 == 0) e.relation_dimension = random_token(rng);
        e.sources = {"CN", "WN", "RG"};
        e.sources.resize(1 + rng() % 3);
        if (rng() % 2 == 0) e.sentence = random_text(rng);
    }
    return builder.take();
}

}  // namespace testutil
