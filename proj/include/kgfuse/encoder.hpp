#pragma once
// Pluggable sentence encoders. The built-in encoder is a hash-seeded
// random projection of character n-gram counts: fully deterministic, no
// model files, fixed dimension. A file-backed adapter serves vectors
// precomputed by an external model.

#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "kgfuse/util.hpp"

namespace kgfuse {

class TextEncoder {
public:
    virtual ~TextEncoder() = default;
    virtual size_t dimension() const = 0;
    // Deterministic: equal text yields an equal vector.
    virtual std::vector<double> encode(const std::string& text) const = 0;
};

namespace detail {

inline uint64_t fnv1a(std::string_view s, uint64_t seed) {
    uint64_t h = 1469598103934665603ULL ^ (seed * 0x9E3779B97F4A7C15ULL);
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline uint64_t splitmix64(uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace detail

class BuiltinEncoder : public TextEncoder {
public:
    explicit BuiltinEncoder(size_t dimension = 128, uint64_t seed = 0)
        : dimension_(dimension), seed_(seed) {
        if (dimension_ == 0) throw ValidationError("encoder dimension must be positive");
    }

    size_t dimension() const override { return dimension_; }

    std::vector<double> encode(const std::string& text) const override {
        std::vector<double> vec(dimension_, 0.0);
        const std::string norm = " " + normalize_label(text) + " ";
        for (size_t n = 1; n <= 3; ++n) {
            if (norm.size() < n) break;
            for (size_t i = 0; i + n <= norm.size(); ++i) {
                std::string_view gram(norm.data() + i, n);
                // two hashed slots per n-gram with signs drawn from the hash
                uint64_t state = detail::fnv1a(gram, seed_);
                for (int slot = 0; slot < 2; ++slot) {
                    uint64_t bits = detail::splitmix64(state);
                    size_t idx = bits % dimension_;
                    double sign = (bits >> 63) ? 1.0 : -1.0;
                    vec[idx] += sign;
                }
            }
        }
        double norm2 = 0.0;
        for (double v : vec) norm2 += v * v;
        norm2 = std::sqrt(norm2);
        if (norm2 > 0.0) {
            for (double& v : vec) v /= norm2;
        }
        return vec;
    }

private:
    size_t dimension_;
    uint64_t seed_;
};

// Looks texts up in a TSV of `text \t c1 c2 ... cd`. Unknown text is an
// error so a missing precomputed vector cannot silently degrade a run.
class FileEncoder : public TextEncoder {
public:
    explicit FileEncoder(const std::string& path) {
        auto lines = split_lines(read_file(path));
        for (size_t i = 0; i < lines.size(); ++i) {
            if (lines[i].empty() || lines[i][0] == '#') continue;
            auto cells = split(lines[i], '\t');
            if (cells.size() != 2) {
                throw ValidationError(path + ": line " + std::to_string(i + 1) +
                                      ": expected 2 columns (text, vector)");
            }
            std::vector<double> vec;
            for (const auto& comp : split(cells[1], ' ')) {
                if (comp.empty()) continue;
                try {
                    vec.push_back(std::stod(comp));
                } catch (const std::exception&) {
                    throw ValidationError(path + ": line " + std::to_string(i + 1) +
                                          ": bad vector component '" + comp + "'");
                }
            }
            if (vec.empty()) {
                throw ValidationError(path + ": line " + std::to_string(i + 1) + ": empty vector");
            }
            if (dimension_ == 0) dimension_ = vec.size();
            if (vec.size() != dimension_) {
                throw ValidationError(path + ": line " + std::to_string(i + 1) +
                                      ": inconsistent vector dimension");
            }
            vectors_[normalize_label(cells[0])] = std::move(vec);
        }
        if (vectors_.empty()) throw ValidationError(path + ": no vectors");
    }

    size_t dimension() const override { return dimension_; }

    std::vector<double> encode(const std::string& text) const override {
        auto it = vectors_.find(normalize_label(text));
        if (it == vectors_.end()) {
            throw std::runtime_error("encoder has no vector for text: " + text);
        }
        return it->second;
    }

private:
    size_t dimension_ = 0;
    std::unordered_map<std::string, std::vector<double>> vectors_;
};

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

// Cosine similarity; a zero vector has no direction and compares as -1.
inline double cosine(const std::vector<double>& a, const std::vector<double>& b) {
    double na = norm(a);
    double nb = norm(b);
    if (na == 0.0 || nb == 0.0) return -1.0;
    return dot(a, b) / (na * nb);
}

}  // namespace kgfuse
