#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ctsum {

using Vector = std::vector<double>;

struct WordVector {
    std::string word;
    Vector components;
};

// Word -> dense vector table loaded from the text vector format
// (optional "vocab_size dim" header, then "word v1 ... v_dim" rows).
struct EmbeddingTable {
    std::size_t dim = 0;
    std::map<std::string, Vector> vectors;
    bool normalized = false;
    std::size_t duplicate_rows = 0;  // duplicate words seen during load
    std::size_t dropped_zero_vectors = 0;

    bool contains(const std::string& word) const { return vectors.count(word) != 0; }
};

EmbeddingTable parse_embeddings(const std::string& content,
                                std::optional<std::size_t> expected_dim = std::nullopt);
EmbeddingTable load_embeddings(const std::string& path,
                               std::optional<std::size_t> expected_dim = std::nullopt);

std::optional<WordVector> vector_of(const EmbeddingTable& table, const std::string& word);

// Clamped to [-1, 1]; throws on zero vectors or length mismatch.
double cosine(const Vector& u, const Vector& v);

double dot(const Vector& u, const Vector& v);
double l2_norm(const Vector& v);

// Candidate maximizing cosine with the query; ties broken
// lexicographically. Empty candidate set is an error. An empty
// `candidates` argument means the whole vocabulary.
std::string nearest_word(const EmbeddingTable& table, const Vector& query,
                         const std::vector<std::string>& candidates = {});

// Scales every vector to unit L2 norm; zero vectors are dropped and
// counted in dropped_zero_vectors.
EmbeddingTable normalize(const EmbeddingTable& table);

}  // namespace ctsum
