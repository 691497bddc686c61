#pragma once

#include <map>
#include <string>
#include <vector>

#include "ctsum/embeddings.hpp"
#include "ctsum/keywords.hpp"

namespace ctsum {

struct KMeansConfig {
    std::size_t k = 10;
    std::size_t max_iters = 100;
    double tol = 1e-6;  // relative centroid-movement threshold
    std::uint64_t seed = 0;
};

struct KMeansResult {
    std::vector<std::size_t> assignment;  // per input point
    std::vector<Vector> centroids;
    std::vector<double> objective_trace;  // sum of squared distances, per iteration
    std::size_t iterations = 0;
};

// Lloyd's iteration under squared Euclidean distance. Assignment ties go
// to the lowest cluster id; an empty cluster is reseeded with the point
// farthest from its assigned centroid (ties: label lexicographic).
// Deterministic for fixed inputs.
KMeansResult kmeans(const std::vector<Vector>& points, const std::vector<std::string>& labels,
                    const std::vector<Vector>& initial_centers, const KMeansConfig& config);

struct Concept {
    std::size_t id = 0;
    std::vector<std::string> members;  // sorted
    Vector centroid;
    std::string criterion_word;
    std::map<std::string, double> nearness;  // member -> [0, 1]
    double score = 0.0;
};

// Clusters the distinct scoreable terms (unit-normalized vectors),
// seeded at the top-keyword vectors in keyword order. One Concept per
// non-empty final cluster, with criterion word, nearness map and score
// populated.
std::vector<Concept> build_concepts(const std::vector<KeywordScore>& doc_terms,
                                    const EmbeddingTable& table,
                                    const std::vector<std::string>& keywords,
                                    const KMeansConfig& config);

// max(0, cosine(term vector, criterion-word vector)).
double nearness(const std::string& term, const Concept& cpt, const EmbeddingTable& table);

// Sum over distinct members of point(w) * nearness(w).
double concept_score(const Concept& cpt, const std::map<std::string, double>& term_points);

}  // namespace ctsum
