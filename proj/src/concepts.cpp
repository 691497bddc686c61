#include "ctsum/concepts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "ctsum/errors.hpp"

namespace ctsum {

namespace {

double sq_dist(const Vector& a, const Vector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

}  // namespace

KMeansResult kmeans(const std::vector<Vector>& points, const std::vector<std::string>& labels,
                    const std::vector<Vector>& initial_centers, const KMeansConfig& config) {
    const std::size_t n = points.size();
    const std::size_t k = initial_centers.size();
    if (k == 0 || k > n) throw ContractViolation("kmeans: need 1 <= k <= number of points");
    if (labels.size() != n) throw ContractViolation("kmeans: labels/points size mismatch");
    const std::size_t dim = initial_centers.front().size();
    for (const auto& p : points)
        if (p.size() != dim) throw ContractViolation("kmeans: dimension mismatch");
    for (const auto& c : initial_centers)
        if (c.size() != dim) throw ContractViolation("kmeans: dimension mismatch");

    KMeansResult result;
    result.centroids = initial_centers;
    result.assignment.assign(n, 0);

    for (std::size_t iter = 0; iter < config.max_iters; ++iter) {
        // Assignment step; ties go to the lowest cluster id.
        double objective = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t best = 0;
            double best_d = sq_dist(points[i], result.centroids[0]);
            for (std::size_t c = 1; c < k; ++c) {
                const double d = sq_dist(points[i], result.centroids[c]);
                if (d < best_d) {
                    best = c;
                    best_d = d;
                }
            }
            result.assignment[i] = best;
            objective += best_d;
        }
        result.objective_trace.push_back(objective);
        result.iterations = iter + 1;

        // Update step: centroid = mean of members, summed in point order.
        std::vector<Vector> sums(k, Vector(dim, 0.0));
        std::vector<std::size_t> counts(k, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto c = result.assignment[i];
            for (std::size_t d = 0; d < dim; ++d) sums[c][d] += points[i][d];
            ++counts[c];
        }
        std::vector<Vector> next(k);
        for (std::size_t c = 0; c < k; ++c) {
            if (counts[c] > 0) {
                next[c] = sums[c];
                for (double& x : next[c]) x /= static_cast<double>(counts[c]);
            }
        }
        // Reseed empty clusters with the point farthest from its current
        // centroid; deterministic order (distance desc, label asc).
        std::set<std::size_t> taken;
        for (std::size_t c = 0; c < k; ++c) {
            if (counts[c] > 0) continue;
            std::size_t pick = n;
            double pick_d = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (taken.count(i)) continue;
                const double d = sq_dist(points[i], result.centroids[result.assignment[i]]);
                if (d > pick_d || (d == pick_d && pick < n && labels[i] < labels[pick])) {
                    pick = i;
                    pick_d = d;
                }
            }
            next[c] = points[pick];
            taken.insert(pick);
        }

        // Convergence: relative centroid movement below tol.
        double movement = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
            const double norm = std::max(l2_norm(result.centroids[c]),
                                         std::numeric_limits<double>::epsilon());
            movement = std::max(movement, std::sqrt(sq_dist(next[c], result.centroids[c])) / norm);
        }
        result.centroids = std::move(next);
        if (movement < config.tol) break;
    }

    // Final assignment against the final centroids, so the result is a
    // Voronoi partition whether we converged or hit max_iters.
    double final_obj = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = 0;
        double best_d = sq_dist(points[i], result.centroids[0]);
        for (std::size_t c = 1; c < k; ++c) {
            const double d = sq_dist(points[i], result.centroids[c]);
            if (d < best_d) {
                best = c;
                best_d = d;
            }
        }
        result.assignment[i] = best;
        final_obj += best_d;
    }
    result.objective_trace.push_back(final_obj);
    return result;
}

double nearness(const std::string& term, const Concept& cpt, const EmbeddingTable& table) {
    if (!std::binary_search(cpt.members.begin(), cpt.members.end(), term))
        throw ContractViolation("nearness: term '" + term + "' is not a concept member");
    const auto tv = vector_of(table, term);
    const auto cv = vector_of(table, cpt.criterion_word);
    if (!tv || !cv) throw ContractViolation("nearness: missing embedding vector");
    return std::max(0.0, cosine(tv->components, cv->components));
}

double concept_score(const Concept& cpt, const std::map<std::string, double>& term_points) {
    double score = 0.0;
    for (const auto& member : cpt.members) {
        auto pit = term_points.find(member);
        if (pit == term_points.end())
            throw ContractViolation("concept_score: no point(w) for member '" + member + "'");
        auto nit = cpt.nearness.find(member);
        if (nit == cpt.nearness.end())
            throw ContractViolation("concept_score: no nearness for member '" + member + "'");
        score += pit->second * nit->second;
    }
    return score;
}

std::vector<Concept> build_concepts(const std::vector<KeywordScore>& doc_terms,
                                    const EmbeddingTable& table,
                                    const std::vector<std::string>& keywords,
                                    const KMeansConfig& config) {
    if (doc_terms.empty()) throw NoScoreableTermsError("build_concepts: no scoreable terms");
    const std::size_t effective_k =
        std::min({config.k, keywords.size(), doc_terms.size()});
    if (effective_k == 0) throw ContractViolation("build_concepts: no keywords");

    // Points: distinct scoreable terms, unit-normalized, in score order.
    std::vector<std::string> labels;
    std::vector<Vector> points;
    std::map<std::string, double> term_points;
    for (const auto& s : doc_terms) {
        const auto wv = vector_of(table, s.term);
        if (!wv) throw ContractViolation("build_concepts: term '" + s.term + "' has no vector");
        Vector unit = wv->components;
        const double n = l2_norm(unit);
        if (n == 0.0) throw ContractViolation("build_concepts: zero vector for '" + s.term + "'");
        for (double& x : unit) x /= n;
        labels.push_back(s.term);
        points.push_back(std::move(unit));
        term_points[s.term] = s.point;
    }

    std::vector<Vector> centers;
    for (std::size_t i = 0; i < effective_k; ++i) {
        const auto wv = vector_of(table, keywords[i]);
        if (!wv) throw ContractViolation("build_concepts: keyword '" + keywords[i] + "' has no vector");
        Vector unit = wv->components;
        const double n = l2_norm(unit);
        for (double& x : unit) x /= n;
        centers.push_back(std::move(unit));
    }

    const auto km = kmeans(points, labels, centers, config);

    std::vector<Concept> concepts;
    for (std::size_t c = 0; c < centers.size(); ++c) {
        Concept cpt;
        cpt.centroid = km.centroids[c];
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (km.assignment[i] == c) cpt.members.push_back(labels[i]);
        if (cpt.members.empty()) continue;
        std::sort(cpt.members.begin(), cpt.members.end());
        cpt.id = concepts.size();
        cpt.criterion_word = nearest_word(table, cpt.centroid, cpt.members);
        for (const auto& member : cpt.members)
            cpt.nearness[member] = nearness(member, cpt, table);
        cpt.score = concept_score(cpt, term_points);
        concepts.push_back(std::move(cpt));
    }
    return concepts;
}

}  // namespace ctsum
