#include "ctsum/embeddings.hpp"

#include <cmath>
#include <random>

#include "ctsum/errors.hpp"
#include "doctest.h"

using namespace ctsum;

TEST_CASE("parse minimal file with header") {
    const auto t = parse_embeddings("2 2\na 1 0\nb 0 1\n");
    CHECK(t.dim == 2);
    CHECK(t.vectors.at("a") == Vector{1, 0});
    CHECK(t.vectors.at("b") == Vector{0, 1});
}

TEST_CASE("headerless file infers dim from first row") {
    const auto t = parse_embeddings("a 1 2 3 4\nb 5 6 7 8\n");
    CHECK(t.dim == 4);
    CHECK(t.vectors.size() == 2);
}

TEST_CASE("row with wrong component count is a parse error") {
    CHECK_THROWS_AS(parse_embeddings("2 3\na 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_embeddings("a 1 2\nb 1\n"), ParseError);
    CHECK_THROWS_AS(parse_embeddings("a 1 x\n"), ParseError);
    CHECK_THROWS_AS(parse_embeddings(""), ParseError);
}

TEST_CASE("expected_dim is enforced") {
    CHECK_NOTHROW(parse_embeddings("a 1 0 0\n", 3));
    CHECK_THROWS_AS(parse_embeddings("a 1 0 0\n", 300), ParseError);
}

TEST_CASE("duplicate words: last occurrence wins, counted") {
    const auto t = parse_embeddings("a 1 0\na 0 1\n");
    CHECK(t.duplicate_rows == 1);
    CHECK(t.vectors.at("a") == Vector{0, 1});
}

TEST_CASE("scientific notation floats") {
    const auto t = parse_embeddings("a 1e-2 -2.5E3\n");
    CHECK(t.vectors.at("a")[0] == doctest::Approx(0.01));
    CHECK(t.vectors.at("a")[1] == doctest::Approx(-2500.0));
}

TEST_CASE("vector_of") {
    const auto t = parse_embeddings("cat 1 0\n");
    CHECK(vector_of(t, "cat").has_value());
    CHECK(!vector_of(t, "dog").has_value());
}

TEST_CASE("cosine") {
    const Vector v{0.3, -0.7, 2.0};
    CHECK(cosine(v, v) == doctest::Approx(1.0));
    CHECK(cosine({1, 0}, {0, 1}) == doctest::Approx(0.0));
    CHECK(cosine({1, 1}, {1, 0}) == doctest::Approx(std::sqrt(2.0) / 2.0));
    CHECK_THROWS_AS(cosine({0, 0}, {1, 0}), ContractViolation);
    CHECK_THROWS_AS(cosine({1}, {1, 0}), ContractViolation);
}

TEST_CASE("nearest_word") {
    const auto t = parse_embeddings("a 1 0\nb 0 1\n");
    CHECK(nearest_word(t, {1, 0}, {"a", "b"}) == "a");
    CHECK(nearest_word(t, {0.9, 0.1}) == "a");
    CHECK_THROWS_AS(nearest_word(t, {1, 0}, {"missing"}), ContractViolation);

    // identical vectors: lexicographically smaller word wins
    const auto dup = parse_embeddings("x 1 0\ny 1 0\n");
    CHECK(nearest_word(dup, {1, 0}) == "x");

    // scale invariance of the argmax
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        Vector q{std::uniform_real_distribution<>(-1, 1)(rng),
                 std::uniform_real_distribution<>(-1, 1)(rng)};
        if (l2_norm(q) == 0.0) continue;
        Vector scaled{q[0] * 17.0, q[1] * 17.0};
        CHECK(nearest_word(t, q) == nearest_word(t, scaled));
    }
}

TEST_CASE("normalize") {
    auto t = parse_embeddings("a 3 4\nz 0 0\nu 1 0\n");
    const auto n = normalize(t);
    CHECK(n.normalized);
    CHECK(n.vectors.at("a")[0] == doctest::Approx(0.6));
    CHECK(n.vectors.at("a")[1] == doctest::Approx(0.8));
    CHECK(n.vectors.at("u") == Vector{1, 0});
    CHECK(n.dropped_zero_vectors == 1);
    CHECK(!n.contains("z"));
    // idempotence
    const auto nn = normalize(n);
    CHECK(nn.vectors == n.vectors);
}

TEST_CASE("on unit vectors, euclidean argmin equals cosine argmax") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<> dist(-1, 1);
    for (int trial = 0; trial < 30; ++trial) {
        std::string file;
        std::vector<std::string> words;
        for (int w = 0; w < 6; ++w) {
            Vector v{dist(rng), dist(rng), dist(rng)};
            if (l2_norm(v) < 1e-9) continue;
            const std::string word(1, static_cast<char>('a' + w));
            words.push_back(word);
            file += word + " " + std::to_string(v[0]) + " " + std::to_string(v[1]) + " " +
                    std::to_string(v[2]) + "\n";
        }
        const auto table = normalize(parse_embeddings(file));
        Vector q{dist(rng), dist(rng), dist(rng)};
        if (l2_norm(q) < 1e-9) continue;
        for (double& x : q) x /= l2_norm(q);

        const auto by_cosine = nearest_word(table, q);
        std::string by_euclid;
        double best = 1e300;
        for (const auto& [word, vec] : table.vectors) {
            double d = 0;
            for (std::size_t i = 0; i < vec.size(); ++i) d += (vec[i] - q[i]) * (vec[i] - q[i]);
            if (d < best - 1e-12 || (std::abs(d - best) <= 1e-12 && word < by_euclid)) {
                best = d;
                by_euclid = word;
            }
        }
        CHECK(by_cosine == by_euclid);
    }
}
