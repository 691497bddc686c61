#include "ctsum/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ctsum/errors.hpp"

namespace ctsum {

namespace {

bool looks_like_header(const std::string& line) {
    std::istringstream is(line);
    std::uint64_t a = 0, b = 0;
    std::string rest;
    return static_cast<bool>(is >> a >> b) && !(is >> rest);
}

Vector parse_row(const std::string& line, std::size_t lineno, std::string& word) {
    std::istringstream is(line);
    if (!(is >> word))
        throw ParseError("embedding line " + std::to_string(lineno) + ": empty row");
    Vector v;
    double x;
    while (is >> x) {
        if (!std::isfinite(x))
            throw ParseError("embedding line " + std::to_string(lineno) + ": non-finite component");
        v.push_back(x);
    }
    if (!is.eof())
        throw ParseError("embedding line " + std::to_string(lineno) + ": malformed float");
    if (v.empty())
        throw ParseError("embedding line " + std::to_string(lineno) + ": no components");
    return v;
}

}  // namespace

EmbeddingTable parse_embeddings(const std::string& content, std::optional<std::size_t> expected_dim) {
    std::istringstream in(content);
    EmbeddingTable table;
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> declared_dim;
    bool first_data_line = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first_data_line && looks_like_header(line)) {
            std::istringstream is(line);
            std::uint64_t vocab = 0, d = 0;
            is >> vocab >> d;
            if (d == 0) throw ParseError("embedding header declares dim 0");
            declared_dim = d;
            first_data_line = false;
            continue;
        }
        first_data_line = false;
        std::string word;
        Vector v = parse_row(line, lineno, word);
        if (!declared_dim) declared_dim = v.size();  // infer from first row
        if (v.size() != *declared_dim)
            throw ParseError("embedding line " + std::to_string(lineno) + ": expected " +
                             std::to_string(*declared_dim) + " components, got " +
                             std::to_string(v.size()));
        auto [it, inserted] = table.vectors.emplace(std::move(word), std::move(v));
        if (!inserted) {
            it->second = parse_row(line, lineno, word);  // last occurrence wins
            ++table.duplicate_rows;
        }
    }
    if (!declared_dim || table.vectors.empty()) throw ParseError("embedding file has no vectors");
    table.dim = *declared_dim;
    if (expected_dim && table.dim != *expected_dim)
        throw ParseError("embedding dimension " + std::to_string(table.dim) +
                         " does not match expected " + std::to_string(*expected_dim));
    return table;
}

EmbeddingTable load_embeddings(const std::string& path, std::optional<std::size_t> expected_dim) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open embedding file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_embeddings(buf.str(), expected_dim);
}

std::optional<WordVector> vector_of(const EmbeddingTable& table, const std::string& word) {
    auto it = table.vectors.find(word);
    if (it == table.vectors.end()) return std::nullopt;
    return WordVector{it->first, it->second};
}

double dot(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) throw ContractViolation("dot: vector length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

double l2_norm(const Vector& v) { return std::sqrt(dot(v, v)); }

double cosine(const Vector& u, const Vector& v) {
    const double nu = l2_norm(u), nv = l2_norm(v);
    if (nu == 0.0 || nv == 0.0) throw ContractViolation("cosine: undefined for zero vector");
    return std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
}

std::string nearest_word(const EmbeddingTable& table, const Vector& query,
                         const std::vector<std::string>& candidates) {
    if (query.size() != table.dim) throw ContractViolation("nearest_word: query dimension mismatch");
    const std::string* best = nullptr;
    double best_sim = 0.0;
    auto consider = [&](const std::string& word, const Vector& vec) {
        const double sim = cosine(query, vec);
        if (!best || sim > best_sim || (sim == best_sim && word < *best)) {
            best = &word;
            best_sim = sim;
        }
    };
    if (candidates.empty()) {
        for (const auto& [word, vec] : table.vectors) consider(word, vec);
    } else {
        for (const auto& word : candidates) {
            auto it = table.vectors.find(word);
            if (it == table.vectors.end())
                throw ContractViolation("nearest_word: candidate '" + word + "' not in table");
            consider(it->first, it->second);
        }
    }
    if (!best) throw ContractViolation("nearest_word: empty candidate set");
    return *best;
}

EmbeddingTable normalize(const EmbeddingTable& table) {
    if (table.normalized) return table;
    EmbeddingTable out;
    out.dim = table.dim;
    out.normalized = true;
    out.duplicate_rows = table.duplicate_rows;
    for (const auto& [word, vec] : table.vectors) {
        const double n = l2_norm(vec);
        if (n == 0.0) {
            ++out.dropped_zero_vectors;
            continue;
        }
        Vector unit(vec.size());
        for (std::size_t i = 0; i < vec.size(); ++i) unit[i] = vec[i] / n;
        out.vectors.emplace(word, std::move(unit));
    }
    return out;
}

}  // namespace ctsum
