#pragma once

#include <map>
#include <string>
#include <vector>

#include "ctsum/corpus_stats.hpp"
#include "ctsum/embeddings.hpp"
#include "ctsum/textprep.hpp"

namespace ctsum {

struct TermStats {
    std::string term;
    std::uint64_t raw_freq = 0;
    std::size_t first_pos = 0;  // token index of first occurrence
};

struct KeywordScore {
    std::string term;
    double tf = 0.0;
    double idf = 0.0;
    double point = 0.0;  // tf * idf
    std::size_t first_pos = 0;
};

std::map<std::string, TermStats> term_frequencies(const std::vector<Token>& tokens);

// raw_freq / max_freq; max_freq must dominate raw_freq.
double tf(const TermStats& term_stats, std::uint64_t max_freq);

// One score per distinct term that is not a stopword, has a document
// frequency in the corpus stats, and has an embedding vector. The TF
// denominator is the max frequency among those surviving terms. Sorted
// by point descending, then first occurrence, then lexicographically.
std::vector<KeywordScore> score_words(const std::vector<Token>& doc_tokens,
                                      const CorpusStats& stats, const EmbeddingTable& table,
                                      const StopwordSet& stops);

std::vector<std::string> top_keywords(const std::vector<KeywordScore>& scores, std::size_t k);

}  // namespace ctsum
