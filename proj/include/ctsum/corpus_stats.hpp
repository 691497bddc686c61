#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctsum/textprep.hpp"

namespace ctsum {

// Corpus-level dictionary: document count, per-word document frequency
// and collection frequency. Built once over the corpus, persisted, and
// reused by every summarization run.
struct CorpusStats {
    std::uint64_t doc_count = 0;
    std::map<std::string, std::uint64_t> doc_freq;
    std::map<std::string, std::uint64_t> coll_freq;
    std::string tokenizer_fingerprint;

    bool empty() const { return doc_count == 0; }
};

CorpusStats build_stats(const std::vector<std::string>& documents, const TokenizerConfig& config);

// Entrywise sum; requires equal tokenizer fingerprints (the empty stats
// merges with anything).
CorpusStats merge_stats(const CorpusStats& a, const CorpusStats& b);

// log2(N / n_word); absent word yields no value (the word leaves the
// scoring pipeline entirely).
std::optional<double> idf(const CorpusStats& stats, const std::string& word);

// k most collection-frequent words, ties broken lexicographically.
std::vector<std::string> top_frequent(const CorpusStats& stats, std::size_t k);

// Canonical text format: equal stats serialize to identical bytes.
std::string serialize_stats(const CorpusStats& stats);
void save_stats(const CorpusStats& stats, const std::string& path);
CorpusStats parse_stats(const std::string& content);
CorpusStats load_stats(const std::string& path);

}  // namespace ctsum
