#pragma once

#include <string>
#include <vector>

#include "ctsum/concepts.hpp"
#include "ctsum/corpus_stats.hpp"
#include "ctsum/embeddings.hpp"
#include "ctsum/ranking.hpp"
#include "ctsum/textprep.hpp"

namespace ctsum {

struct PipelineConfig {
    std::size_t k = 10;
    double ratio = 0.25;
    CountMode count_mode = CountMode::Content;
    BudgetMode budget_mode = BudgetMode::Words;
    std::uint64_t seed = 0;
    std::size_t kmeans_max_iters = 100;
    double kmeans_tol = 1e-6;
    TokenizerConfig tokenizer;
};

struct SummarizeResult {
    std::string summary_text;  // selected sentence slices, one per line
    Summary summary;
    std::vector<SentenceScore> ranked;
    std::vector<Concept> concepts;
    std::vector<KeywordScore> keyword_scores;
};

// End-to-end run: tokenize, score keywords, cluster concepts, rank
// sentences, select at the configured compression ratio. Throws
// NoScoreableTermsError when nothing in the document survives the
// stopword / dictionary / embedding filters, and IncompatibleStatsError
// when the stats were built with a different tokenizer config.
SummarizeResult summarize_document(const std::string& text, const CorpusStats& stats,
                                   const EmbeddingTable& table, const StopwordSet& stops,
                                   const PipelineConfig& config);

}  // namespace ctsum
