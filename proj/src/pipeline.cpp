#include "ctsum/pipeline.hpp"

#include "ctsum/errors.hpp"
#include "ctsum/keywords.hpp"

namespace ctsum {

SummarizeResult summarize_document(const std::string& text, const CorpusStats& stats,
                                   const EmbeddingTable& table, const StopwordSet& stops,
                                   const PipelineConfig& config) {
    if (!stats.tokenizer_fingerprint.empty() &&
        stats.tokenizer_fingerprint != config.tokenizer.fingerprint())
        throw IncompatibleStatsError(
            "corpus stats were built with a different tokenizer configuration");

    const auto sentences = split_sentences(text, config.tokenizer);
    if (sentences.empty()) throw NoScoreableTermsError("document contains no sentences");

    std::vector<Token> doc_tokens;
    for (const auto& s : sentences)
        doc_tokens.insert(doc_tokens.end(), s.tokens.begin(), s.tokens.end());

    const auto unit_table = normalize(table);

    SummarizeResult result;
    result.keyword_scores = score_words(doc_tokens, stats, unit_table, stops);
    const auto keywords = top_keywords(result.keyword_scores, config.k);

    KMeansConfig km;
    km.k = config.k;
    km.max_iters = config.kmeans_max_iters;
    km.tol = config.kmeans_tol;
    km.seed = config.seed;
    result.concepts = build_concepts(result.keyword_scores, unit_table, keywords, km);

    const auto concept_of = index_concepts(result.concepts);
    result.ranked = rank_sentences(sentences, concept_of, config.count_mode);
    result.summary = select_summary(result.ranked, config.ratio, config.budget_mode);

    for (const auto& s : result.summary.selected) {
        result.summary_text += text.substr(s.span.begin, s.span.end - s.span.begin);
        result.summary_text += '\n';
    }
    return result;
}

}  // namespace ctsum
