#include "ctsum/keywords.hpp"

#include <algorithm>

#include "ctsum/errors.hpp"

namespace ctsum {

std::map<std::string, TermStats> term_frequencies(const std::vector<Token>& tokens) {
    std::map<std::string, TermStats> out;
    for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
        auto [it, inserted] = out.try_emplace(tokens[pos].surface,
                                              TermStats{tokens[pos].surface, 0, pos});
        ++it->second.raw_freq;
    }
    return out;
}

double tf(const TermStats& term_stats, std::uint64_t max_freq) {
    if (term_stats.raw_freq < 1) throw ContractViolation("tf: raw_freq must be >= 1");
    if (max_freq < term_stats.raw_freq)
        throw ContractViolation("tf: max_freq smaller than raw_freq");
    return static_cast<double>(term_stats.raw_freq) / static_cast<double>(max_freq);
}

std::vector<KeywordScore> score_words(const std::vector<Token>& doc_tokens,
                                      const CorpusStats& stats, const EmbeddingTable& table,
                                      const StopwordSet& stops) {
    const auto filtered = filter_stopwords(doc_tokens, stops);
    const auto freqs = term_frequencies(filtered);

    // Survivors: in the corpus dictionary and in the embedding table.
    std::vector<const TermStats*> survivors;
    for (const auto& [term, ts] : freqs)
        if (stats.doc_freq.count(term) && table.contains(term)) survivors.push_back(&ts);
    if (survivors.empty())
        throw NoScoreableTermsError("no scoreable terms: every token is a stopword or OOV");

    std::uint64_t max_freq = 0;
    for (const auto* ts : survivors) max_freq = std::max(max_freq, ts->raw_freq);

    std::vector<KeywordScore> scores;
    scores.reserve(survivors.size());
    for (const auto* ts : survivors) {
        KeywordScore s;
        s.term = ts->term;
        s.first_pos = ts->first_pos;
        s.tf = tf(*ts, max_freq);
        s.idf = *idf(stats, ts->term);
        s.point = s.tf * s.idf;
        scores.push_back(std::move(s));
    }
    std::sort(scores.begin(), scores.end(), [](const KeywordScore& a, const KeywordScore& b) {
        if (a.point != b.point) return a.point > b.point;
        if (a.first_pos != b.first_pos) return a.first_pos < b.first_pos;
        return a.term < b.term;
    });
    return scores;
}

std::vector<std::string> top_keywords(const std::vector<KeywordScore>& scores, std::size_t k) {
    if (k == 0) throw ConfigError("top_keywords: k must be >= 1");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < scores.size() && i < k; ++i) out.push_back(scores[i].term);
    return out;
}

}  // namespace ctsum
