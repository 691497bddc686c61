#include "ctsum/ranking.hpp"

#include <algorithm>
#include <cmath>

#include "ctsum/errors.hpp"

namespace ctsum {

ConceptIndex index_concepts(const std::vector<Concept>& concepts) {
    ConceptIndex index;
    for (const auto& c : concepts)
        for (const auto& member : c.members) index.emplace(member, &c);
    return index;
}

SentenceScore score_sentence(const SentenceSpan& sentence, const ConceptIndex& concept_of,
                             CountMode mode) {
    SentenceScore out;
    out.sentence = sentence;
    std::size_t assigned = 0;
    for (const auto& tok : sentence.tokens) {
        auto it = concept_of.find(tok.surface);
        if (it == concept_of.end()) continue;
        out.raw_sum += it->second->score;
        ++assigned;
    }
    out.word_count = mode == CountMode::Content ? assigned : sentence.tokens.size();
    if (out.word_count == 0 || assigned == 0) {
        out.word_count = std::max<std::size_t>(out.word_count, 1);
        out.raw_sum = 0.0;
        out.score = 0.0;
        return out;
    }
    out.score = out.raw_sum / static_cast<double>(out.word_count);
    return out;
}

std::vector<SentenceScore> rank_sentences(const std::vector<SentenceSpan>& doc,
                                          const ConceptIndex& concept_of, CountMode mode) {
    std::vector<SentenceScore> ranked;
    ranked.reserve(doc.size());
    for (const auto& s : doc) ranked.push_back(score_sentence(s, concept_of, mode));
    std::stable_sort(ranked.begin(), ranked.end(), [](const SentenceScore& a, const SentenceScore& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.sentence.index < b.sentence.index;
    });
    return ranked;
}

Summary select_summary(const std::vector<SentenceScore>& ranked, double ratio, BudgetMode mode) {
    if (!(ratio > 0.0 && ratio <= 1.0)) throw ConfigError("ratio must be in (0, 1]");
    if (ranked.empty()) throw ContractViolation("select_summary: no sentences");

    std::size_t document_total = 0;
    for (const auto& s : ranked)
        document_total += mode == BudgetMode::Words ? s.sentence.tokens.size() : 1;
    const auto budget = static_cast<std::size_t>(
        std::ceil(ratio * static_cast<double>(document_total)));

    Summary summary;
    std::size_t used = 0;
    for (const auto& s : ranked) {
        const std::size_t cost = mode == BudgetMode::Words ? s.sentence.tokens.size() : 1;
        const bool first = summary.selected.empty();
        if (used + cost > budget && !first) {
            summary.ranking_trace.emplace_back(s.sentence.index, s.score);
            continue;  // skip-if-overflow; keep scanning shorter sentences
        }
        summary.selected.push_back(s.sentence);
        summary.ranking_trace.emplace_back(s.sentence.index, s.score);
        used += cost;
        // At-least-one guarantee: the top-ranked sentence goes in even
        // when it alone exceeds the budget.
    }
    std::sort(summary.selected.begin(), summary.selected.end(),
              [](const SentenceSpan& a, const SentenceSpan& b) { return a.index < b.index; });
    for (const auto& s : summary.selected) summary.total_words += s.tokens.size();
    const std::size_t selected_total =
        mode == BudgetMode::Words ? summary.total_words : summary.selected.size();
    summary.ratio_achieved =
        document_total ? static_cast<double>(selected_total) / static_cast<double>(document_total)
                       : 0.0;
    return summary;
}

}  // namespace ctsum
