#pragma once

#include <map>
#include <string>
#include <vector>

#include "ctsum/concepts.hpp"
#include "ctsum/textprep.hpp"

namespace ctsum {

enum class CountMode { Content, All };       // Eq-5 denominator: concept-assigned tokens vs all
enum class BudgetMode { Words, Sentences };

struct SentenceScore {
    SentenceSpan sentence;
    std::size_t word_count = 0;  // denominator actually used
    double raw_sum = 0.0;
    double score = 0.0;
};

struct Summary {
    std::vector<SentenceSpan> selected;  // document order
    std::size_t total_words = 0;
    double ratio_achieved = 0.0;
    std::vector<std::pair<std::size_t, double>> ranking_trace;  // (sentence index, score), rank order
};

using ConceptIndex = std::map<std::string, const Concept*>;

ConceptIndex index_concepts(const std::vector<Concept>& concepts);

SentenceScore score_sentence(const SentenceSpan& sentence, const ConceptIndex& concept_of,
                             CountMode mode);

// Score descending, ties by earlier sentence index.
std::vector<SentenceScore> rank_sentences(const std::vector<SentenceSpan>& doc,
                                          const ConceptIndex& concept_of, CountMode mode);

// Budget = ceil(ratio * document total); walk the ranking, take what
// fits, and always keep at least the top-ranked sentence. Emits in
// document order.
Summary select_summary(const std::vector<SentenceScore>& ranked, double ratio, BudgetMode mode);

}  // namespace ctsum
