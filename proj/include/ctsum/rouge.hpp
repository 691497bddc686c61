#pragma once

#include <map>
#include <string>
#include <vector>

namespace ctsum {

enum class RougeAgg { Mean, Max };

struct NGramMultiset {
    std::size_t n = 0;
    std::map<std::vector<std::string>, std::size_t> counts;

    std::size_t total() const;
};

struct RougeScore {
    double recall = 0.0;
    double precision = 0.0;
    double f1 = 0.0;
};

NGramMultiset ngrams(const std::vector<std::string>& tokens, std::size_t n);

// Clipped n-gram overlap: match = sum of min(count_sys, count_ref).
RougeScore rouge_n(const std::vector<std::string>& system,
                   const std::vector<std::string>& reference, std::size_t n);

RougeScore rouge_n_multi(const std::vector<std::string>& system,
                         const std::vector<std::vector<std::string>>& references, std::size_t n,
                         RougeAgg agg = RougeAgg::Mean);

struct CorpusReportRow {
    std::size_t n = 0;
    RougeScore avg;
};

struct EvalPair {
    std::vector<std::string> system;
    std::vector<std::vector<std::string>> references;
};

// Unweighted mean over documents of rouge_n_multi, one row per n.
std::vector<CorpusReportRow> evaluate_corpus(const std::vector<EvalPair>& pairs,
                                             const std::vector<std::size_t>& n_values,
                                             RougeAgg agg = RougeAgg::Mean);

}  // namespace ctsum
