#include "ctsum/rouge.hpp"

#include <algorithm>

#include "ctsum/errors.hpp"

namespace ctsum {

std::size_t NGramMultiset::total() const {
    std::size_t t = 0;
    for (const auto& [gram, c] : counts) t += c;
    return t;
}

NGramMultiset ngrams(const std::vector<std::string>& tokens, std::size_t n) {
    if (n < 1) throw ConfigError("ngrams: n must be >= 1");
    NGramMultiset out;
    out.n = n;
    if (tokens.size() < n) return out;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        std::vector<std::string> gram(tokens.begin() + i, tokens.begin() + i + n);
        ++out.counts[std::move(gram)];
    }
    return out;
}

RougeScore rouge_n(const std::vector<std::string>& system,
                   const std::vector<std::string>& reference, std::size_t n) {
    const auto sys = ngrams(system, n);
    const auto ref = ngrams(reference, n);
    std::size_t match = 0;
    for (const auto& [gram, ref_count] : ref.counts) {
        auto it = sys.counts.find(gram);
        if (it != sys.counts.end()) match += std::min(ref_count, it->second);
    }
    RougeScore score;
    const auto sys_total = sys.total();
    const auto ref_total = ref.total();
    score.recall = ref_total ? static_cast<double>(match) / static_cast<double>(ref_total) : 0.0;
    score.precision = sys_total ? static_cast<double>(match) / static_cast<double>(sys_total) : 0.0;
    const double pr = score.precision + score.recall;
    score.f1 = pr > 0.0 ? 2.0 * score.precision * score.recall / pr : 0.0;
    return score;
}

RougeScore rouge_n_multi(const std::vector<std::string>& system,
                         const std::vector<std::vector<std::string>>& references, std::size_t n,
                         RougeAgg agg) {
    if (references.empty()) throw ConfigError("rouge_n_multi: at least one reference required");
    RougeScore out;
    for (const auto& ref : references) {
        const auto s = rouge_n(system, ref, n);
        if (agg == RougeAgg::Mean) {
            out.recall += s.recall;
            out.precision += s.precision;
            out.f1 += s.f1;
        } else {
            out.recall = std::max(out.recall, s.recall);
            out.precision = std::max(out.precision, s.precision);
            out.f1 = std::max(out.f1, s.f1);
        }
    }
    if (agg == RougeAgg::Mean) {
        const auto m = static_cast<double>(references.size());
        out.recall /= m;
        out.precision /= m;
        out.f1 /= m;
    }
    return out;
}

std::vector<CorpusReportRow> evaluate_corpus(const std::vector<EvalPair>& pairs,
                                             const std::vector<std::size_t>& n_values,
                                             RougeAgg agg) {
    if (pairs.empty()) throw ConfigError("evaluate_corpus: at least one document pair required");
    std::vector<CorpusReportRow> report;
    for (const auto n : n_values) {
        CorpusReportRow row;
        row.n = n;
        for (const auto& pair : pairs) {
            const auto s = rouge_n_multi(pair.system, pair.references, n, agg);
            row.avg.recall += s.recall;
            row.avg.precision += s.precision;
            row.avg.f1 += s.f1;
        }
        const auto m = static_cast<double>(pairs.size());
        row.avg.recall /= m;
        row.avg.precision /= m;
        row.avg.f1 /= m;
        report.push_back(row);
    }
    return report;
}

}  // namespace ctsum
