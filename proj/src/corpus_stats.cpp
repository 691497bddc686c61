#include "ctsum/corpus_stats.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "ctsum/errors.hpp"

namespace ctsum {

CorpusStats build_stats(const std::vector<std::string>& documents, const TokenizerConfig& config) {
    if (documents.empty()) throw ConfigError("empty corpus: at least one document required");
    CorpusStats stats;
    stats.tokenizer_fingerprint = config.fingerprint();
    for (const auto& doc : documents) {
        ++stats.doc_count;
        std::set<std::string> seen;
        for (const auto& tok : tokenize_words(doc, config)) {
            ++stats.coll_freq[tok.surface];
            if (seen.insert(tok.surface).second) ++stats.doc_freq[tok.surface];
        }
    }
    return stats;
}

CorpusStats merge_stats(const CorpusStats& a, const CorpusStats& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.tokenizer_fingerprint != b.tokenizer_fingerprint)
        throw IncompatibleStatsError("cannot merge stats with different tokenizer fingerprints");
    CorpusStats out = a;
    out.doc_count += b.doc_count;
    for (const auto& [w, n] : b.doc_freq) out.doc_freq[w] += n;
    for (const auto& [w, n] : b.coll_freq) out.coll_freq[w] += n;
    return out;
}

std::optional<double> idf(const CorpusStats& stats, const std::string& word) {
    auto it = stats.doc_freq.find(word);
    if (it == stats.doc_freq.end()) return std::nullopt;
    return std::log2(static_cast<double>(stats.doc_count) / static_cast<double>(it->second));
}

std::vector<std::string> top_frequent(const CorpusStats& stats, std::size_t k) {
    if (k == 0) throw ConfigError("top_frequent: k must be >= 1");
    std::vector<std::pair<std::string, std::uint64_t>> items(stats.coll_freq.begin(),
                                                             stats.coll_freq.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    std::vector<std::string> out;
    for (std::size_t i = 0; i < items.size() && i < k; ++i) out.push_back(items[i].first);
    return out;
}

std::string serialize_stats(const CorpusStats& stats) {
    std::ostringstream os;
    os << "version 1\n";
    os << "doc_count " << stats.doc_count << "\n";
    os << "tokenizer_fingerprint " << stats.tokenizer_fingerprint << "\n";
    os << "entries " << stats.doc_freq.size() << "\n";
    // doc_freq and coll_freq share a key set by construction; std::map
    // iteration gives the lexicographic order that makes the file canonical.
    for (const auto& [word, df] : stats.doc_freq) {
        auto cf = stats.coll_freq.find(word);
        os << word << "\t" << df << "\t" << (cf == stats.coll_freq.end() ? df : cf->second)
           << "\n";
    }
    return os.str();
}

void save_stats(const CorpusStats& stats, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write stats file: " + path);
    out << serialize_stats(stats);
}

namespace {

std::uint64_t parse_count(const std::string& s, std::size_t lineno, const char* field) {
    try {
        std::size_t pos = 0;
        const auto v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("stats line " + std::to_string(lineno) + ": bad " + field + " '" + s + "'");
    }
}

std::string expect_field(std::istream& in, const std::string& key, std::size_t& lineno) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("stats file truncated: missing '" + key + "' (line " +
                         std::to_string(lineno) + ")");
    ++lineno;
    if (line.rfind(key + " ", 0) != 0)
        throw ParseError("stats line " + std::to_string(lineno) + ": expected '" + key + "'");
    return line.substr(key.size() + 1);
}

}  // namespace

CorpusStats parse_stats(const std::string& content) {
    std::istringstream in(content);
    std::size_t lineno = 0;
    const auto version = expect_field(in, "version", lineno);
    if (version != "1") throw ParseError("unsupported stats version: " + version);
    CorpusStats stats;
    stats.doc_count = parse_count(expect_field(in, "doc_count", lineno), lineno, "doc_count");
    stats.tokenizer_fingerprint = expect_field(in, "tokenizer_fingerprint", lineno);
    const auto entry_count = parse_count(expect_field(in, "entries", lineno), lineno, "entries");
    std::string line;
    for (std::uint64_t i = 0; i < entry_count; ++i) {
        if (!std::getline(in, line))
            throw ParseError("stats file truncated: expected " + std::to_string(entry_count) +
                             " entries, got " + std::to_string(i));
        ++lineno;
        const auto t1 = line.find('\t');
        const auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos)
            throw ParseError("stats line " + std::to_string(lineno) + ": expected word\\tdf\\tcf");
        const std::string word = line.substr(0, t1);
        const auto df = parse_count(line.substr(t1 + 1, t2 - t1 - 1), lineno, "doc_freq");
        const auto cf = parse_count(line.substr(t2 + 1), lineno, "coll_freq");
        if (word.empty()) throw ParseError("stats line " + std::to_string(lineno) + ": empty word");
        if (df < 1 || df > stats.doc_count)
            throw ParseError("stats line " + std::to_string(lineno) +
                             ": doc_freq out of range [1, doc_count]");
        if (cf < df)
            throw ParseError("stats line " + std::to_string(lineno) + ": coll_freq < doc_freq");
        if (!stats.doc_freq.emplace(word, df).second)
            throw ParseError("stats line " + std::to_string(lineno) + ": duplicate word '" + word + "'");
        stats.coll_freq.emplace(word, cf);
    }
    return stats;
}

CorpusStats load_stats(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open stats file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_stats(buf.str());
}

}  // namespace ctsum
