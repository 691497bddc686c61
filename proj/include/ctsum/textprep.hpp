#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace ctsum {

// Byte range [begin, end) into the original UTF-8 source text.
struct CharSpan {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
    bool operator==(const CharSpan&) const = default;
};

struct Token {
    std::string surface;  // case-folded per config
    CharSpan span;        // covers the pre-fold bytes in the source

    bool operator==(const Token&) const = default;
};

struct SentenceSpan {
    std::size_t index = 0;  // ordinal position in the document
    std::vector<Token> tokens;
    CharSpan span;
};

struct TokenizerConfig {
    // The built-in separator classes cover Unicode whitespace and the
    // common punctuation blocks (ASCII, general punctuation, Arabic
    // punctuation, CJK and fullwidth forms).
    bool default_separator_classes = true;
    std::set<char32_t> extra_separators;
    std::set<char32_t> sentence_terminators = {U'.', U'!', U'?', U'؟', U'۔', U'\n'};
    bool case_fold = true;
    std::string normalize_form = "none";  // only "none" is supported

    // Canonical serialization; equal configs produce equal strings.
    std::string fingerprint() const;
};

struct StopwordSet {
    std::set<std::string> words;
    std::string source_fingerprint;

    bool contains(const std::string& w) const { return words.count(w) != 0; }
};

// UTF-8 helpers. decode_utf8 validates and throws DecodingError on
// malformed input.
std::vector<std::pair<char32_t, std::size_t>> decode_utf8(const std::string& text);
std::string fold_case(const std::string& utf8);

bool is_separator(char32_t cp, const TokenizerConfig& config);

std::vector<Token> tokenize_words(const std::string& text, const TokenizerConfig& config);
std::vector<SentenceSpan> split_sentences(const std::string& text, const TokenizerConfig& config);
std::vector<Token> filter_stopwords(const std::vector<Token>& tokens, const StopwordSet& stops);

// One word per line; '#' comments and blank lines ignored. Words are
// case-folded with the same rules the tokenizer applies.
StopwordSet load_stopwords(const std::string& path, const TokenizerConfig& config);
StopwordSet stopwords_from_lines(const std::vector<std::string>& lines, const TokenizerConfig& config);

}  // namespace ctsum
