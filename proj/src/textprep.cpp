#include "ctsum/textprep.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

#include "ctsum/errors.hpp"

namespace ctsum {

namespace {

std::string encode_utf8(char32_t cp) {
    std::string out;
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    return out;
}

char32_t fold_codepoint(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
    // Latin-1 uppercase letters, excluding the multiplication sign.
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    return cp;
}

bool in_ranges(char32_t cp, std::initializer_list<std::pair<char32_t, char32_t>> ranges) {
    for (auto [lo, hi] : ranges)
        if (cp >= lo && cp <= hi) return true;
    return false;
}

bool is_default_separator(char32_t cp) {
    if (cp < 0x80) return std::isspace(static_cast<int>(cp)) || std::ispunct(static_cast<int>(cp));
    switch (cp) {
        case 0x00A0:  // no-break space
        case 0x00A1: case 0x00AB: case 0x00B7: case 0x00BB: case 0x00BF:
        case 0x060C: case 0x061B: case 0x061F:  // Arabic comma, semicolon, question mark
        case 0x066C: case 0x066D:
        case 0x06D4:  // Arabic full stop
        case 0x1680:
        case 0x2028: case 0x2029: case 0x202F: case 0x205F:
        case 0x3000: case 0x3001: case 0x3002:
            return true;
        default:
            break;
    }
    return in_ranges(cp, {{0x2000, 0x200B},    // spaces + zero-width space
                          {0x2010, 0x2027},    // dashes, quotes, ellipsis
                          {0x2030, 0x205E},    // general punctuation
                          {0xFE50, 0xFE6B},    // small form variants
                          {0xFF01, 0xFF0F},    // fullwidth punctuation
                          {0xFF1A, 0xFF20},
                          {0xFF3B, 0xFF40},
                          {0xFF5B, 0xFF65}});
}

}  // namespace

std::vector<std::pair<char32_t, std::size_t>> decode_utf8(const std::string& text) {
    std::vector<std::pair<char32_t, std::size_t>> out;
    std::size_t i = 0;
    const auto n = text.size();
    while (i < n) {
        const auto b0 = static_cast<unsigned char>(text[i]);
        std::size_t len;
        char32_t cp;
        if (b0 < 0x80) {
            len = 1;
            cp = b0;
        } else if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            throw DecodingError("invalid UTF-8 lead byte at offset " + std::to_string(i));
        }
        if (i + len > n) throw DecodingError("truncated UTF-8 sequence at offset " + std::to_string(i));
        for (std::size_t k = 1; k < len; ++k) {
            const auto b = static_cast<unsigned char>(text[i + k]);
            if ((b & 0xC0) != 0x80)
                throw DecodingError("invalid UTF-8 continuation byte at offset " + std::to_string(i + k));
            cp = (cp << 6) | (b & 0x3F);
        }
        // Reject overlong encodings and surrogates.
        if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
            (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF)
            throw DecodingError("invalid UTF-8 codepoint at offset " + std::to_string(i));
        out.emplace_back(cp, i);
        i += len;
    }
    return out;
}

std::string fold_case(const std::string& utf8) {
    std::string out;
    out.reserve(utf8.size());
    for (auto [cp, off] : decode_utf8(utf8)) out += encode_utf8(fold_codepoint(cp));
    return out;
}

bool is_separator(char32_t cp, const TokenizerConfig& config) {
    if (config.sentence_terminators.count(cp)) return true;
    if (config.extra_separators.count(cp)) return true;
    return config.default_separator_classes && is_default_separator(cp);
}

std::string TokenizerConfig::fingerprint() const {
    std::ostringstream os;
    os << "tok1;sep=" << (default_separator_classes ? "default" : "custom");
    for (char32_t cp : extra_separators) os << "+" << static_cast<std::uint32_t>(cp);
    os << ";term=";
    for (char32_t cp : sentence_terminators) os << static_cast<std::uint32_t>(cp) << ",";
    os << ";fold=" << (case_fold ? 1 : 0) << ";norm=" << normalize_form;
    return os.str();
}

std::vector<Token> tokenize_words(const std::string& text, const TokenizerConfig& config) {
    if (config.normalize_form != "none")
        throw ConfigError("unsupported normalize_form: " + config.normalize_form);
    std::vector<Token> tokens;
    const auto cps = decode_utf8(text);
    std::size_t i = 0;
    while (i < cps.size()) {
        if (is_separator(cps[i].first, config)) {
            ++i;
            continue;
        }
        const std::size_t begin = cps[i].second;
        std::string surface;
        while (i < cps.size() && !is_separator(cps[i].first, config)) {
            surface += encode_utf8(config.case_fold ? fold_codepoint(cps[i].first) : cps[i].first);
            ++i;
        }
        const std::size_t end = i < cps.size() ? cps[i].second : text.size();
        tokens.push_back(Token{std::move(surface), {begin, end}});
    }
    return tokens;
}

std::vector<SentenceSpan> split_sentences(const std::string& text, const TokenizerConfig& config) {
    std::vector<SentenceSpan> sentences;
    const auto cps = decode_utf8(text);
    std::size_t seg_begin = 0;  // index into cps
    auto flush = [&](std::size_t seg_end_cp, std::size_t byte_end) {
        // Trim leading separators so the span starts at real content.
        std::size_t s = seg_begin;
        while (s < seg_end_cp && is_separator(cps[s].first, config)) ++s;
        if (s == seg_end_cp) return;
        const std::size_t byte_begin = cps[s].second;
        std::string slice = text.substr(byte_begin, byte_end - byte_begin);
        SentenceSpan sent;
        sent.index = sentences.size();
        sent.span = {byte_begin, byte_end};
        sent.tokens = tokenize_words(slice, config);
        for (auto& t : sent.tokens) {
            t.span.begin += byte_begin;
            t.span.end += byte_begin;
        }
        if (!sent.tokens.empty()) sentences.push_back(std::move(sent));
    };
    for (std::size_t i = 0; i < cps.size(); ++i) {
        if (config.sentence_terminators.count(cps[i].first)) {
            const std::size_t byte_end =
                i + 1 < cps.size() ? cps[i + 1].second : text.size();
            flush(i + 1, byte_end);
            seg_begin = i + 1;
        }
    }
    flush(cps.size(), text.size());  // trailing segment without a terminator
    return sentences;
}

std::vector<Token> filter_stopwords(const std::vector<Token>& tokens, const StopwordSet& stops) {
    std::vector<Token> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens)
        if (!stops.contains(t.surface)) out.push_back(t);
    return out;
}

StopwordSet stopwords_from_lines(const std::vector<std::string>& lines, const TokenizerConfig& config) {
    StopwordSet set;
    std::size_t hash = 1469598103934665603ULL;  // FNV-1a over the raw lines
    for (const auto& raw : lines) {
        for (char c : raw) {
            hash ^= static_cast<unsigned char>(c);
            hash *= 1099511628211ULL;
        }
        hash ^= '\n';
        hash *= 1099511628211ULL;
        std::string line = raw;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line = line.substr(start);
        if (line.empty() || line[0] == '#') continue;
        set.words.insert(config.case_fold ? fold_case(line) : line);
    }
    std::ostringstream os;
    os << std::hex << hash;
    set.source_fingerprint = os.str();
    return set;
}

StopwordSet load_stopwords(const std::string& path, const TokenizerConfig& config) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open stopword file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return stopwords_from_lines(lines, config);
}

}  // namespace ctsum
