#include "ctsum/textprep.hpp"

#include <random>

#include "ctsum/errors.hpp"
#include "doctest.h"

using namespace ctsum;

namespace {
std::vector<std::string> surfaces(const std::vector<Token>& toks) {
    std::vector<std::string> out;
    for (const auto& t : toks) out.push_back(t.surface);
    return out;
}
}  // namespace

TEST_CASE("tokenize_words basics") {
    TokenizerConfig cfg;
    CHECK(tokenize_words("", cfg).empty());
    CHECK(surfaces(tokenize_words("a b  c", cfg)) == std::vector<std::string>{"a", "b", "c"});
    // Arabic comma is a separator in the default classes.
    CHECK(surfaces(tokenize_words("کتاب، قلم", cfg)) ==
          std::vector<std::string>{"کتاب", "قلم"});
}

TEST_CASE("tokenize_words offset soundness") {
    TokenizerConfig cfg;
    const std::string text = "Hello, World! کتاب";
    for (const auto& t : tokenize_words(text, cfg)) {
        const std::string original = text.substr(t.span.begin, t.span.end - t.span.begin);
        CHECK(fold_case(original) == t.surface);
    }
}

TEST_CASE("tokenize_words case folding") {
    TokenizerConfig cfg;
    CHECK(surfaces(tokenize_words("CaT", cfg)) == std::vector<std::string>{"cat"});
    cfg.case_fold = false;
    CHECK(surfaces(tokenize_words("CaT", cfg)) == std::vector<std::string>{"CaT"});
}

TEST_CASE("tokenize_words rejects invalid UTF-8") {
    TokenizerConfig cfg;
    CHECK_THROWS_AS(tokenize_words(std::string("ab\xFFzz", 5), cfg), DecodingError);
    CHECK_THROWS_AS(tokenize_words(std::string("\xC3", 1), cfg), DecodingError);
}

TEST_CASE("split_sentences basics") {
    TokenizerConfig cfg;
    CHECK(split_sentences("A. B.", cfg).size() == 2);
    CHECK(split_sentences("A", cfg).size() == 1);  // trailing segment
    const auto s = split_sentences("x? y! z.", cfg);
    REQUIRE(s.size() == 3);
    CHECK(s[0].tokens[0].surface == "x");
    CHECK(s[1].tokens[0].surface == "y");
    CHECK(s[2].tokens[0].surface == "z");
    CHECK(s[0].index == 0);
    CHECK(s[2].index == 2);
}

TEST_CASE("split_sentences spans are ordered and non-overlapping") {
    TokenizerConfig cfg;
    const std::string text = "First one. Second, with comma! Third?  Tail without dot";
    const auto sents = split_sentences(text, cfg);
    REQUIRE(sents.size() == 4);
    for (std::size_t i = 1; i < sents.size(); ++i)
        CHECK(sents[i - 1].span.end <= sents[i].span.begin);
}

TEST_CASE("sentence tokens partition the document tokens") {
    TokenizerConfig cfg;
    const std::string text = "One two. Three four five! کتاب، قلم؟ six";
    const auto whole = tokenize_words(text, cfg);
    std::vector<Token> parts;
    for (const auto& s : split_sentences(text, cfg))
        parts.insert(parts.end(), s.tokens.begin(), s.tokens.end());
    CHECK(whole == parts);
}

TEST_CASE("filter_stopwords") {
    TokenizerConfig cfg;
    StopwordSet stops;
    stops.words = {"the"};
    const auto toks = tokenize_words("the cat", cfg);
    const auto out = filter_stopwords(toks, stops);
    REQUIRE(out.size() == 1);
    CHECK(out[0].surface == "cat");

    // identity on empty stopword set
    StopwordSet none;
    CHECK(filter_stopwords(toks, none) == toks);

    // case_fold applies before matching
    StopwordSet a;
    a.words = {"a"};
    CHECK(filter_stopwords(tokenize_words("a A", cfg), a).empty());

    // idempotence
    CHECK(filter_stopwords(out, stops) == out);
}

TEST_CASE("stopword list parsing") {
    TokenizerConfig cfg;
    const auto set = stopwords_from_lines({"# comment", "", "The", "of "}, cfg);
    CHECK(set.words == std::set<std::string>{"the", "of"});
    CHECK(!set.source_fingerprint.empty());
    // different content, different fingerprint
    const auto other = stopwords_from_lines({"the"}, cfg);
    CHECK(other.source_fingerprint != set.source_fingerprint);
}

TEST_CASE("tokenizer fingerprint is stable and config-sensitive") {
    TokenizerConfig a, b;
    CHECK(a.fingerprint() == b.fingerprint());
    b.case_fold = false;
    CHECK(a.fingerprint() != b.fingerprint());
    TokenizerConfig c;
    c.extra_separators.insert(U'_');
    CHECK(a.fingerprint() != c.fingerprint());
}

TEST_CASE("random ascii documents: partition property") {
    TokenizerConfig cfg;
    std::mt19937 rng(7);
    const std::string alphabet = "ab .!?x";
    for (int trial = 0; trial < 50; ++trial) {
        std::string text;
        const auto len = rng() % 80;
        for (std::size_t i = 0; i < len; ++i) text += alphabet[rng() % alphabet.size()];
        const auto whole = tokenize_words(text, cfg);
        std::vector<Token> parts;
        for (const auto& s : split_sentences(text, cfg))
            parts.insert(parts.end(), s.tokens.begin(), s.tokens.end());
        CHECK(whole == parts);
    }
}
