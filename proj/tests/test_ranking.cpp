#include "ctsum/ranking.hpp"

#include "ctsum/errors.hpp"
#include "doctest.h"

using namespace ctsum;

namespace {

TokenizerConfig tok_cfg;

// Document with sentence tokens and a concept map built from plain lists.
struct RankFixture {
    std::vector<Concept> concepts;
    ConceptIndex concept_of;

    RankFixture(std::vector<std::pair<std::vector<std::string>, double>> defs) {
        for (const auto& [members, score] : defs) {
            Concept c;
            c.id = concepts.size();
            c.members = members;
            c.score = score;
            concepts.push_back(c);
        }
        concept_of = index_concepts(concepts);
    }
};

SentenceSpan sentence(const std::string& text, std::size_t index = 0) {
    auto sents = split_sentences(text, tok_cfg);
    REQUIRE(sents.size() == 1);
    sents[0].index = index;
    return sents[0];
}

}  // namespace

TEST_CASE("score_sentence: single concept normalizes to point(C)") {
    RankFixture f{{{{"w"}, 2.5}}};
    const auto s = score_sentence(sentence("w w w w"), f.concept_of, CountMode::Content);
    CHECK(s.raw_sum == doctest::Approx(10.0));
    CHECK(s.word_count == 4);
    CHECK(s.score == doctest::Approx(2.5));
}

TEST_CASE("score_sentence: no assignable tokens scores 0") {
    RankFixture f{{{{"w"}, 2.5}}};
    const auto s = score_sentence(sentence("the of and"), f.concept_of, CountMode::Content);
    CHECK(s.score == doctest::Approx(0.0));
    const auto s2 = score_sentence(sentence("the of and"), f.concept_of, CountMode::All);
    CHECK(s2.score == doctest::Approx(0.0));
}

TEST_CASE("score_sentence: mixed concepts, hand value") {
    RankFixture f{{{{"x"}, 2.0}, {{"y"}, 4.0}}};
    const auto s = score_sentence(sentence("x y"), f.concept_of, CountMode::Content);
    CHECK(s.score == doctest::Approx(3.0));
}

TEST_CASE("count modes differ only in the denominator") {
    RankFixture f{{{{"x"}, 2.0}}};
    const auto content = score_sentence(sentence("x x filler"), f.concept_of, CountMode::Content);
    const auto all = score_sentence(sentence("x x filler"), f.concept_of, CountMode::All);
    CHECK(content.word_count == 2);
    CHECK(all.word_count == 3);
    CHECK(content.raw_sum == doctest::Approx(all.raw_sum));
}

TEST_CASE("length neutrality: duplicating every token leaves the score unchanged") {
    RankFixture f{{{{"x"}, 2.0}, {{"y"}, 4.0}}};
    for (auto mode : {CountMode::Content, CountMode::All}) {
        const auto once = score_sentence(sentence("x y filler"), f.concept_of, mode);
        const auto twice = score_sentence(sentence("x y filler x y filler"), f.concept_of, mode);
        CHECK(once.score == doctest::Approx(twice.score).epsilon(1e-12));
    }
}

TEST_CASE("rank_sentences order and tie-break") {
    RankFixture f{{{{"a"}, 1.0}, {{"b"}, 3.0}, {{"c"}, 2.0}}};
    std::vector<SentenceSpan> doc{sentence("a", 0), sentence("b", 1), sentence("c", 2)};
    const auto ranked = rank_sentences(doc, f.concept_of, CountMode::Content);
    REQUIRE(ranked.size() == 3);
    CHECK(ranked[0].sentence.index == 1);
    CHECK(ranked[1].sentence.index == 2);
    CHECK(ranked[2].sentence.index == 0);

    // equal scores: document order
    std::vector<SentenceSpan> tied{sentence("b", 0), sentence("b", 1)};
    const auto tr = rank_sentences(tied, f.concept_of, CountMode::Content);
    CHECK(tr[0].sentence.index == 0);
    CHECK(tr[1].sentence.index == 1);

    const auto single = rank_sentences({sentence("a", 0)}, f.concept_of, CountMode::Content);
    CHECK(single.size() == 1);
}

TEST_CASE("select_summary: ratio 1.0 keeps everything in document order") {
    RankFixture f{{{{"a"}, 1.0}, {{"b"}, 3.0}}};
    std::vector<SentenceSpan> doc{sentence("a", 0), sentence("b", 1)};
    const auto ranked = rank_sentences(doc, f.concept_of, CountMode::Content);
    const auto summary = select_summary(ranked, 1.0, BudgetMode::Words);
    REQUIRE(summary.selected.size() == 2);
    CHECK(summary.selected[0].index == 0);
    CHECK(summary.selected[1].index == 1);
}

TEST_CASE("select_summary: word-budget arithmetic") {
    // 4 equal-length sentences, ratio 0.25 -> exactly the top-ranked one.
    RankFixture f{{{{"a"}, 1.0}, {{"b"}, 3.0}, {{"c"}, 2.0}, {{"d"}, 1.5}}};
    std::vector<SentenceSpan> doc{sentence("a a", 0), sentence("b b", 1), sentence("c c", 2),
                                  sentence("d d", 3)};
    const auto ranked = rank_sentences(doc, f.concept_of, CountMode::Content);
    const auto summary = select_summary(ranked, 0.25, BudgetMode::Words);
    REQUIRE(summary.selected.size() == 1);
    CHECK(summary.selected[0].index == 1);
}

TEST_CASE("select_summary: at-least-one guarantee") {
    RankFixture f{{{{"b"}, 3.0}, {{"a"}, 1.0}}};
    std::vector<SentenceSpan> doc{sentence("b b b b b b b b b b", 0), sentence("a", 1)};
    const auto ranked = rank_sentences(doc, f.concept_of, CountMode::Content);
    const auto summary = select_summary(ranked, 0.1, BudgetMode::Words);
    // budget ceil(0.1*11)=2 < 10, but the top sentence goes in anyway
    REQUIRE(summary.selected.size() == 1);
    CHECK(summary.selected[0].index == 0);
}

TEST_CASE("select_summary: sentence-budget mode") {
    RankFixture f{{{{"a"}, 1.0}, {{"b"}, 3.0}, {{"c"}, 2.0}, {{"d"}, 1.5}}};
    std::vector<SentenceSpan> doc{sentence("a", 0), sentence("b", 1), sentence("c", 2),
                                  sentence("d", 3)};
    const auto ranked = rank_sentences(doc, f.concept_of, CountMode::Content);
    const auto summary = select_summary(ranked, 0.5, BudgetMode::Sentences);
    REQUIRE(summary.selected.size() == 2);
    CHECK(summary.selected[0].index == 1);
    CHECK(summary.selected[1].index == 2);
}

TEST_CASE("select_summary: skip-if-overflow picks the next fitting sentence") {
    RankFixture f{{{{"a"}, 5.0}, {{"b"}, 4.0}, {{"c"}, 3.0}}};
    // budget words = ceil(0.5 * 8) = 4; top "a a" (2) fits, "b b b b" (4) overflows, "c c" (2) fits
    std::vector<SentenceSpan> doc{sentence("a a", 0), sentence("b b b b", 1), sentence("c c", 2)};
    const auto ranked = rank_sentences(doc, f.concept_of, CountMode::Content);
    const auto summary = select_summary(ranked, 0.5, BudgetMode::Words);
    REQUIRE(summary.selected.size() == 2);
    CHECK(summary.selected[0].index == 0);
    CHECK(summary.selected[1].index == 2);
}

TEST_CASE("select_summary: ratio validation") {
    RankFixture f{{{{"a"}, 1.0}}};
    const auto ranked = rank_sentences({sentence("a", 0)}, f.concept_of, CountMode::Content);
    CHECK_THROWS_AS(select_summary(ranked, 0.0, BudgetMode::Words), ConfigError);
    CHECK_THROWS_AS(select_summary(ranked, 1.5, BudgetMode::Words), ConfigError);
}

TEST_CASE("selected indexes strictly increase") {
    RankFixture f{{{{"a"}, 1.0}, {{"b"}, 3.0}, {{"c"}, 2.0}}};
    std::vector<SentenceSpan> doc{sentence("c", 0), sentence("a", 1), sentence("b", 2)};
    const auto ranked = rank_sentences(doc, f.concept_of, CountMode::Content);
    const auto summary = select_summary(ranked, 0.7, BudgetMode::Words);
    for (std::size_t i = 1; i < summary.selected.size(); ++i)
        CHECK(summary.selected[i - 1].index < summary.selected[i].index);
}
