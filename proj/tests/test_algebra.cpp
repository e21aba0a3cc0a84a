#include <gtest/gtest.h>

#include <random>

#include "loopspace/algebra.hpp"
#include "oracles.hpp"

using namespace loopspace;

namespace {

std::vector<oracle::Seq> as_seqs(const std::vector<Word>& ws) {
    std::vector<oracle::Seq> out;
    for (const auto& w : ws) out.emplace_back(w.letters().begin(), w.letters().end());
    return out;
}

} // namespace

TEST(MakeWedge, GeneratorDegreesAreSphereDimensionsMinusOne) {
    auto w = make_wedge({2, 2, 4, 5}, FieldTag::GF2);
    EXPECT_EQ(w.generator_degrees(), (std::vector<int>{1, 1, 3, 4}));
    EXPECT_EQ(w.field(), FieldTag::GF2);

    auto s3 = make_wedge({3}, FieldTag::Rationals);
    EXPECT_EQ(s3.generator_degrees(), std::vector<int>{2});
}

TEST(MakeWedge, RejectsCircleAndEmpty) {
    EXPECT_THROW(make_wedge({1, 3}, FieldTag::Rationals), NonSimplyConnected);
    EXPECT_THROW(make_wedge({0}, FieldTag::GF2), NonSimplyConnected);
    EXPECT_THROW(make_wedge({}, FieldTag::GF2), EmptyWedge);
}

TEST(WordDegree, SumsGeneratorDegrees) {
    auto w = make_wedge({2, 2, 4, 5}, FieldTag::GF2);
    EXPECT_EQ(word_degree(w, Word{0, 1}), 2);
    EXPECT_EQ(word_degree(w, Word{3}), 4);
    auto odd = make_wedge({3, 3}, FieldTag::Rationals);
    EXPECT_EQ(word_degree(odd, Word{0, 1, 0}), 6);
}

TEST(Word, BasisOrderIsShorterFirstThenLexicographic) {
    EXPECT_LT((Word{3}), (Word{0, 0}));
    EXPECT_LT((Word{0, 1}), (Word{1, 0}));
    EXPECT_EQ((Word{0, 1, 2}).str(), "e1⊗e2⊗e3");
}

TEST(EnumerateWords, SpecExamples) {
    auto w = make_wedge({2, 2, 4, 5}, FieldTag::GF2);
    EXPECT_EQ(enumerate_words(w, 2), (std::vector<Word>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
    EXPECT_TRUE(enumerate_words(make_wedge({3, 3}, FieldTag::Rationals), 3).empty());
    EXPECT_EQ(enumerate_words(make_wedge({2}, FieldTag::Rationals), 3), (std::vector<Word>{{0, 0, 0}}));
}

TEST(EnumerateWords, MatchesOdometerOracleOnMixedDegrees) {
    for (const auto& dims : std::vector<std::vector<int>>{{2, 2, 4, 5}, {3, 4}, {2, 3, 5}, {4}, {5, 3, 2}}) {
        auto w = make_wedge(dims, FieldTag::Rationals);
        for (int n = 1; n <= 9; ++n) {
            auto got = enumerate_words(w, n);
            EXPECT_EQ(as_seqs(got), oracle::words(w.generator_degrees(), n)) << "degree " << n;
            EXPECT_EQ(count_words(w, n), got.size());
            EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
            EXPECT_EQ(std::adjacent_find(got.begin(), got.end()), got.end());
            for (const auto& x : got) EXPECT_EQ(word_degree(w, x), n);
        }
    }
}

TEST(EnumerateWords, EquidimensionalCountIsPowerOfK) {
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 3; ++n) {
            auto w = make_wedge(std::vector<int>(k, n + 1), FieldTag::GF2);
            for (int degree = 1; degree <= 12; ++degree) {
                const auto count = enumerate_words(w, degree).size();
                if (degree % n != 0) {
                    EXPECT_EQ(count, 0u);
                } else {
                    std::size_t expected = 1;
                    for (int i = 0; i < degree / n; ++i) expected *= static_cast<std::size_t>(k);
                    EXPECT_EQ(count, expected);
                }
            }
        }
}

TEST(EnumerateWords, Deterministic) {
    auto w = make_wedge({2, 3, 4}, FieldTag::Rationals);
    EXPECT_EQ(enumerate_words(w, 8), enumerate_words(w, 8));
}

TEST(Budget, ThrowsOnlyAboveLimit) {
    auto w = make_wedge({2, 2}, FieldTag::GF2);
    EXPECT_NO_THROW(check_budget(w, 10, 1024));
    EXPECT_THROW(check_budget(w, 11, 1024), BudgetExceeded);
}
