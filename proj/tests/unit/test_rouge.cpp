#include <gtest/gtest.h>

#include <map>
#include <random>

#include "core/errors.hpp"
#include "textsim/rouge.hpp"

using namespace bias_forge;
using namespace bias_forge::textsim;

namespace {

// Brute-force oracle: pair off identical tokens one at a time.
double oracle_f(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.empty() && b.empty()) return 1.0;
    if (a.empty() || b.empty()) return 0.0;
    std::vector<bool> used(b.size(), false);
    std::size_t overlap = 0;
    for (const auto& t : a) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!used[j] && b[j] == t) {
                used[j] = true;
                ++overlap;
                break;
            }
        }
    }
    const double p = double(overlap) / double(b.size());
    const double r = double(overlap) / double(a.size());
    return p + r == 0.0 ? 0.0 : 2 * p * r / (p + r);
}

std::string join(const std::vector<std::string>& words) {
    std::string s;
    for (const auto& w : words) s += (s.empty() ? "" : " ") + w;
    return s;
}

std::vector<std::string> random_words(std::mt19937_64& rng, std::size_t max_len) {
    static const std::vector<std::string> vocab = {"the", "a", "moral", "story", "he", "she", "ran", "x", "y", "z"};
    std::vector<std::string> out(rng() % (max_len + 1));
    for (auto& w : out) w = vocab[rng() % vocab.size()];
    return out;
}

}  // namespace

TEST(Tokenize, LowercasesAndSplitsOnPunctuation) {
    EXPECT_EQ(tokenize("He said: \"Don't!\""), (std::vector<std::string>{"he", "said", "don", "t"}));
    EXPECT_EQ(tokenize("  "), std::vector<std::string>{});
    EXPECT_EQ(tokenize("A1b2 c3"), (std::vector<std::string>{"a1b2", "c3"}));
}

TEST(Tokenize, UnicodeLettersStayInTokens) {
    EXPECT_EQ(tokenize("Ÿvonne ÉLODIE Ωmega Жанна"),
              (std::vector<std::string>{"ÿvonne", "élodie", "ωmega", "жанна"}));
    EXPECT_EQ(tokenize("café—bar"), (std::vector<std::string>{"café", "bar"}));
}

TEST(Tokenize, InvalidUtf8Separates) {
    EXPECT_EQ(tokenize(std::string("ab\xff" "cd")), (std::vector<std::string>{"ab", "cd"}));
}

TEST(Rouge, EdgeCases) {
    EXPECT_DOUBLE_EQ(rouge1_f("", ""), 1.0);
    EXPECT_DOUBLE_EQ(rouge1_f("...", ""), 1.0);
    EXPECT_DOUBLE_EQ(rouge1_f("word", ""), 0.0);
    EXPECT_DOUBLE_EQ(rouge1_f("", "word"), 0.0);
    EXPECT_DOUBLE_EQ(rouge1_f("a b c", "a b c"), 1.0);
    EXPECT_DOUBLE_EQ(rouge1_f("a b c", "d e f"), 0.0);
}

TEST(Rouge, ClippedCounts) {
    const auto c = rouge1_counts("the the the cat", "the cat cat");
    EXPECT_EQ(c.overlap, 2u);
    EXPECT_EQ(c.len_a, 4u);
    EXPECT_EQ(c.len_b, 3u);
    EXPECT_DOUBLE_EQ(c.f_measure(), 4.0 / 7.0);
}

TEST(Rouge, GenderSwapExample) {
    // 10 tokens each, 7 shared
    const double f = rouge1_f("Tom went home and he fed his dog every night",
                              "Ann went home and she fed her dog every night");
    EXPECT_DOUBLE_EQ(f, 7.0 / 10.0);
}

TEST(Rouge, PropertiesAgainstOracle) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 500; ++i) {
        const auto a = random_words(rng, 8);
        const auto b = random_words(rng, 8);
        const double f = rouge1_f(join(a), join(b));
        EXPECT_DOUBLE_EQ(f, oracle_f(a, b));
        EXPECT_DOUBLE_EQ(f, rouge1_f(join(b), join(a)));
        EXPECT_GE(f, 0.0);
        EXPECT_LE(f, 1.0);
        EXPECT_DOUBLE_EQ(rouge1_f(join(a), join(a)), 1.0);
    }
}

TEST(Band, InclusiveEnds) {
    const SimilarityBand band;
    EXPECT_TRUE(within_band(0.80, band));
    EXPECT_TRUE(within_band(0.95, band));
    EXPECT_FALSE(within_band(0.7999, band));
    EXPECT_FALSE(within_band(0.9501, band));
}

TEST(Band, ValidateRejectsInvertedOrOutOfRange) {
    EXPECT_THROW((SimilarityBand{0.9, 0.8}.validate()), Error);
    EXPECT_THROW((SimilarityBand{-0.1, 0.8}.validate()), Error);
    EXPECT_THROW((SimilarityBand{0.1, 1.2}.validate()), Error);
    EXPECT_NO_THROW((SimilarityBand{0.5, 0.5}.validate()));
}
