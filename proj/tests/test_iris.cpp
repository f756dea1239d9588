#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "pgap/iris.hpp"

using namespace pgap;

TEST(Hamming, TrivialCases)
{
    Engine rng(5);
    for (std::size_t len : {1u, 8u, 63u, 64u, 65u, 2048u}) {
        const auto a = IrisCode::random(len, rng);
        EXPECT_EQ(hamming_similarity(a, a), 1.0);
        EXPECT_EQ(hamming_similarity(a, a.complement()), 0.0);
        EXPECT_EQ(hamming_distance(a, a.complement()), 1.0);
    }
    EXPECT_EQ(hamming_similarity(IrisCode::from_string("11110000"), IrisCode::from_string("11111111")), 0.5);
}

TEST(Hamming, LengthMismatch)
{
    EXPECT_THROW(hamming_similarity(IrisCode(8), IrisCode(9)), ValidationError);
    EXPECT_THROW(IrisCode(0), ValidationError);
    EXPECT_THROW(IrisCode::from_string("0120"), ValidationError);
}

TEST(Hamming, Properties)
{
    Engine rng(6);
    for (int k = 0; k < 200; ++k) {
        const std::size_t len = 1 + rng() % 300;
        const auto a = IrisCode::random(len, rng);
        auto b = IrisCode::random(len, rng);
        EXPECT_EQ(hamming_similarity(a, b), hamming_similarity(b, a));
        EXPECT_DOUBLE_EQ(hamming_similarity(a, b) + hamming_similarity(a, b.complement()), 1.0);
        EXPECT_EQ(hamming_similarity(a, b) == 1.0, a == b);
        EXPECT_EQ(hamming_similarity(a, b) == 0.0, a == b.complement());

        // bitwise oracle
        std::size_t agree = 0;
        for (std::size_t i = 0; i < len; ++i) agree += a.get(i) == b.get(i);
        EXPECT_EQ(hamming_similarity(a, b), static_cast<double>(agree) / static_cast<double>(len));
    }
}

TEST(Synthesis, ZeroFlipRateGivesPerfectGenuines)
{
    IrisSynthesisParams p;
    p.code_length = 64;
    p.genuine_pairs = 50;
    p.imposter_pairs = 50;
    p.genuine_flip_rate = 0.0;
    const auto s = synthesize_scores(p);
    for (double g : s.genuine_scores) EXPECT_EQ(g, 1.0);
    EXPECT_GT(safety_band(s), 0.0);
}

TEST(Synthesis, ImposterMeanNearHalf)
{
    IrisSynthesisParams p;
    p.code_length = 2048;
    p.genuine_pairs = 1;
    p.imposter_pairs = 1000;
    const auto s = synthesize_scores(p);
    const double mean =
        std::accumulate(s.imposter_scores.begin(), s.imposter_scores.end(), 0.0) / s.imposter_scores.size();
    // per-score sd is 1/(2 sqrt(L)); allow 3 sd on the mean
    EXPECT_NEAR(mean, 0.5, 3.0 / (2.0 * std::sqrt(2048.0)));
    for (double x : s.imposter_scores) {
        EXPECT_GE(x, 0.0);
        EXPECT_LE(x, 1.0);
    }
}

TEST(Synthesis, DeterministicAndValidated)
{
    IrisSynthesisParams p;
    p.code_length = 256;
    p.genuine_pairs = 20;
    p.imposter_pairs = 20;
    EXPECT_EQ(synthesize_scores(p), synthesize_scores(p));
    p.genuine_flip_rate = 0.5;
    EXPECT_THROW(synthesize_scores(p), ValidationError);
    p.genuine_flip_rate = -0.1;
    EXPECT_THROW(synthesize_scores(p), ValidationError);
    p.genuine_flip_rate = 0.1;
    p.code_length = 0;
    EXPECT_THROW(synthesize_scores(p), ValidationError);
}

TEST(Synthesis, NearChanceFlipRateOverlaps)
{
    IrisSynthesisParams p;
    p.code_length = 64;
    p.genuine_pairs = 200;
    p.imposter_pairs = 200;
    p.genuine_flip_rate = 0.45;
    EXPECT_LE(safety_band(synthesize_scores(p)), 0.0);
}

TEST(SafetyBand, Examples)
{
    EXPECT_NEAR(safety_band({{0.9, 0.95}, {0.4, 0.55}}), 0.35, 1e-15);
    EXPECT_NEAR(safety_band({{0.6}, {0.7}}), -0.1, 1e-15);
    EXPECT_THROW(safety_band({{}, {0.1}}), ValidationError);
    EXPECT_THROW(safety_band({{0.1}, {}}), ValidationError);
}

TEST(SafetyBand, Monotonicity)
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0, 1);
    for (int k = 0; k < 200; ++k) {
        ScorePartition p{{u(rng), u(rng), u(rng)}, {u(rng), u(rng)}};
        const double base = safety_band(p);
        auto higher_imp = p;
        higher_imp.imposter_scores.push_back(std::min(1.0, *std::max_element(p.imposter_scores.begin(), p.imposter_scores.end()) + 0.1));
        EXPECT_LE(safety_band(higher_imp), base);
        auto lower_gen = p;
        lower_gen.genuine_scores.push_back(std::max(0.0, *std::min_element(p.genuine_scores.begin(), p.genuine_scores.end()) - 0.1));
        EXPECT_LE(safety_band(lower_gen), base);
    }
}

TEST(Crispness, Examples)
{
    auto r = crispness_report({{1.0, 1.0, 0.0}, {0.0}});
    EXPECT_EQ(r.fraction_interior, 0.0);
    ASSERT_EQ(r.histogram.size(), 20u);
    EXPECT_EQ(r.histogram.front(), 2u);
    EXPECT_EQ(r.histogram.back(), 2u); // 1.0 lands in the last bin

    IrisSynthesisParams p;
    p.code_length = 2048;
    r = crispness_report(synthesize_scores(p));
    EXPECT_GT(r.fraction_interior, 0.99);
    EXPECT_EQ(std::accumulate(r.histogram.begin(), r.histogram.end(), std::size_t{0}), 2000u);

    EXPECT_THROW(crispness_report({{}, {}}), ValidationError);
    EXPECT_THROW(crispness_report({{1.5}, {}}), ValidationError);
}

TEST(Crispness, BinEdges)
{
    const auto r = crispness_report({{0.05, 0.0499999, 0.95, 0.9999}, {}}, 20);
    EXPECT_EQ(r.histogram[0], 1u);
    EXPECT_EQ(r.histogram[1], 1u);
    EXPECT_EQ(r.histogram[19], 2u);
}

TEST(ScoresCsv, Format)
{
    std::ostringstream out;
    write_scores_csv(out, {{1.0}, {0.5, 0.25}});
    EXPECT_EQ(out.str(), "kind,score\ngenuine,1\nimposter,0.5\nimposter,0.25\n");
}
