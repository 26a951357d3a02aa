#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fuzzydoc/error.hpp"
#include "fuzzydoc/features.hpp"
#include "support/fixtures.hpp"

namespace fuzzydoc {
namespace {

using Terms = std::vector<std::string>;

TEST(CountTerms, CountsOccurrences) {
    auto bow = count_terms({"d", {"ball", "ball"}});
    EXPECT_EQ(bow.doc_id, "d");
    EXPECT_EQ(bow.counts.at("ball"), 2u);
    EXPECT_EQ(bow.total, 2u);

    auto empty = count_terms({"e", {}});
    EXPECT_TRUE(empty.counts.empty());
    EXPECT_EQ(empty.total, 0u);
}

TEST(CountTerms, BagOfWordsParagraph) {
    const char* paragraph =
        "It is a variation of the Hard C-Means clustering algorithm. Each observation here has a membership value "
        "associated with each of the clusters which is related inversely to the distance of that observation from "
        "the centre of the cluster.";
    auto bow = count_terms(preprocess_document({"p", paragraph}, PreprocessConfig::defaults()));
    EXPECT_EQ(bow.counts.at("observ"), 2u);
    EXPECT_EQ(bow.counts.at("centr"), 1u);
    EXPECT_EQ(bow.counts.at("variat"), 1u);
    EXPECT_EQ(bow.counts.at("hard"), 1u);
    // clustering, clusters, cluster all stem to one root.
    EXPECT_EQ(bow.counts.at("cluster"), 3u);
    std::size_t sum = 0;
    for (const auto& [term, n] : bow.counts) sum += n;
    EXPECT_EQ(sum, bow.total);
}

TEST(WordFrequency, PerTenThousand) {
    EXPECT_NEAR(word_frequency(5, 44), 1136.36, 0.01);
    EXPECT_DOUBLE_EQ(word_frequency(5, 44), 50000.0 / 44.0);
    EXPECT_EQ(word_frequency(0, 100), 0.0);
    EXPECT_EQ(word_frequency(100, 100), 10000.0);
    EXPECT_EQ(word_frequency(180, 10000), 180.0);
}

TEST(WordFrequency, Errors) {
    EXPECT_THROW(word_frequency(0, 0), DataError);
    EXPECT_THROW(word_frequency(3, 2), std::invalid_argument);
}

TEST(BuildProfile, PoolsCounts) {
    std::vector<TermList> one{{"a", {"ball", "ball", "win", "team"}}};
    auto p = build_profile("sports", one);
    EXPECT_EQ(p.label, "sports");
    EXPECT_EQ(p.wf.size(), 3u);
    EXPECT_EQ(p.at("ball"), 5000.0);
    EXPECT_EQ(p.at("win"), 2500.0);
    EXPECT_EQ(p.at("team"), 2500.0);
    EXPECT_EQ(p.at("absent"), 0.0);

    std::vector<TermList> two{{"a", {"ball"}}, {"b", {"win"}}};
    auto q = build_profile("x", two);
    EXPECT_EQ(q.at("ball"), 5000.0);
    EXPECT_EQ(q.at("win"), 5000.0);
}

TEST(BuildProfile, PoolingIsNotAMeanOfDocumentFrequencies) {
    // Per-document WFs of "ball" are 10000 and 0 over documents of lengths 1
    // and 3; pooled it is 1 / 4.
    std::vector<TermList> docs{{"a", {"ball"}}, {"b", {"x", "y", "z"}}};
    EXPECT_EQ(build_profile("l", docs).at("ball"), 2500.0);
}

TEST(BuildProfile, EmptyCorpus) {
    std::vector<TermList> none{{"a", {}}, {"b", {}}};
    EXPECT_THROW(build_profile("l", none), DataError);
    EXPECT_THROW(build_profile("l", std::vector<TermList>{}), DataError);
}

TEST(BuildProfile, ReproducesSportsColumnFromCounts) {
    // One million pooled words with counts chosen as floor(WF * 100): the
    // pooled WF lands within 0.01 of the printed sports frequencies.
    constexpr std::size_t kTotal = 1'000'000;
    std::vector<TermList> docs(4);
    std::size_t used = 0;
    std::size_t slot = 0;
    const auto sports = testing::sample_profiles()[0];
    for (const auto& [term, wf] : sports.wf) {
        auto n = static_cast<std::size_t>(std::floor(wf * 100.0));
        for (std::size_t k = 0; k < n; ++k) docs[slot++ % 4].terms.push_back(term);
        used += n;
    }
    for (std::size_t k = used; k < kTotal; ++k) docs[slot++ % 4].terms.push_back("filler");

    auto profile = build_profile("sports", docs);
    for (const auto& [term, wf] : sports.wf) {
        EXPECT_NEAR(profile.at(term), wf, 0.01) << term;
    }
    EXPECT_DOUBLE_EQ(profile.at("ball"), 50165.0 * 10000.0 / 1e6);
}

TEST(SelectFeatures, SampleProfilesPickFourWords) {
    auto profiles = testing::sample_profiles();
    auto fs = select_features(profiles, {4, 2.0, 5.0});
    EXPECT_EQ(fs.terms(), (Terms{"democracy", "stadium", "ball", "team"}));

    auto scores = score_features(profiles, {4, 2.0, 5.0});
    ASSERT_EQ(scores.size(), 7u);
    EXPECT_NEAR(scores[0].ratio, 140.1213 / 2.1213, 1e-12);
    EXPECT_NEAR(scores[0].ratio, 66.06, 0.01);
    EXPECT_NEAR(scores[1].ratio, 25.02, 0.01);
    EXPECT_NEAR(scores[2].ratio, 16.07, 0.01);
    EXPECT_NEAR(scores[3].ratio, 3.06, 0.01);
    for (std::size_t k = 4; k < scores.size(); ++k) {
        EXPECT_FALSE(scores[k].selected);
        EXPECT_LT(scores[k].ratio, 1.1) << scores[k].term;
    }
}

TEST(SelectFeatures, TopKTruncates) {
    auto fs = select_features(testing::sample_profiles(), {2, 2.0, 5.0});
    EXPECT_EQ(fs.terms(), (Terms{"democracy", "stadium"}));
}

TEST(SelectFeatures, MinWfFilters) {
    std::vector<LabeledProfile> profiles{{"a", {{"rare", 4.0}, {"common", 300.0}}}, {"b", {{"common", 10.0}}}};
    // "rare" has ratio 4 but never reaches 5 per 10000.
    EXPECT_EQ(select_features(profiles, {}).terms(), Terms{"common"});
}

TEST(SelectFeatures, IdenticalProfilesHaveNothingToOffer) {
    auto sports = testing::sample_profiles()[0];
    auto copy = sports;
    copy.label = "copy";
    std::vector<LabeledProfile> profiles{sports, copy};
    EXPECT_THROW(select_features(profiles, {}), DataError);
}

TEST(SelectFeatures, MissingTermCountsAsZero) {
    std::vector<LabeledProfile> profiles{{"a", {{"only", 100.0}}}, {"b", {{"other", 1.0}}}};
    auto scores = score_features(profiles, {});
    EXPECT_EQ(scores[0].term, "only");
    EXPECT_EQ(scores[0].ratio, 100.0);
    EXPECT_EQ(select_features(profiles, {}).terms(), Terms{"only"});
}

TEST(SelectFeatures, TiesBrokenLexicographically) {
    std::vector<LabeledProfile> profiles{{"a", {{"zeta", 50.0}, {"alpha", 50.0}, {"mid", 50.0}}}, {"b", {}}};
    EXPECT_EQ(select_features(profiles, {}).terms(), (Terms{"alpha", "mid", "zeta"}));
}

TEST(SelectFeatures, RejectsBadArguments) {
    auto profiles = testing::sample_profiles();
    std::vector<LabeledProfile> single{profiles[0]};
    EXPECT_THROW(select_features(single, {}), std::invalid_argument);
    EXPECT_THROW(select_features(profiles, {0, 2.0, 5.0}), std::invalid_argument);
    EXPECT_THROW(select_features(profiles, {4, 0.5, 5.0}), std::invalid_argument);
    EXPECT_THROW(select_features(profiles, {4, 2.0, -1.0}), std::invalid_argument);
    std::vector<LabeledProfile> dup{profiles[0], profiles[0]};
    EXPECT_THROW(select_features(dup, {}), std::invalid_argument);
}

TEST(SelectFeatures, InvariantUnderProfileOrder) {
    std::mt19937 rng(7);
    std::vector<LabeledProfile> profiles(4);
    for (std::size_t p = 0; p < profiles.size(); ++p) {
        profiles[p].label = "l" + std::to_string(p);
        for (int t = 0; t < 40; ++t) {
            if (rng() % 3 == 0) continue;
            profiles[p].wf["t" + std::to_string(t)] = static_cast<double>(rng() % 400);
        }
    }
    const auto reference = select_features(profiles, {10, 2.0, 5.0});
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(profiles.begin(), profiles.end(), rng);
        EXPECT_EQ(select_features(profiles, {10, 2.0, 5.0}), reference);
    }
    for (const auto& term : reference.terms()) {
        bool nonzero = std::any_of(profiles.begin(), profiles.end(), [&](auto& p) { return p.at(term) > 0.0; });
        EXPECT_TRUE(nonzero) << term;
    }
}

TEST(FeatureSetType, RejectsDuplicatesAndEmpties) {
    EXPECT_THROW(FeatureSet({"a", "a"}), std::invalid_argument);
    EXPECT_THROW(FeatureSet({"a", ""}), std::invalid_argument);
    EXPECT_NO_THROW(FeatureSet(std::vector<std::string>{}));
}

TEST(Vectorize, ExampleDocumentRow) {
    BagOfWords bow{"Doc1", {{"stadium", 180}, {"ball", 400}, {"team", 200}, {"democracy", 1}, {"zzfill", 9219}}, 10000};
    auto v = vectorize(bow, testing::example_features());
    EXPECT_EQ(v.doc_id, "Doc1");
    EXPECT_EQ(v.values, (std::vector<double>{180, 400, 200, 1}));
}

TEST(Vectorize, MissingFeaturesAreZero) {
    BagOfWords bow{"d", {{"x", 3}}, 3};
    EXPECT_EQ(vectorize(bow, FeatureSet({"a", "b"})).values, (std::vector<double>{0, 0}));
    BagOfWords one{"d", {{"ball", 1}}, 1};
    EXPECT_EQ(vectorize(one, FeatureSet({"ball"})).values, std::vector<double>{10000});
}

TEST(Vectorize, EmptyDocument) {
    EXPECT_THROW(vectorize(BagOfWords{"d", {}, 0}, FeatureSet({"a"})), DataError);
}

TEST(Vectorize, FrequenciesOfAllTermsSumToScale) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        TermList doc{"d", {}};
        std::size_t len = 1 + rng() % 300;
        for (std::size_t k = 0; k < len; ++k) doc.terms.push_back("w" + std::to_string(rng() % 37));
        auto bow = count_terms(doc);
        std::vector<std::string> all;
        for (const auto& entry : bow.counts) all.push_back(entry.first);
        auto v = vectorize(bow, FeatureSet(all));
        double sum = 0.0;
        for (double x : v.values) sum += x;
        EXPECT_NEAR(sum, 10000.0, 10000.0 * 1e-6);
    }
}

TEST(Vectorize, AddingAnOccurrenceRaisesItsDimension) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t total = 1 + rng() % 500;
        std::size_t count = rng() % total;  // strictly below total
        BagOfWords before{"d", {}, total};
        if (count > 0) before.counts["f"] = count;
        if (total > count) before.counts["other"] = total - count;
        BagOfWords after = before;
        ++after.counts["f"];
        ++after.total;
        FeatureSet fs({"f"});
        EXPECT_GT(vectorize(after, fs).values[0], vectorize(before, fs).values[0]);
    }
}

}  // namespace
}  // namespace fuzzydoc
