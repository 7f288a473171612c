#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "xling/errors.hpp"
#include "xling/evaluate.hpp"
#include "xling/hubness.hpp"
#include "xling/semantic_space.hpp"
#include "xling/stats.hpp"

using xling::hubness_counts;
using xling::pearson_correlation;
using xling::skewness;

TEST_CASE("pearson hand cases") {
    const std::vector<double> a{1, 2, 3};
    CHECK(pearson_correlation(a, std::vector<double>{2, 4, 6}) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pearson_correlation(a, std::vector<double>{3, 2, 1}) ==
          doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(pearson_correlation(std::vector<double>{1, 2, 3, 4},
                              std::vector<double>{1, 3, 2, 4}) ==
          doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("pearson preconditions") {
    CHECK_THROWS_AS(pearson_correlation(std::vector<double>{1, 2}, std::vector<double>{1}),
                    xling::numeric_error);
    CHECK_THROWS_AS(pearson_correlation(std::vector<double>{1}, std::vector<double>{1}),
                    xling::numeric_error);
    CHECK_THROWS_AS(
        pearson_correlation(std::vector<double>{1, 1, 1}, std::vector<double>{1, 2, 3}),
        xling::numeric_error);
}

TEST_CASE("pearson matches the direct formula and is affine invariant") {
    std::mt19937_64 gen(71);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> a, b;
        for (int i = 0; i < 20; ++i) {
            a.push_back(normal(gen));
            b.push_back(normal(gen));
        }
        const double r = pearson_correlation(a, b);
        CHECK(r == doctest::Approx(oracle::pearson(a, b)).epsilon(1e-10));

        std::vector<double> scaled = a;
        for (auto& v : scaled) v = 2.5 * v + 7.0;
        CHECK(pearson_correlation(scaled, b) == doctest::Approx(r).epsilon(1e-10));
    }
}

TEST_CASE("skewness hand cases") {
    CHECK(skewness(std::vector<double>{1, 2, 3}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(skewness(std::vector<double>{0, 0, 0, 1}) ==
          doctest::Approx(1.1547005383792515).epsilon(1e-9));
    CHECK_THROWS_AS(skewness(std::vector<double>{2, 2, 2}), xling::numeric_error);
    CHECK_THROWS_AS(skewness(std::vector<double>{2}), xling::numeric_error);
}

TEST_CASE("skewness is invariant under positive affine maps") {
    std::mt19937_64 gen(72);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<double> v;
        for (int i = 0; i < 25; ++i) v.push_back(normal(gen));
        const double s = skewness(v);
        CHECK(s == doctest::Approx(oracle::skewness(v)).epsilon(1e-10));
        std::vector<double> mapped = v;
        for (auto& x : mapped) x = 3.0 * x - 11.0;
        CHECK(skewness(mapped) == doctest::Approx(s).epsilon(1e-9));
    }
}

TEST_CASE("knn uses exact ties toward the lower index") {
    // unit square: each corner has two neighbors at exactly distance 1
    Eigen::MatrixXd square(4, 2);
    square << 0, 0, 1, 0, 0, 1, 1, 1;
    CHECK(xling::knn_indices(square.row(0), square, 1, 0) == std::vector<Eigen::Index>{1});
    CHECK(xling::knn_indices(square.row(3), square, 1, 3) == std::vector<Eigen::Index>{1});
    CHECK(xling::knn_indices(square.row(0), square, 2, 0) ==
          std::vector<Eigen::Index>{1, 2});
}

TEST_CASE("hubness counts on the unit square match enumeration") {
    Eigen::MatrixXd square(4, 2);
    square << 0, 0, 1, 0, 0, 1, 1, 1;
    const auto report = hubness_counts(square, square, 1, true);
    // every corner picks its lower-indexed distance-1 neighbor:
    // 0 -> 1, 1 -> 0, 2 -> 0, 3 -> 1
    CHECK(report.counts == std::vector<int>{2, 2, 0, 0});
    CHECK(report.k == 1);
    CHECK(!report.cross_lingual);
}

TEST_CASE("hubness counts match the brute-force scan on random spaces") {
    std::mt19937_64 gen(73);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::MatrixXd space = oracle::random_matrix(20, 4, gen);
        const int k = 1 + static_cast<int>(gen() % 5);
        const auto report = hubness_counts(space, space, k, true);

        std::vector<int> expected(20, 0);
        for (Eigen::Index q = 0; q < 20; ++q)
            for (const auto j : oracle::brute_force_knn(space.row(q), space, k, q))
                ++expected[static_cast<std::size_t>(j)];
        CHECK(report.counts == expected);

        int total = 0;
        for (const int c : report.counts) total += c;
        CHECK(total == k * 20);
    }
}

TEST_CASE("hubness against an exact copy is constant with zero skew") {
    std::mt19937_64 gen(74);
    const Eigen::MatrixXd space = oracle::random_matrix(15, 3, gen);
    const auto report = hubness_counts(space, space, 1, false);
    CHECK(report.counts == std::vector<int>(15, 1));
    CHECK(report.skew == 0.0);
    CHECK(report.cross_lingual);
}

TEST_CASE("hubness rejects oversized k") {
    Eigen::MatrixXd space(4, 2);
    space.setRandom();
    CHECK_THROWS_AS(hubness_counts(space, space, 4, true), xling::numeric_error);
    CHECK_THROWS_AS(hubness_counts(space, space, 0, true), xling::numeric_error);
}

TEST_CASE("hubness query_limit restricts the scan") {
    std::mt19937_64 gen(75);
    const Eigen::MatrixXd space = oracle::random_matrix(10, 3, gen);
    const auto report = hubness_counts(space, space, 2, true, 4);
    int total = 0;
    for (const int c : report.counts) total += c;
    CHECK(total == 2 * 4);
}

TEST_CASE("hubness TSV carries the header comment") {
    Eigen::MatrixXd space(3, 2);
    space << 0, 0, 1, 0, 5, 5;
    const auto report = hubness_counts(space, space, 1, true);
    std::ostringstream out;
    save_hubness_tsv(report, {"a", "b", "c"}, out);
    const std::string text = out.str();
    CHECK(text.find("# k=1\tmode=within-space\tskewness=") == 0);
    CHECK(text.find("a\t") != std::string::npos);
}

namespace {

xling::SemanticSpace space_from(const std::string& text) {
    std::istringstream in(text);
    return xling::SemanticSpace::load(in);
}

} // namespace

TEST_CASE("evaluate_dataset composes lookup, transform, and scoring") {
    const auto space = space_from("3 2\ncat 1 0\ndog 0 1\nsun 0.6 0.8\n");
    const auto idf = xling::IdfWeights::uniform();
    xling::ScoringPipeline pipeline;
    pipeline.src = &space;
    pipeline.tgt = &space;
    pipeline.src_idf = &idf;
    pipeline.tgt_idf = &idf;
    pipeline.sts.method = xling::StsMethod::LC;

    const std::vector<std::pair<xling::Sentence, xling::Sentence>> pairs{
        {xling::Sentence::parse("cat"), xling::Sentence::parse("cat")},
        {xling::Sentence::parse("cat"), xling::Sentence::parse("dog")},
        {xling::Sentence::parse("cat"), xling::Sentence::parse("sun")},
        {xling::Sentence::parse("cat dog"), xling::Sentence::parse("sun")},
    };

    // hand cosines of the composite vectors
    const std::vector<double> expected{1.0, 0.0, 0.6, (0.5 * 0.6 + 0.5 * 0.8) / std::sqrt(0.5)};

    const std::vector<double> gold{1.0, 0.0, 0.5, 0.9};
    const auto result = evaluate_dataset(pairs, gold, pipeline);
    REQUIRE(result.scores.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(result.scores[i] == doctest::Approx(expected[i]).epsilon(1e-12));
    CHECK(result.pearson ==
          doctest::Approx(oracle::pearson(result.scores, gold)).epsilon(1e-12));

    // gold equal to the produced scores correlates perfectly
    const auto self = evaluate_dataset(pairs, result.scores, pipeline);
    CHECK(self.pearson == doctest::Approx(1.0).epsilon(1e-12));

    // shuffling the pairs leaves the correlation unchanged
    std::vector<std::pair<xling::Sentence, xling::Sentence>> shuffled{pairs[2], pairs[0],
                                                                      pairs[3], pairs[1]};
    const std::vector<double> shuffled_gold{gold[2], gold[0], gold[3], gold[1]};
    const auto permuted = evaluate_dataset(shuffled, shuffled_gold, pipeline);
    CHECK(permuted.pearson == doctest::Approx(result.pearson).epsilon(1e-12));
}

TEST_CASE("evaluate_dataset counts fully-OOV pairs and scores them zero") {
    const auto space = space_from("2 2\ncat 1 0\ndog 0 1\n");
    const auto idf = xling::IdfWeights::uniform();
    xling::ScoringPipeline pipeline;
    pipeline.src = &space;
    pipeline.tgt = &space;
    pipeline.src_idf = &idf;
    pipeline.tgt_idf = &idf;
    pipeline.sts.method = xling::StsMethod::OM;

    const std::vector<std::pair<xling::Sentence, xling::Sentence>> pairs{
        {xling::Sentence::parse("cat"), xling::Sentence::parse("cat")},
        {xling::Sentence::parse("zzz"), xling::Sentence::parse("qqq")},
        {xling::Sentence::parse("cat dog"), xling::Sentence::parse("dog")},
    };
    const std::vector<double> gold{1.0, 0.1, 0.4};
    const auto result = evaluate_dataset(pairs, gold, pipeline);
    CHECK(result.fully_oov_pairs == 1);
    CHECK(result.scores[1] == 0.0);
}

TEST_CASE("evaluate_dataset propagates precondition errors") {
    const auto space = space_from("2 2\ncat 1 0\ndog 0 1\n");
    const auto idf = xling::IdfWeights::uniform();
    xling::ScoringPipeline pipeline;
    pipeline.src = &space;
    pipeline.tgt = &space;
    pipeline.src_idf = &idf;
    pipeline.tgt_idf = &idf;

    const std::vector<std::pair<xling::Sentence, xling::Sentence>> pairs{
        {xling::Sentence::parse("cat"), xling::Sentence::parse("cat")},
    };
    CHECK_THROWS_AS(evaluate_dataset(pairs, std::vector<double>{1.0, 2.0}, pipeline),
                    xling::numeric_error);
}
