#include <gtest/gtest.h>

#include "eutactic/leakage.h"
#include "eutactic/paper_data.h"
#include "eutactic/random.h"
#include "oracles.h"

namespace eutactic {
namespace {

Codebook<double> bit_book() {
    auto e = paper_example<double>();
    return make_codebook<double>({e.w_plus_y, e.x_plus_z});
}

ShareSplit halves() {
    return ShareSplit(4, {CoordinateProjector(4, {0, 1}), CoordinateProjector(4, {2, 3})});
}

TEST(PaddedState, TraceOne) {
    Matrix<double> rho = vacuum_padded_state(Vector<double>{0.6, 0});
    EXPECT_EQ(rho.rows(), 3u);
    EXPECT_NEAR(rho(0, 0), 0.36, 1e-15);
    EXPECT_NEAR(rho(2, 2), 0.64, 1e-15);
    EXPECT_NEAR(rho.trace(), 1, 1e-15);
}

TEST(Helstrom, FrozenPaperValues) {
    auto e = paper_example<double>();
    CoordinateProjector upper(4, {0, 1}), lower(4, {2, 3});
    // Frozen from tests/oracles/paper_oracle.py.
    EXPECT_NEAR(helstrom_probability(lower.restrict(e.w), lower.restrict(e.x), 0.5, 0.5), 0.903522256578541, 1e-12);
    EXPECT_NEAR(helstrom_probability(upper.restrict(e.y), upper.restrict(e.z), 0.5, 0.5), 0.680375058520586, 1e-12);
}

TEST(Helstrom, MatchesGridSearch) {
    auto e = paper_example<double>();
    CoordinateProjector upper(4, {0, 1}), lower(4, {2, 3});
    auto check = [](const Vector<double> &f, const Vector<double> &g, double p) {
        double expected = oracle::grid_discrimination({f[0], f[1]}, {g[0], g[1]}, p, 1 - p, 300, 1200);
        double got = helstrom_probability(f, g, p, 1 - p);
        EXPECT_NEAR(got, expected, 1e-3);
        EXPECT_GE(got, expected - 1e-12);
    };
    check(lower.restrict(e.w), lower.restrict(e.x), 0.5);
    check(upper.restrict(e.y), upper.restrict(e.z), 0.5);
    check(upper.restrict(e.y), upper.restrict(e.z), 0.8);
}

TEST(Helstrom, Bounds) {
    EXPECT_NEAR(helstrom_probability(Vector<double>{0.3, 0.4}, Vector<double>{0.3, 0.4}, 0.5, 0.5), 0.5, 1e-12);
    EXPECT_NEAR(helstrom_probability(Vector<double>{1, 0}, Vector<double>{0, 0}, 0.5, 0.5), 1, 1e-12);
    EXPECT_NEAR(helstrom_probability(Vector<double>{0, 0}, Vector<double>{0, 0}, 0.7, 0.3), 0.7, 1e-12);
}

TEST(Priors, Validation) {
    EXPECT_THROW(validate_priors(std::vector<double>{0.5, 0.6}, 2), DomainError);
    EXPECT_THROW(validate_priors(std::vector<double>{1.5, -0.5}, 2), DomainError);
    EXPECT_THROW(validate_priors(std::vector<double>{1.0}, 2), DomainError);
    EXPECT_NO_THROW(validate_priors(std::vector<double>{0.25, 0.75}, 2));
    EXPECT_THROW(analyze_leakage(bit_book(), halves(), std::vector<double>{0.2, 0.2}), DomainError);
}

TEST(Leakage, WorstCaseDeterministic) {
    auto e = paper_example<double>();
    auto book = make_codebook<double>(e.worst_case_basis);
    auto report = analyze_leakage(book, ShareSplit(3, {e.worst_case_first, e.worst_case_second}));
    ASSERT_EQ(report.parties.size(), 2u);
    const auto &first = report.parties[0];
    EXPECT_EQ(first.flag, LeakageFlag::deterministic);
    EXPECT_NEAR(first.pairs[0].probability, 1, 1e-9);  // (0,1)
    EXPECT_NEAR(first.pairs[1].probability, 1, 1e-9);  // (0,2)
    EXPECT_NEAR(first.pairs[2].probability, 0.5, 1e-9);  // (1,2): both absent
}

TEST(Leakage, PaperSharesPartial) {
    auto report = analyze_leakage(bit_book(), halves());
    for (const auto &party : report.parties) {
        EXPECT_EQ(party.flag, LeakageFlag::partial);
        ASSERT_EQ(party.pairs.size(), 1u);
        EXPECT_GT(party.pairs[0].probability, 0.5);
        EXPECT_LT(party.pairs[0].probability, 1);
    }
    EXPECT_NEAR(report.parties[0].pairs[0].probability, 0.680375058520586, 1e-12);
    EXPECT_NEAR(report.parties[1].pairs[0].probability, 0.903522256578541, 1e-12);
}

TEST(Leakage, IdenticalFragmentsDoNotLeak) {
    double h = std::sqrt(0.5);
    auto book = make_codebook<double>({Vector<double>{h, h, 0}, Vector<double>{h, -h, 0}});
    auto report = analyze_leakage(book, ShareSplit(3, {CoordinateProjector(3, {0, 2}), CoordinateProjector(3, {1})}));
    EXPECT_EQ(report.parties[0].flag, LeakageFlag::no_leak);
    EXPECT_NEAR(report.parties[0].pairs[0].probability, 0.5, 1e-12);
    EXPECT_EQ(report.parties[1].flag, LeakageFlag::no_leak);
}

TEST(Leakage, SkewedPriorsBaseline) {
    auto report = analyze_leakage(bit_book(), halves(), std::vector<double>{0.9, 0.1});
    for (const auto &party : report.parties) {
        EXPECT_GE(party.pairs[0].probability, 0.9 - 1e-12);
    }
}

TEST(LeakageProperty, BoundsAndSerialAgreement) {
    Rng rng(71);
    for (int i = 0; i < 200; ++i) {
        std::size_t m = 2 + rng.below(9);
        std::size_t k = 2 + rng.below(std::min<std::size_t>(m, 5) - 1);
        std::size_t keep = 1 + rng.below(m);
        Matrix<double> q = random_orthogonal(m, rng);
        std::vector<Vector<double>> words;
        for (std::size_t c = 0; c < k; ++c) {
            words.push_back(q.col(c));
        }
        auto book = make_codebook<double>(words);
        CoordinateProjector first(m, random_subset(m, keep, rng));
        std::vector<CoordinateProjector> parts{first};
        if (keep < m) {
            parts.push_back(first.complement());
        }
        ShareSplit split(m, parts);
        auto report = analyze_leakage(book, split);
        ASSERT_EQ(report, analyze_leakage_serial(book, split));
        for (const auto &party : report.parties) {
            ASSERT_EQ(party.pairs.size(), k * (k - 1) / 2);
            for (const auto &pair : party.pairs) {
                ASSERT_GE(pair.probability, 0.5);
                ASSERT_LE(pair.probability, 1);
                if (party.projector.rank() == m) {
                    ASSERT_NEAR(pair.probability, 1, 1e-9);
                }
            }
        }
    }
}

}  // namespace
}  // namespace eutactic
