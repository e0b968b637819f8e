#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "medbounds/canonical.hpp"
#include "medbounds/errors.hpp"
#include "medbounds/rng.hpp"
#include "test_util.hpp"

using namespace medbounds;

TEST_CASE("index encoding is a bijection over all 16,384 triples") {
    std::set<int> seen;
    for (int r1 = 0; r1 < 4; ++r1)
        for (int r2 = 0; r2 < 16; ++r2)
            for (int ry = 0; ry < 256; ++ry) {
                const ResponseType t{static_cast<std::uint8_t>(r1), static_cast<std::uint8_t>(r2),
                                     static_cast<std::uint8_t>(ry)};
                const int idx = t.index();
                CHECK(idx == 4096 * r1 + 256 * r2 + ry);
                const ResponseType back = ResponseType::from_index(idx);
                CHECK(back.r1 == r1);
                CHECK(back.r2 == r2);
                CHECK(back.ry == ry);
                seen.insert(idx);
            }
    CHECK(seen.size() == static_cast<std::size_t>(kTypeCount));
    CHECK(*seen.begin() == 0);
    CHECK(*seen.rbegin() == kTypeCount - 1);
}

TEST_CASE("natural world of simple types") {
    const ResponseType zero{0, 0, 0};
    const NaturalWorld w0 = natural_world(zero, 0);
    CHECK(w0.m1 == 0);
    CHECK(w0.m2 == 0);
    CHECK(w0.y == 0);

    const ResponseType chain = testutil::identity_chain_type();
    const NaturalWorld w1 = natural_world(chain, 1);
    CHECK(w1.m1 == 1);
    CHECK(w1.m2 == 1);
    CHECK(w1.y == 1);
    const NaturalWorld w0c = natural_world(chain, 0);
    CHECK(w0c.m1 == 0);
    CHECK(w0c.m2 == 0);
    CHECK(w0c.y == 0);
}

TEST_CASE("nested potential outcomes compose response functions") {
    const ResponseType chain = testutil::identity_chain_type();
    // Y = M2(1, M1(0)) = M1(0) = 0
    CHECK(nested_potential_outcome(chain, 1, 0, 1, 0) == 0);

    for (int t = 0; t < kTypeCount; t += 997) {
        ResponseType type = ResponseType::from_index(t);
        type.ry = 255;  // Y identically 1
        for (int x = 0; x < 2; ++x)
            for (int x1 = 0; x1 < 2; ++x1)
                for (int x2 = 0; x2 < 2; ++x2)
                    for (int x3 = 0; x3 < 2; ++x3)
                        CHECK(nested_potential_outcome(type, x, x1, x2, x3) == 1);
    }
}

TEST_CASE("setting all intervention arguments equal reproduces the natural world") {
    for (int t = 0; t < kTypeCount; ++t) {
        const ResponseType type = ResponseType::from_index(t);
        for (int x = 0; x < 2; ++x)
            CHECK(nested_potential_outcome(type, x, x, x, x) == natural_world(type, x).y);
    }
}

TEST_CASE("controlled outcomes are plain bit lookups") {
    const ResponseType zero{0, 0, 0};
    for (int x = 0; x < 2; ++x)
        for (int m1 = 0; m1 < 2; ++m1)
            for (int m2 = 0; m2 < 2; ++m2) CHECK(controlled_outcome(zero, x, m1, m2) == 0);

    const ResponseType ym2{0, 0, 170};  // Y = m2
    CHECK(controlled_outcome(ym2, 0, 0, 1) == 1);
    CHECK(controlled_outcome(ym2, 1, 1, 0) == 0);

    const ResponseType single{0, 0, 1 << 7};  // only Y(1,1,1) = 1
    CHECK(controlled_outcome(single, 1, 1, 1) == 1);
    CHECK(controlled_outcome(single, 0, 0, 0) == 0);
}

TEST_CASE("implied observed distribution") {
    SUBCASE("uniform mass maps to the uniform distribution") {
        std::vector<double> q(kTypeCount, 1.0 / kTypeCount);
        const auto dist = implied_observed(CounterfactualDistribution(std::move(q)));
        for (double cell : dist.cells()) CHECK(cell == doctest::Approx(0.125).epsilon(1e-12));
    }

    SUBCASE("point mass on the all-zero type") {
        const auto dist = implied_observed(CounterfactualDistribution::vertex(0));
        CHECK(dist.p(0, 0, 0, 0) == 1.0);
        CHECK(dist.p(0, 0, 0, 1) == 1.0);
        CHECK(dist.arm_sum(0) == 1.0);
        CHECK(dist.arm_sum(1) == 1.0);
    }

    SUBCASE("mapping is linear in the mass") {
        Rng rng(7);
        const auto q1 = testutil::random_counterfactual(rng);
        const auto q2 = testutil::random_counterfactual(rng);
        std::vector<double> mix(kTypeCount);
        for (int t = 0; t < kTypeCount; ++t) mix[static_cast<std::size_t>(t)] = 0.5 * q1[t] + 0.5 * q2[t];
        const auto blend = implied_observed(CounterfactualDistribution(std::move(mix)));
        const auto d1 = implied_observed(q1);
        const auto d2 = implied_observed(q2);
        for (int i = 0; i < kCells; ++i)
            CHECK(blend.cells()[static_cast<std::size_t>(i)] ==
                  doctest::Approx(0.5 * d1.cells()[static_cast<std::size_t>(i)] +
                                  0.5 * d2.cells()[static_cast<std::size_t>(i)])
                      .epsilon(1e-12));
    }

    SUBCASE("every vertex concentrates one cell per arm") {
        for (int t = 0; t < kTypeCount; t += 131) {
            const auto dist = implied_observed(CounterfactualDistribution::vertex(t));
            for (int x = 0; x < 2; ++x) {
                int ones = 0;
                for (int i = 0; i < 8; ++i) {
                    const double v = dist.cells()[static_cast<std::size_t>(8 * x + i)];
                    CHECK((v == 0.0 || v == 1.0));
                    if (v == 1.0) ++ones;
                }
                CHECK(ones == 1);
            }
        }
    }
}

TEST_CASE("vertex construction and bad indices") {
    const auto v0 = CounterfactualDistribution::vertex(0);
    CHECK(v0[0] == 1.0);
    double sum = 0.0;
    for (int t = 0; t < kTypeCount; ++t) sum += v0[t];
    CHECK(sum == 1.0);

    CHECK_THROWS_AS(CounterfactualDistribution::vertex(kTypeCount), IndexOutOfRange);
    CHECK_THROWS_AS(CounterfactualDistribution::vertex(-1), IndexOutOfRange);
}

TEST_CASE("counterfactual mass validation") {
    std::vector<double> q(kTypeCount, 0.0);
    q[5] = -0.25;
    q[6] = 1.25;
    CHECK_THROWS_AS(CounterfactualDistribution(q).validate(), NegativeProbability);

    std::vector<double> q2(kTypeCount, 0.0);
    q2[0] = 0.5;
    CHECK_THROWS_AS(CounterfactualDistribution(q2).validate(), ArmNotNormalized);

    std::vector<double> short_q(100, 0.01);
    CHECK_THROWS_AS(CounterfactualDistribution(short_q), MalformedInput);
}
