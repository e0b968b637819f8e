#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "medbounds/errors.hpp"
#include "medbounds/io.hpp"
#include "medbounds/lp.hpp"
#include "medbounds/rng.hpp"
#include "test_util.hpp"

using namespace medbounds;

namespace {

const std::vector<EstimandId> closed_form_set = {
    EstimandId::cde(0, 0),     EstimandId::cde(0, 1),     EstimandId::cde(1, 0),
    EstimandId::cde(1, 1),     EstimandId::nde(0, 0, 0),  EstimandId::jnie(1),
    EstimandId::ms2nie1(1, 1), EstimandId::nie2(1, 0, 0),
};

}  // namespace

TEST_CASE("uniform distribution NDE-000 matches the closed form") {
    const auto b = sharp_bounds_lp(ObservedDistribution::uniform(), EstimandId::nde(0, 0, 0));
    CHECK(b.lower == doctest::Approx(-0.5).epsilon(1e-9));
    CHECK(b.upper == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(b.method == BoundMethod::Lp);
    CHECK(b.sharp);
}

TEST_CASE("LP equals every closed form across random distributions") {
    Rng rng(314159);
    for (int rep = 0; rep < 60; ++rep) {
        const auto dist = implied_observed(testutil::random_counterfactual(rng));
        for (const EstimandId& e : closed_form_set) {
            const auto closed = closed_form_bounds(dist, e);
            const auto lp = sharp_bounds_lp(dist, e);
            CHECK(std::abs(closed.lower - lp.lower) <= 1e-7);
            CHECK(std::abs(closed.upper - lp.upper) <= 1e-7);
        }
    }
}

TEST_CASE("presolve does not change the optimum") {
    Rng rng(1001);
    LpOptions raw;
    raw.presolve_duplicates = false;
    for (int rep = 0; rep < 3; ++rep) {
        const auto dist = implied_observed(testutil::random_counterfactual(rng));
        for (const EstimandId& e :
             {EstimandId::nde(0, 0, 0), EstimandId::jnie(0), EstimandId::nie12(1, 0, 1)}) {
            const auto fast = sharp_bounds_lp(dist, e);
            const auto slow = sharp_bounds_lp(dist, e, raw);
            CHECK(fast.lower == doctest::Approx(slow.lower).epsilon(1e-9));
            CHECK(fast.upper == doctest::Approx(slow.upper).epsilon(1e-9));
        }
    }
}

TEST_CASE("bounds contain the truth and stay in range") {
    Rng rng(777);
    for (int rep = 0; rep < 10; ++rep) {
        const auto q = testutil::random_counterfactual(rng);
        const auto dist = implied_observed(q);
        for (const EstimandId& e : all_estimands()) {
            const auto b = sharp_bounds_lp(dist, e);
            CHECK(b.lower <= b.upper + 1e-9);
            CHECK(b.lower >= -1.0 - 1e-7);
            CHECK(b.upper <= 1.0 + 1e-7);
            const double truth = true_value(e, q);
            CHECK(truth >= b.lower - 1e-9);
            CHECK(truth <= b.upper + 1e-9);
        }
    }
}

TEST_CASE("vertex distributions are contained degenerately") {
    Rng rng(8);
    for (int rep = 0; rep < 20; ++rep) {
        const int t = static_cast<int>(rng.bounded(kTypeCount));
        const auto q = CounterfactualDistribution::vertex(t);
        const auto dist = implied_observed(q);
        for (const EstimandId& e :
             {EstimandId::te(), EstimandId::nde(1, 1, 0), EstimandId::jnie(0)}) {
            const auto b = sharp_bounds_lp(dist, e);
            const double truth = true_value(e, q);
            CHECK(truth >= b.lower - 1e-9);
            CHECK(truth <= b.upper + 1e-9);
        }
    }
}

TEST_CASE("TE solves to the identified point") {
    const auto dist = estimate_distribution(
        read_records_csv_file(testutil::data_path("jobs_synthetic.csv")));
    const auto b = sharp_bounds_lp(dist, EstimandId::te());
    const double te = total_effect(dist);
    CHECK(b.lower == doctest::Approx(te).epsilon(1e-9));
    CHECK(b.upper == doctest::Approx(te).epsilon(1e-9));
}

TEST_CASE("basis dump describes a unit-mass solution") {
    Rng rng(5);
    const auto dist = implied_observed(testutil::random_counterfactual(rng));
    const auto solution = sharp_bounds_lp_detailed(dist, EstimandId::jnie(1));
    double mass = 0.0;
    for (std::size_t i = 0; i < solution.lower_basis.types.size(); ++i)
        if (solution.lower_basis.types[i] >= 0) mass += solution.lower_basis.masses[i];
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(solution.lower_basis.pivots > 0);
}

TEST_CASE("pivot limit triggers NumericalFailure") {
    LpOptions options;
    options.max_pivots = 1;
    CHECK_THROWS_AS(
        sharp_bounds_lp(ObservedDistribution::uniform(), EstimandId::jnie(1), options),
        NumericalFailure);
}

TEST_CASE("exact mode on the uniform distribution") {
    std::array<std::string, kCells> cells;
    cells.fill("1/8");
    const auto exact = sharp_bounds_lp_exact(cells, EstimandId::nde(0, 0, 0));
    CHECK(exact.lower_rational == "-1/2");
    CHECK(exact.upper_rational == "1/2");
    CHECK(exact.lower == doctest::Approx(-0.5));
    CHECK(exact.upper == doctest::Approx(0.5));

    std::array<std::string, kCells> decimals;
    decimals.fill("0.125");
    const auto exact2 = sharp_bounds_lp_exact(decimals, EstimandId::jnie(1));
    CHECK(exact2.lower_rational == "-1/2");
    CHECK(exact2.upper_rational == "1/2");
}

TEST_CASE("exact mode agrees with floating point on rational inputs") {
    const auto records = read_records_csv_file(testutil::data_path("jobs_synthetic.csv"));
    const auto dist = estimate_distribution(records);
    for (const EstimandId& e : {EstimandId::nde(0, 0, 0), EstimandId::jnie(1),
                                EstimandId::nie2(1, 0, 0), EstimandId::jnie(0)}) {
        const auto exact = sharp_bounds_lp_exact(records, e);
        const auto floating = sharp_bounds_lp(dist, e);
        CHECK(std::abs(exact.lower - floating.lower) <= 1e-7);
        CHECK(std::abs(exact.upper - floating.upper) <= 1e-7);
    }
}

TEST_CASE("exact mode validates its inputs") {
    std::array<std::string, kCells> cells;
    cells.fill("1/8");
    cells[0] = "1/4";  // arm 0 no longer sums to 1
    CHECK_THROWS_AS(sharp_bounds_lp_exact(cells, EstimandId::te()), ArmNotNormalized);

    std::array<std::string, kCells> bad;
    bad.fill("1/8");
    bad[3] = "not-a-number";
    CHECK_THROWS_AS(sharp_bounds_lp_exact(bad, EstimandId::te()), MalformedInput);

    RecordTable empty_arm;
    empty_arm.add(0, 0, 0, 0);
    CHECK_THROWS_AS(sharp_bounds_lp_exact(empty_arm, EstimandId::te()), EmptyArm);
}
