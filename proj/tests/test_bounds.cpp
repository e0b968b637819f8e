#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "medbounds/bounds.hpp"
#include "medbounds/errors.hpp"
#include "medbounds/io.hpp"
#include "medbounds/rng.hpp"
#include "test_util.hpp"

using namespace medbounds;

namespace {

ObservedDistribution jobs_distribution() {
    return estimate_distribution(
        read_records_csv_file(testutil::data_path("jobs_synthetic.csv")));
}

ObservedDistribution identity_chain_distribution() {
    return implied_observed(
        CounterfactualDistribution::vertex(testutil::identity_chain_type().index()));
}

ObservedDistribution all_zero_vertex_distribution() {
    return implied_observed(CounterfactualDistribution::vertex(0));
}

}  // namespace

TEST_CASE("controlled direct effect bounds") {
    const auto uniform = ObservedDistribution::uniform();
    for (int m1 = 0; m1 < 2; ++m1)
        for (int m2 = 0; m2 < 2; ++m2) {
            const auto b = cde_bounds(uniform, m1, m2);
            CHECK(b.lower == doctest::Approx(-0.75));
            CHECK(b.upper == doctest::Approx(0.75));
            CHECK(b.method == BoundMethod::ClosedForm);
            CHECK(b.sharp);
        }

    ObservedDistribution point;  // (M1,M2,Y) = (0,0,0) in both arms
    point.set(0, 0, 0, 0, 1.0);
    point.set(0, 0, 0, 1, 1.0);
    const auto collapsed = cde_bounds(point, 0, 0);
    CHECK(collapsed.lower == doctest::Approx(0.0));
    CHECK(collapsed.upper == doctest::Approx(0.0));
    const auto form = cde_te_form(point, 0, 0);
    CHECK(form.g == doctest::Approx(0.0));
    CHECK(form.b == doctest::Approx(0.0));
}

TEST_CASE("CDE bounds rewritten around the total effect") {
    const auto uniform = ObservedDistribution::uniform();
    const auto form = cde_te_form(uniform, 0, 1);
    CHECK(form.g == doctest::Approx(1.5));
    CHECK(cde_bounds(uniform, 0, 1).width() == doctest::Approx(1.5));

    Rng rng(33);
    for (int rep = 0; rep < 100; ++rep) {
        const auto dist = testutil::random_observed(rng);
        const double te = total_effect(dist);
        for (int m1 = 0; m1 < 2; ++m1)
            for (int m2 = 0; m2 < 2; ++m2) {
                const auto bounds = cde_bounds(dist, m1, m2);
                const auto f = cde_te_form(dist, m1, m2);
                CHECK(te - f.b == doctest::Approx(bounds.lower).epsilon(1e-12));
                CHECK(te - f.b + f.g == doctest::Approx(bounds.upper).epsilon(1e-12));
                CHECK(bounds.width() == doctest::Approx(f.g).epsilon(1e-12));
            }
    }
}

TEST_CASE("natural direct effect bounds") {
    const auto uniform = nde000_bounds(ObservedDistribution::uniform());
    CHECK(uniform.lower == doctest::Approx(-0.5));
    CHECK(uniform.upper == doctest::Approx(0.5));
    CHECK(uniform.active_lower == 4);  // the -1 + p(Y=0|X=0) row
    CHECK(uniform.active_upper == 3);  // the p(Y=0|X=0) row

    const auto chain = nde000_bounds(identity_chain_distribution());
    CHECK(chain.lower == doctest::Approx(0.0));
    CHECK(chain.upper == doctest::Approx(1.0));
    CHECK(chain.active_lower == 0);  // ties resolve to the smallest index
}

TEST_CASE("joint natural indirect effect bounds") {
    const auto uniform = jnie1_bounds(ObservedDistribution::uniform());
    CHECK(uniform.lower == doctest::Approx(-0.5));
    CHECK(uniform.upper == doctest::Approx(0.5));

    const auto chain = jnie1_bounds(identity_chain_distribution());
    CHECK(chain.lower == doctest::Approx(0.0));
    CHECK(chain.upper == doctest::Approx(1.0));
}

TEST_CASE("MS2-NIE1-11 bounds") {
    const auto uniform = ms2nie1_11_bounds(ObservedDistribution::uniform());
    CHECK(uniform.lower == doctest::Approx(-0.5));
    CHECK(uniform.upper == doctest::Approx(0.5));

    const auto zero = ms2nie1_11_bounds(all_zero_vertex_distribution());
    CHECK(zero.lower == doctest::Approx(0.0));
    CHECK(zero.upper == doctest::Approx(0.0));
}

TEST_CASE("NIE2-100 bounds") {
    const auto uniform = nie2_100_bounds(ObservedDistribution::uniform());
    CHECK(uniform.lower == doctest::Approx(-1.0));
    CHECK(uniform.upper == doctest::Approx(1.0));
    CHECK(uniform.noninformative());

    const auto zero = nie2_100_bounds(all_zero_vertex_distribution());
    CHECK(zero.lower == doctest::Approx(0.0));
    CHECK(zero.upper == doctest::Approx(0.0));
}

TEST_CASE("example dataset reproduces the reference bound values") {
    const auto dist = jobs_distribution();
    const auto expect = [](const BoundInterval& b, double lo, double up) {
        CHECK(std::abs(b.lower - lo) < 0.01);
        CHECK(std::abs(b.upper - up) < 0.01);
    };
    expect(nde000_bounds(dist), -0.29, 0.71);
    expect(jnie1_bounds(dist), -0.65, 0.34);
    expect(ms2nie1_11_bounds(dist), -0.50, 0.34);
    expect(nie2_100_bounds(dist), -0.96, 0.84);
    expect(cde_bounds(dist, 0, 0), -0.71, 0.79);
    expect(cde_bounds(dist, 0, 1), -0.51, 0.54);
    expect(cde_bounds(dist, 1, 0), -0.84, 0.86);
    expect(cde_bounds(dist, 1, 1), -0.87, 0.87);
}

TEST_CASE("mirror property: NDE-000 bounds reflect JNIE-1 bounds across TE") {
    Rng rng(2025);
    for (int rep = 0; rep < 200; ++rep) {
        const auto dist = testutil::random_observed(rng);
        const double te = total_effect(dist);
        const auto nde = nde000_bounds(dist);
        const auto jnie = jnie1_bounds(dist);
        CHECK(te - jnie.upper == doctest::Approx(nde.lower).epsilon(1e-12));
        CHECK(te - jnie.lower == doctest::Approx(nde.upper).epsilon(1e-12));
    }
}

TEST_CASE("width caps") {
    Rng rng(555);
    for (int rep = 0; rep < 200; ++rep) {
        const auto dist = testutil::random_observed(rng);
        CHECK(nde000_bounds(dist).width() <= 1.0 + 1e-12);
        CHECK(jnie1_bounds(dist).width() <= 1.0 + 1e-12);
        CHECK(ms2nie1_11_bounds(dist).width() <= 1.0 + 1e-12);
        CHECK(nie2_100_bounds(dist).width() <= 2.0 + 1e-12);
        for (int m1 = 0; m1 < 2; ++m1)
            for (int m2 = 0; m2 < 2; ++m2) {
                const auto b = cde_bounds(dist, m1, m2);
                CHECK(b.lower <= b.upper + 1e-12);
                CHECK(b.lower >= -1.0 - 1e-12);
                CHECK(b.upper <= 1.0 + 1e-12);
            }
    }
}

TEST_CASE("closed-form intervals contain the truth for random counterfactual mass") {
    Rng rng(808);
    for (int rep = 0; rep < 200; ++rep) {
        const auto q = testutil::random_counterfactual(rng);
        const auto dist = implied_observed(q);
        const std::vector<std::pair<EstimandId, BoundInterval>> cases = {
            {EstimandId::nde(0, 0, 0), nde000_bounds(dist)},
            {EstimandId::jnie(1), jnie1_bounds(dist)},
            {EstimandId::ms2nie1(1, 1), ms2nie1_11_bounds(dist)},
            {EstimandId::nie2(1, 0, 0), nie2_100_bounds(dist)},
            {EstimandId::cde(0, 0), cde_bounds(dist, 0, 0)},
            {EstimandId::cde(1, 1), cde_bounds(dist, 1, 1)},
        };
        for (const auto& [e, b] : cases) {
            const double truth = true_value(e, q);
            CHECK(truth >= b.lower - 1e-9);
            CHECK(truth <= b.upper + 1e-9);
        }
    }
}

TEST_CASE("closed-form dispatcher") {
    const auto dist = ObservedDistribution::uniform();
    CHECK(has_closed_form(EstimandId::te()));
    CHECK(has_closed_form(EstimandId::cde(1, 0)));
    CHECK(has_closed_form(EstimandId::nde(0, 0, 0)));
    CHECK_FALSE(has_closed_form(EstimandId::nde(1, 0, 0)));
    CHECK_FALSE(has_closed_form(EstimandId::jnie(0)));
    CHECK_FALSE(has_closed_form(EstimandId::nie1(1, 1, 0)));

    const auto te = closed_form_bounds(dist, EstimandId::te());
    CHECK(te.lower == te.upper);
    CHECK(te.lower == doctest::Approx(0.0));

    CHECK_THROWS_AS(closed_form_bounds(dist, EstimandId::jnie(0)), NoClosedForm);
}

TEST_CASE("subtraction procedure") {
    const auto dist = jobs_distribution();
    const double te = total_effect(dist);
    const auto jnie = jnie1_bounds(dist);
    const std::array<BoundInterval, 1> parts{jnie};
    const auto derived = subtraction_procedure(te, parts);
    CHECK(derived.sharp);  // identified total, single remaining term
    CHECK(derived.method == BoundMethod::Subtraction);
    const auto nde = nde000_bounds(dist);
    CHECK(derived.lower == doctest::Approx(nde.lower).epsilon(1e-12));
    CHECK(derived.upper == doctest::Approx(nde.upper).epsilon(1e-12));

    // subtracting from a non-identified interval is valid but not sharp
    const auto nie2 = nie2_100_bounds(dist);
    const std::array<BoundInterval, 1> parts2{nie2};
    const auto loose = subtraction_procedure(jnie, parts2);
    CHECK_FALSE(loose.sharp);
    const auto ms2 = ms2nie1_11_bounds(dist);
    CHECK(loose.lower <= ms2.lower + 1e-12);
    CHECK(loose.upper >= ms2.upper - 1e-12);
    CHECK(loose.noninformative());

    BoundInterval zero;  // identity part
    const std::array<BoundInterval, 1> zpart{zero};
    const auto same = subtraction_procedure(jnie, zpart);
    CHECK(same.lower == jnie.lower);
    CHECK(same.upper == jnie.upper);
}

TEST_CASE("addition procedure") {
    const auto dist = jobs_distribution();
    const auto ms2 = ms2nie1_11_bounds(dist);
    const auto nie2 = nie2_100_bounds(dist);
    const std::array<BoundInterval, 2> parts{ms2, nie2};
    const auto sum = addition_procedure(parts);
    CHECK(sum.method == BoundMethod::Addition);
    CHECK_FALSE(sum.sharp);
    CHECK(sum.lower == doctest::Approx(ms2.lower + nie2.lower));
    CHECK(sum.upper == doctest::Approx(ms2.upper + nie2.upper));
    // wider than the sharp joint bounds, spilling outside the possible range
    const auto jnie = jnie1_bounds(dist);
    CHECK(sum.lower < jnie.lower);
    CHECK(sum.upper > jnie.upper);
    CHECK(sum.noninformative());
    CHECK(sum.lower < -1.0);
    CHECK(sum.upper > 1.0);

    const auto uniform = ObservedDistribution::uniform();
    const std::array<BoundInterval, 2> uparts{ms2nie1_11_bounds(uniform),
                                              nie2_100_bounds(uniform)};
    const auto usum = addition_procedure(uparts);
    CHECK(usum.lower == doctest::Approx(-1.5));
    CHECK(usum.upper == doctest::Approx(1.5));

    BoundInterval zero;
    const auto jnie_u = jnie1_bounds(uniform);
    const std::array<BoundInterval, 2> idparts{zero, jnie_u};
    const auto same = addition_procedure(idparts);
    CHECK(same.lower == jnie_u.lower);
    CHECK(same.upper == jnie_u.upper);
}
