#include "medbounds/simulate.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <atomic>
#include <cmath>
#include <string>

#include "medbounds/errors.hpp"
#include "medbounds/lp.hpp"
#include "medbounds/parallel.hpp"
#include "medbounds/rng.hpp"

namespace medbounds {

namespace {

BoundInterval bounds_for(const ObservedDistribution& dist, EstimandId e) {
    return has_closed_form(e) ? closed_form_bounds(dist, e) : sharp_bounds_lp(dist, e);
}

int vertex_label(double value) {
    const double rounded = std::round(value);
    if (std::abs(value - rounded) > 1e-6 || rounded < -1.0 || rounded > 1.0)
        throw NumericalFailure("vertex bound " + std::to_string(value) +
                               " is not one of -1, 0, 1");
    return static_cast<int>(rounded);
}

}  // namespace

std::vector<CounterfactualDistribution> sample_counterfactuals(double alpha, int n,
                                                               std::uint64_t seed) {
    std::vector<CounterfactualDistribution> draws;
    draws.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        draws.emplace_back(dirichlet_symmetric(rng, alpha, kTypeCount));
    }
    return draws;
}

VertexSweepResult vertex_sweep(EstimandId e, int threads, bool cross_check) {
    const bool closed = has_closed_form(e);
    std::vector<std::pair<int, int>> labels(kTypeCount);
    std::vector<double> diffs(cross_check ? kTypeCount : 0, 0.0);

    parallel_for(kTypeCount, default_thread_count(threads), [&](std::int64_t t) {
        const ObservedDistribution dist =
            implied_observed(CounterfactualDistribution::vertex(static_cast<int>(t)));
        const BoundInterval primary = closed ? closed_form_bounds(dist, e)
                                             : sharp_bounds_lp(dist, e);
        labels[static_cast<std::size_t>(t)] = {vertex_label(primary.lower),
                                               vertex_label(primary.upper)};
        if (cross_check && closed) {
            const BoundInterval lp = sharp_bounds_lp(dist, e);
            diffs[static_cast<std::size_t>(t)] = std::max(std::abs(lp.lower - primary.lower),
                                                          std::abs(lp.upper - primary.upper));
        }
    });

    VertexSweepResult out;
    for (const auto& cell : labels) ++out.table[cell];
    for (double d : diffs) out.cross_check_max_diff = std::max(out.cross_check_max_diff, d);
    return out;
}

StudyResult dirichlet_study(const SimulationConfig& config) {
    if (config.alpha_levels.empty()) throw MalformedInput("no alpha levels supplied");
    if (config.n_per_level < 1) throw MalformedInput("n_per_level must be >= 1");
    if (config.estimands.empty()) throw MalformedInput("no estimands supplied");
    for (double alpha : config.alpha_levels)
        if (!(alpha > 0.0)) throw MalformedInput("alpha levels must be positive");

    const std::size_t levels = config.alpha_levels.size();
    const std::size_t n = static_cast<std::size_t>(config.n_per_level);
    const std::size_t n_est = config.estimands.size();

    StudyResult out;
    out.rows.resize(levels * n * n_est);
    std::atomic<long> redraws{0};

    const int threads = default_thread_count(config.threads);
    parallel_for(static_cast<std::int64_t>(levels * n), threads, [&](std::int64_t item) {
        const std::size_t level = static_cast<std::size_t>(item) / n;
        const std::size_t rep = static_cast<std::size_t>(item) % n;
        const double alpha = config.alpha_levels[level];
        const std::uint64_t level_seed = derive_seed(config.seed, level);
        Rng rng(derive_seed(level_seed, rep));
        long local_redraws = 0;
        const CounterfactualDistribution q(
            dirichlet_symmetric(rng, alpha, kTypeCount, &local_redraws));
        if (local_redraws > 0) redraws += local_redraws;
        const ObservedDistribution dist = implied_observed(q);
        for (std::size_t k = 0; k < n_est; ++k) {
            const BoundInterval b = bounds_for(dist, config.estimands[k]);
            StudyRow& row = out.rows[(static_cast<std::size_t>(item)) * n_est + k];
            row.alpha = alpha;
            row.replicate = static_cast<int>(rep);
            row.estimand = config.estimands[k];
            row.lower = b.lower;
            row.upper = b.upper;
            row.width = b.width();
            row.excludes_zero = b.excludes_zero();
        }
    });
    out.redraws = redraws.load();

    // width "less than 1" must not absorb the exact-width-1 mass that the
    // caps make common; hence the epsilon
    for (std::size_t level = 0; level < levels; ++level)
        for (std::size_t k = 0; k < n_est; ++k) {
            long lt1 = 0, excl = 0;
            for (std::size_t rep = 0; rep < n; ++rep) {
                const StudyRow& row = out.rows[(level * n + rep) * n_est + k];
                if (row.width < 1.0 - 1e-9) ++lt1;
                if (row.excludes_zero) ++excl;
            }
            StudySummaryRow s;
            s.alpha = config.alpha_levels[level];
            s.estimand = config.estimands[k];
            s.prop_width_lt_1 = static_cast<double>(lt1) / static_cast<double>(n);
            s.prop_excludes_zero = static_cast<double>(excl) / static_cast<double>(n);
            const auto ci = clopper_pearson(excl, static_cast<long>(n), 0.95);
            s.ci_low = ci.first;
            s.ci_high = ci.second;
            out.summary.push_back(s);
        }
    return out;
}

std::pair<double, double> clopper_pearson(long successes, long trials, double level) {
    if (trials <= 0 || successes < 0 || successes > trials)
        throw MalformedInput("bad binomial tally " + std::to_string(successes) + "/" +
                             std::to_string(trials));
    const double tail = (1.0 - level) / 2.0;
    const double k = static_cast<double>(successes);
    const double n = static_cast<double>(trials);
    const double low =
        successes == 0 ? 0.0 : boost::math::ibeta_inv(k, n - k + 1.0, tail);
    const double high =
        successes == trials ? 1.0 : boost::math::ibeta_inv(k + 1.0, n - k, 1.0 - tail);
    return {low, high};
}

}  // namespace medbounds
