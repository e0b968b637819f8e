#include "medbounds/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "medbounds/errors.hpp"
#include "medbounds/lp.hpp"
#include "medbounds/parallel.hpp"
#include "medbounds/rng.hpp"

namespace medbounds {

namespace {

BoundInterval bounds_via(const ObservedDistribution& dist, EstimandId e, BoundsPath path) {
    switch (path) {
        case BoundsPath::ClosedForm: return closed_form_bounds(dist, e);
        case BoundsPath::Lp: return sharp_bounds_lp(dist, e);
        case BoundsPath::Auto:
            return has_closed_form(e) ? closed_form_bounds(dist, e) : sharp_bounds_lp(dist, e);
    }
    throw MalformedInput("unknown bounds path");
}

}  // namespace

double interpolated_quantile(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) throw MalformedInput("quantile of empty sample");
    if (sorted.size() == 1) return sorted.front();
    const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = h - std::floor(h);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

BootstrapResult bootstrap_bounds(const RecordTable& records, EstimandId e,
                                 const BootstrapConfig& config, BoundsPath path) {
    if (config.replicates < 1) throw MalformedInput("replicates must be >= 1");
    if (!(config.level > 0.0 && config.level < 1.0))
        throw MalformedInput("level must lie in (0, 1)");

    std::vector<Record> arm0, arm1;
    for (const Record& r : records.rows()) (r.x == 0 ? arm0 : arm1).push_back(r);
    if (arm0.empty() || arm1.empty())
        throw EmptyArm("arm sizes n0=" + std::to_string(arm0.size()) +
                       ", n1=" + std::to_string(arm1.size()));

    BootstrapResult out;
    out.point = bounds_via(estimate_distribution(records), e, path);
    out.replicates = config.replicates;
    out.level = config.level;
    out.seed = config.seed;

    const std::size_t n_rep = static_cast<std::size_t>(config.replicates);
    std::vector<double> lowers(n_rep), uppers(n_rep);
    parallel_for(static_cast<std::int64_t>(n_rep), default_thread_count(config.threads),
                 [&](std::int64_t r) {
                     Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(r)));
                     RecordTable resample;
                     for (std::size_t i = 0; i < arm0.size(); ++i) {
                         const Record& pick = arm0[rng.bounded(arm0.size())];
                         resample.add(pick.x, pick.m1, pick.m2, pick.y);
                     }
                     for (std::size_t i = 0; i < arm1.size(); ++i) {
                         const Record& pick = arm1[rng.bounded(arm1.size())];
                         resample.add(pick.x, pick.m1, pick.m2, pick.y);
                     }
                     const BoundInterval b = bounds_via(estimate_distribution(resample), e, path);
                     lowers[static_cast<std::size_t>(r)] = b.lower;
                     uppers[static_cast<std::size_t>(r)] = b.upper;
                 });

    out.lower_samples = lowers;
    out.upper_samples = uppers;
    std::sort(lowers.begin(), lowers.end());
    std::sort(uppers.begin(), uppers.end());
    const double tail = (1.0 - config.level) / 2.0;
    out.ci_lower = {interpolated_quantile(lowers, tail), interpolated_quantile(lowers, 1.0 - tail)};
    out.ci_upper = {interpolated_quantile(uppers, tail), interpolated_quantile(uppers, 1.0 - tail)};
    return out;
}

}  // namespace medbounds
