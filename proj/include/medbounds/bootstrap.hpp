#pragma once

#include <cstdint>
#include <utility>

#include "medbounds/bounds.hpp"
#include "medbounds/estimand.hpp"
#include "medbounds/observed.hpp"

namespace medbounds {

enum class BoundsPath : std::uint8_t { Auto, ClosedForm, Lp };

struct BootstrapConfig {
    int replicates = 2000;
    double level = 0.95;  // coverage of each percentile interval
    std::uint64_t seed = 0;
    int threads = 1;
};

struct BootstrapResult {
    BoundInterval point;
    std::pair<double, double> ci_lower;  // percentile CI for the lower endpoint
    std::pair<double, double> ci_upper;  // percentile CI for the upper endpoint
    int replicates = 0;
    double level = 0.0;
    std::uint64_t seed = 0;
    /// Per-replicate endpoint estimates in replicate order (not sorted);
    /// replicate r is a pure function of (seed, r).
    std::vector<double> lower_samples;
    std::vector<double> upper_samples;
};

/// Percentile bootstrap for estimated bound endpoints. Resampling is with
/// replacement within each arm (arm sizes fixed by design); replicate r draws
/// from the stream derive_seed(seed, r), so earlier replicates are unchanged
/// when the replicate count grows and results do not depend on thread count.
BootstrapResult bootstrap_bounds(const RecordTable& records, EstimandId e,
                                 const BootstrapConfig& config,
                                 BoundsPath path = BoundsPath::Auto);

/// Order statistic with linear interpolation at h = (n - 1) p (the common
/// "type 7" convention). `sorted` must be ascending.
double interpolated_quantile(const std::vector<double>& sorted, double p);

}  // namespace medbounds
