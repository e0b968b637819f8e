#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "medbounds/bounds.hpp"
#include "medbounds/canonical.hpp"
#include "medbounds/estimand.hpp"

namespace medbounds {

struct SimulationConfig {
    std::vector<double> alpha_levels;
    int n_per_level = 1000;
    std::uint64_t seed = 0;
    std::vector<EstimandId> estimands;
    int threads = 1;
};

/// n symmetric-Dirichlet draws over the 16,384 types. Draw i uses the stream
/// derive_seed(seed, i), so output is independent of batching.
std::vector<CounterfactualDistribution> sample_counterfactuals(double alpha, int n,
                                                               std::uint64_t seed);

/// Tabulation of (lower label, upper label) -> count over all 16,384 vertex
/// distributions; the labels at vertices are always -1, 0 or 1.
using VertexSweepTable = std::map<std::pair<int, int>, long>;

struct VertexSweepResult {
    VertexSweepTable table;
    /// Largest |closed form - LP| seen when cross-checking; 0 when not run.
    double cross_check_max_diff = 0.0;
};

VertexSweepResult vertex_sweep(EstimandId e, int threads = 1, bool cross_check = false);

struct StudyRow {
    double alpha = 0.0;
    int replicate = 0;
    EstimandId estimand;
    double lower = 0.0;
    double upper = 0.0;
    double width = 0.0;
    bool excludes_zero = false;
};

struct StudySummaryRow {
    double alpha = 0.0;
    EstimandId estimand;
    double prop_width_lt_1 = 0.0;
    double prop_excludes_zero = 0.0;
    double ci_low = 0.0;   // Clopper-Pearson 95% limits for prop_excludes_zero
    double ci_high = 0.0;
};

struct StudyResult {
    std::vector<StudyRow> rows;
    std::vector<StudySummaryRow> summary;
    long redraws = 0;
};

/// The symmetric-Dirichlet width / zero-exclusion study. Rows come out in
/// (level, replicate, estimand) order regardless of thread count.
StudyResult dirichlet_study(const SimulationConfig& config);

/// Exact two-sided Clopper-Pearson limits for a binomial proportion.
std::pair<double, double> clopper_pearson(long successes, long trials, double level = 0.95);

}  // namespace medbounds
