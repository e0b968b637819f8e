#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "medbounds/bounds.hpp"
#include "medbounds/estimand.hpp"
#include "medbounds/observed.hpp"

namespace medbounds {

struct LpOptions {
    /// Collapse duplicate constraint columns (types hitting the same pair of
    /// observed cells) to the one with extremal objective before solving.
    /// Optimal values are unchanged; solves shrink from 16,384 columns to at
    /// most 64. Disable to run on the raw column set.
    bool presolve_duplicates = true;
    long max_pivots = 1'000'000;
};

/// Active-basis snapshot of one optimized direction, for debugging dumps.
struct LpBasis {
    std::vector<int> types;     // response-type indices; -1 marks a parked artificial row
    std::vector<double> masses;
    long pivots = 0;
};

struct LpSolution {
    BoundInterval interval;
    LpBasis lower_basis;
    LpBasis upper_basis;
};

/// Sharp bounds for any catalog estimand: minimize and maximize its objective
/// over all counterfactual distributions consistent with `dist`.
/// Throws Infeasible (corrupted inputs) or NumericalFailure (pivot limit).
BoundInterval sharp_bounds_lp(const ObservedDistribution& dist, EstimandId e,
                              const LpOptions& options = {});

LpSolution sharp_bounds_lp_detailed(const ObservedDistribution& dist, EstimandId e,
                                    const LpOptions& options = {});

/// Exact-arithmetic bounds. Interval endpoints as exact rational strings plus
/// their double roundings.
struct ExactBoundInterval {
    std::string lower_rational;
    std::string upper_rational;
    double lower;
    double upper;
};

/// The 16 cell probabilities as decimal ("0.125") or rational ("1/8") strings,
/// indexed by cell_index(y, m1, m2, x). Per-arm sums must be exactly 1.
ExactBoundInterval sharp_bounds_lp_exact(const std::array<std::string, kCells>& cells,
                                         EstimandId e, const LpOptions& options = {});

/// Exact bounds straight from integer cell counts (plug-in estimate is exact).
ExactBoundInterval sharp_bounds_lp_exact(const RecordTable& records, EstimandId e,
                                         const LpOptions& options = {});

}  // namespace medbounds
