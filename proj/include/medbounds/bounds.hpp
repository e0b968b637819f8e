#pragma once

#include <span>
#include <string>

#include "medbounds/estimand.hpp"
#include "medbounds/observed.hpp"

namespace medbounds {

enum class BoundMethod : std::uint8_t { ClosedForm, Lp, Subtraction, Addition };

std::string to_string(BoundMethod method);

/// A (lower, upper) interval with provenance. `active_lower` / `active_upper`
/// are the 0-based positions of the winning expressions in the max/min lists
/// (closed form only; ties resolve to the smallest index). Procedure outputs
/// may leave [-1, 1]; they are deliberately not clipped, since exceeding the
/// possible range is itself diagnostic.
struct BoundInterval {
    double lower = 0.0;
    double upper = 0.0;
    BoundMethod method = BoundMethod::ClosedForm;
    int active_lower = -1;
    int active_upper = -1;
    bool sharp = false;

    double width() const { return upper - lower; }
    bool excludes_zero() const { return lower > 0.0 || upper < 0.0; }
    /// True when the interval contains all of [-1, 1].
    bool noninformative() const { return lower <= -1.0 + 1e-12 && upper >= 1.0 - 1e-12; }
};

/// Controlled direct effect bounds, any (m1, m2).
BoundInterval cde_bounds(const ObservedDistribution& dist, int m1, int m2);

/// The CDE bounds rewritten around the total effect: lower = TE - B and
/// upper = TE - B + g, where g is the width.
struct CdeTeForm {
    double b;
    double g;
};
CdeTeForm cde_te_form(const ObservedDistribution& dist, int m1, int m2);

BoundInterval nde000_bounds(const ObservedDistribution& dist);
BoundInterval jnie1_bounds(const ObservedDistribution& dist);
BoundInterval ms2nie1_11_bounds(const ObservedDistribution& dist);
BoundInterval nie2_100_bounds(const ObservedDistribution& dist);

/// True for TE, every CDE, NDE-000, JNIE-1, MS2NIE1-11 and NIE2-100.
bool has_closed_form(EstimandId e);

/// Dispatches to the closed form for `e`; throws NoClosedForm for estimands
/// that only the LP oracle covers. TE yields the degenerate identified point.
BoundInterval closed_form_bounds(const ObservedDistribution& dist, EstimandId e);

/// Bounds for one decomposition term from the whole minus the other terms.
/// Sharp only when theta is identified and there is exactly one part.
BoundInterval subtraction_procedure(const BoundInterval& theta,
                                    std::span<const BoundInterval> parts);
BoundInterval subtraction_procedure(double theta_identified,
                                    std::span<const BoundInterval> parts);

/// Bounds for a sum of terms by adding endpoints; valid but never flagged sharp.
BoundInterval addition_procedure(std::span<const BoundInterval> parts);

}  // namespace medbounds
