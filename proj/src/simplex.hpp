#pragma once

// Two-phase primal revised simplex specialized to the bounding problem:
//   optimize c.q  subject to  A q = b, q >= 0,
// where A is a 16-row zero/one incidence whose every structural column has
// exactly two ones (one row per arm). The basis stays <= 16-dimensional, so a
// dense explicit inverse is maintained. Bland's smallest-index rule is used
// throughout; the feasible polytope is massively degenerate and cycling is a
// real risk otherwise.
//
// The template parameter lets the same pivoting code run in double precision
// (with tolerances) and in exact rational arithmetic (tolerances zero).

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "medbounds/errors.hpp"

namespace medbounds::detail {

template <class S>
struct SimplexPolicy;

template <>
struct SimplexPolicy<double> {
    static constexpr double feasibility_tol = 1e-9;
    static constexpr double optimality_tol = 1e-10;
    static constexpr double pivot_tol = 1e-9;
    static bool is_zero_feas(const double& v) { return v <= feasibility_tol && v >= -feasibility_tol; }
    static bool negative_reduced(const double& v) { return v < -optimality_tol; }
    static bool pivot_eligible(const double& v) { return v > pivot_tol; }
    static bool nonzero_pivot(const double& v) { return v > pivot_tol || v < -pivot_tol; }
};

struct ExactTag {};

template <class Rational>
struct ExactSimplexPolicy {
    static bool is_zero_feas(const Rational& v) { return v == 0; }
    static bool negative_reduced(const Rational& v) { return v < 0; }
    static bool pivot_eligible(const Rational& v) { return v > 0; }
    static bool nonzero_pivot(const Rational& v) { return v != 0; }
};

/// One structural column: its two row indices (arm 0, arm 1).
struct ColumnPair {
    int row0;
    int row1;
};

template <class S, class Policy>
class TwoPhaseSimplex {
public:
    static constexpr int kRows = 16;

    struct Result {
        S value{};
        std::vector<int> basic_columns;  // structural column ids; -1 for a parked artificial
        std::vector<S> basic_values;
        long pivots = 0;
    };

    TwoPhaseSimplex(const std::vector<ColumnPair>& columns, std::vector<S> cost,
                    std::array<S, kRows> rhs, long max_pivots)
        : cols_(columns), cost_(std::move(cost)), rhs_(std::move(rhs)), max_pivots_(max_pivots) {}

    /// Minimizes cost . q. Throws Infeasible or NumericalFailure.
    Result minimize() {
        init_artificial_basis();
        phase_one();
        return phase_two();
    }

private:
    int n() const { return static_cast<int>(cols_.size()); }
    bool is_artificial(int var) const { return var >= n(); }

    void init_artificial_basis() {
        basis_.resize(kRows);
        xb_.assign(kRows, S(0));
        binv_.assign(kRows, std::vector<S>(kRows, S(0)));
        for (int i = 0; i < kRows; ++i) {
            basis_[i] = n() + i;
            binv_[i][i] = S(1);
            xb_[i] = rhs_[i];
            if (xb_[i] < S(0)) {
                // validated inputs are nonnegative; flip defensively for raw rhs
                binv_[i][i] = S(-1);
                xb_[i] = -xb_[i];
            }
        }
        pivots_ = 0;
    }

    // Reduced cost of structural column j given multipliers y.
    S reduced_cost(const std::vector<S>& y, int j, bool phase_one) const {
        const S base = phase_one ? S(0) : cost_[static_cast<std::size_t>(j)];
        return base - y[static_cast<std::size_t>(cols_[static_cast<std::size_t>(j)].row0)] -
               y[static_cast<std::size_t>(cols_[static_cast<std::size_t>(j)].row1)];
    }

    std::vector<S> multipliers(bool phase_one) const {
        std::vector<S> y(kRows, S(0));
        for (int i = 0; i < kRows; ++i) {
            const int var = basis_[i];
            const S c = phase_one ? (is_artificial(var) ? S(1) : S(0))
                                  : (is_artificial(var) ? S(0) : cost_[static_cast<std::size_t>(var)]);
            if (c == S(0)) continue;
            for (int k = 0; k < kRows; ++k) y[k] += c * binv_[i][k];
        }
        return y;
    }

    std::array<S, kRows> column_direction(int j) const {
        std::array<S, kRows> u;
        const ColumnPair& cp = cols_[static_cast<std::size_t>(j)];
        for (int i = 0; i < kRows; ++i) u[i] = binv_[i][cp.row0] + binv_[i][cp.row1];
        return u;
    }

    // Bland leaving rule: minimum ratio, ties to the smallest basis variable.
    int choose_leaving(const std::array<S, kRows>& u) const {
        int leave = -1;
        S best_ratio{};
        for (int i = 0; i < kRows; ++i) {
            if (!Policy::pivot_eligible(u[i])) continue;
            S ratio = xb_[i] / u[i];
            if (ratio < S(0)) ratio = S(0);  // degenerate noise guard
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis_[i] < basis_[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        return leave;
    }

    void pivot(int leave, int entering, const std::array<S, kRows>& u) {
        const S piv = u[leave];
        for (int k = 0; k < kRows; ++k) binv_[leave][k] /= piv;
        xb_[leave] /= piv;
        for (int i = 0; i < kRows; ++i) {
            if (i == leave) continue;
            const S f = u[i];
            if (f == S(0)) continue;
            for (int k = 0; k < kRows; ++k) binv_[i][k] -= f * binv_[leave][k];
            xb_[i] -= f * xb_[leave];
            if (xb_[i] < S(0) && Policy::is_zero_feas(xb_[i])) xb_[i] = S(0);
        }
        basis_[leave] = entering;
        if (++pivots_ > max_pivots_)
            throw NumericalFailure("simplex pivot limit exceeded (" + std::to_string(max_pivots_) +
                                   ")");
    }

    void iterate(bool phase_one) {
        for (;;) {
            const std::vector<S> y = multipliers(phase_one);
            int entering = -1;
            for (int j = 0; j < n(); ++j) {
                bool basic = false;
                for (int i = 0; i < kRows; ++i)
                    if (basis_[i] == j) {
                        basic = true;
                        break;
                    }
                if (basic) continue;
                if (Policy::negative_reduced(reduced_cost(y, j, phase_one))) {
                    entering = j;  // Bland: first eligible index
                    break;
                }
            }
            if (entering < 0) return;
            const std::array<S, kRows> u = column_direction(entering);
            const int leave = choose_leaving(u);
            if (leave < 0) {
                // The feasible set lives in the probability simplex, so a truly
                // unbounded direction can only come from numerical corruption.
                throw NumericalFailure("unbounded direction encountered for column " +
                                       std::to_string(entering));
            }
            pivot(leave, entering, u);
        }
    }

    void phase_one() {
        iterate(/*phase_one=*/true);
        S infeas = S(0);
        for (int i = 0; i < kRows; ++i)
            if (is_artificial(basis_[i])) infeas += xb_[i];
        if (!Policy::is_zero_feas(infeas))
            throw Infeasible("no counterfactual distribution matches the supplied probabilities "
                             "(phase-1 residual)");
        drive_out_artificials();
    }

    // Pivot zero-valued artificials out wherever a structural column has
    // support in their row. Rows where none does are rank-deficient; the
    // artificial stays parked at zero and never interferes afterwards.
    void drive_out_artificials() {
        for (int i = 0; i < kRows; ++i) {
            if (!is_artificial(basis_[i])) continue;
            for (int j = 0; j < n(); ++j) {
                bool basic = false;
                for (int k = 0; k < kRows; ++k)
                    if (basis_[k] == j) {
                        basic = true;
                        break;
                    }
                if (basic) continue;
                const ColumnPair& cp = cols_[static_cast<std::size_t>(j)];
                const S comp = binv_[i][cp.row0] + binv_[i][cp.row1];
                if (!Policy::nonzero_pivot(comp)) continue;
                const std::array<S, kRows> u = column_direction(j);
                pivot(i, j, u);
                break;
            }
        }
    }

    Result phase_two() {
        iterate(/*phase_one=*/false);
        Result out;
        out.value = S(0);
        out.basic_columns.reserve(kRows);
        out.basic_values.reserve(kRows);
        for (int i = 0; i < kRows; ++i) {
            const int var = basis_[i];
            out.basic_columns.push_back(is_artificial(var) ? -1 : var);
            out.basic_values.push_back(xb_[i]);
            if (!is_artificial(var)) out.value += cost_[static_cast<std::size_t>(var)] * xb_[i];
        }
        out.pivots = pivots_;
        return out;
    }

    const std::vector<ColumnPair>& cols_;
    std::vector<S> cost_;
    std::array<S, kRows> rhs_;
    long max_pivots_;

    std::vector<int> basis_;
    std::vector<S> xb_;
    std::vector<std::vector<S>> binv_;
    long pivots_ = 0;
};

}  // namespace medbounds::detail
