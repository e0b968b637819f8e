#include "medbounds/lp.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>
#include <map>

#include "medbounds/errors.hpp"
#include "simplex.hpp"

namespace medbounds {

namespace {

using detail::ColumnPair;
using Rational = boost::multiprecision::cpp_rational;

/// Row pair (arm-0 cell, arm-1 cell) hit by each response type.
const std::vector<ColumnPair>& type_columns() {
    static const std::vector<ColumnPair> table = [] {
        std::vector<ColumnPair> cols(kTypeCount);
        for (int t = 0; t < kTypeCount; ++t) {
            const ResponseType type = ResponseType::from_index(t);
            const NaturalWorld w0 = natural_world(type, 0);
            const NaturalWorld w1 = natural_world(type, 1);
            cols[static_cast<std::size_t>(t)] =
                ColumnPair{cell_index(w0.y, w0.m1, w0.m2, 0), cell_index(w1.y, w1.m1, w1.m2, 1)};
        }
        return cols;
    }();
    return table;
}

/// A reduced problem: columns plus the response type each one stands for.
struct ReducedProblem {
    std::vector<ColumnPair> cols;
    std::vector<int> type_of_col;
    std::vector<int> cost;  // entries in {-1, 0, 1} (pre-negation)
};

/// Keep, per distinct column pair, the type with the smallest cost (ties to
/// the smallest type index). Duplicate columns with larger cost can never
/// improve a minimization, so the optimum is preserved.
ReducedProblem reduce_for_min(std::span<const std::int8_t> objective) {
    ReducedProblem out;
    std::array<int, 64> best_type;
    best_type.fill(-1);
    const auto& cols = type_columns();
    for (int t = 0; t < kTypeCount; ++t) {
        const ColumnPair& cp = cols[static_cast<std::size_t>(t)];
        const int key = cp.row0 * 8 + (cp.row1 - 8);
        const int c = objective[static_cast<std::size_t>(t)];
        if (best_type[key] < 0 || c < objective[static_cast<std::size_t>(best_type[key])])
            best_type[key] = t;
    }
    for (int key = 0; key < 64; ++key) {
        const int t = best_type[key];
        if (t < 0) continue;  // every pair is realized, but keep the guard
        out.cols.push_back(cols[static_cast<std::size_t>(t)]);
        out.type_of_col.push_back(t);
        out.cost.push_back(objective[static_cast<std::size_t>(t)]);
    }
    return out;
}

ReducedProblem full_problem(std::span<const std::int8_t> objective) {
    ReducedProblem out;
    out.cols = type_columns();
    out.type_of_col.resize(kTypeCount);
    out.cost.resize(kTypeCount);
    for (int t = 0; t < kTypeCount; ++t) {
        out.type_of_col[static_cast<std::size_t>(t)] = t;
        out.cost[static_cast<std::size_t>(t)] = objective[static_cast<std::size_t>(t)];
    }
    return out;
}

template <class S>
struct MinimizeOutcome {
    S value;
    LpBasis basis;
};

template <class S, class Policy>
MinimizeOutcome<S> minimize_objective(std::span<const std::int8_t> objective, bool negate,
                                      const std::array<S, kCells>& rhs,
                                      const LpOptions& options) {
    // Negation happens before reduction so the kept duplicate is extremal for
    // the direction actually solved.
    std::vector<std::int8_t> directed(objective.begin(), objective.end());
    if (negate)
        for (auto& v : directed) v = static_cast<std::int8_t>(-v);

    const ReducedProblem problem = options.presolve_duplicates
                                       ? reduce_for_min(directed)
                                       : full_problem(directed);
    std::vector<S> cost;
    cost.reserve(problem.cost.size());
    for (int c : problem.cost) cost.push_back(S(c));

    detail::TwoPhaseSimplex<S, Policy> solver(problem.cols, std::move(cost), rhs,
                                              options.max_pivots);
    const auto result = solver.minimize();

    MinimizeOutcome<S> out{negate ? S(-result.value) : result.value, {}};
    out.basis.pivots = result.pivots;
    for (std::size_t i = 0; i < result.basic_columns.size(); ++i) {
        const int col = result.basic_columns[i];
        out.basis.types.push_back(col < 0 ? -1 : problem.type_of_col[static_cast<std::size_t>(col)]);
        out.basis.masses.push_back(static_cast<double>(result.basic_values[i]));
    }
    return out;
}

std::array<double, kCells> rhs_from(const ObservedDistribution& dist) {
    std::array<double, kCells> rhs;
    for (int i = 0; i < kCells; ++i) rhs[i] = dist.cells()[static_cast<std::size_t>(i)];
    return rhs;
}

Rational parse_probability_string(const std::string& text) {
    using boost::multiprecision::cpp_int;
    const auto bad = [&] { return MalformedInput("cannot parse probability '" + text + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        if (num.empty() || den.empty()) throw bad();
        return Rational(cpp_int(num), cpp_int(den));
    }
    std::string digits;
    long frac_digits = -1;
    for (char ch : text) {
        if (ch == '.') {
            if (frac_digits >= 0) throw bad();
            frac_digits = 0;
        } else if (ch >= '0' && ch <= '9') {
            digits += ch;
            if (frac_digits >= 0) ++frac_digits;
        } else {
            throw bad();
        }
    }
    if (digits.empty()) throw bad();
    Rational value(cpp_int(digits));
    for (long i = 0; i < std::max<long>(frac_digits, 0); ++i) value /= 10;
    return value;
}

ExactBoundInterval solve_exact(const std::array<Rational, kCells>& rhs, EstimandId e,
                               const LpOptions& options) {
    for (int x = 0; x < 2; ++x) {
        Rational sum = 0;
        for (int i = 0; i < 8; ++i) sum += rhs[static_cast<std::size_t>(8 * x + i)];
        if (sum != 1)
            throw ArmNotNormalized("exact mode requires per-arm sums of exactly 1 (arm " +
                                   std::to_string(x) + ")");
        for (int i = 0; i < 8; ++i)
            if (rhs[static_cast<std::size_t>(8 * x + i)] < 0)
                throw NegativeProbability("exact-mode probability below zero");
    }
    using Policy = detail::ExactSimplexPolicy<Rational>;
    const auto objective = objective_vector(e);
    const auto lo = minimize_objective<Rational, Policy>(objective, false, rhs, options);
    const auto hi = minimize_objective<Rational, Policy>(objective, true, rhs, options);
    ExactBoundInterval out;
    out.lower_rational = lo.value.str();
    out.upper_rational = hi.value.str();
    out.lower = static_cast<double>(lo.value);
    out.upper = static_cast<double>(hi.value);
    return out;
}

}  // namespace

LpSolution sharp_bounds_lp_detailed(const ObservedDistribution& dist, EstimandId e,
                                    const LpOptions& options) {
    validate(dist);
    const auto objective = objective_vector(e);
    const auto rhs = rhs_from(dist);
    using Policy = detail::SimplexPolicy<double>;
    auto lo = minimize_objective<double, Policy>(objective, false, rhs, options);
    auto hi = minimize_objective<double, Policy>(objective, true, rhs, options);

    LpSolution out;
    out.interval.lower = lo.value;
    out.interval.upper = hi.value;
    out.interval.method = BoundMethod::Lp;
    out.interval.sharp = true;
    out.lower_basis = std::move(lo.basis);
    out.upper_basis = std::move(hi.basis);
    return out;
}

BoundInterval sharp_bounds_lp(const ObservedDistribution& dist, EstimandId e,
                              const LpOptions& options) {
    return sharp_bounds_lp_detailed(dist, e, options).interval;
}

ExactBoundInterval sharp_bounds_lp_exact(const std::array<std::string, kCells>& cells,
                                         EstimandId e, const LpOptions& options) {
    std::array<Rational, kCells> rhs;
    for (int i = 0; i < kCells; ++i)
        rhs[static_cast<std::size_t>(i)] = parse_probability_string(cells[static_cast<std::size_t>(i)]);
    return solve_exact(rhs, e, options);
}

ExactBoundInterval sharp_bounds_lp_exact(const RecordTable& records, EstimandId e,
                                         const LpOptions& options) {
    const std::size_t n0 = records.arm_size(0);
    const std::size_t n1 = records.arm_size(1);
    if (n0 == 0 || n1 == 0) throw EmptyArm("both arms must be nonempty");
    std::array<Rational, kCells> rhs;
    for (int x = 0; x < 2; ++x) {
        const auto counts = records.arm_counts(x);
        const long n = static_cast<long>(x == 0 ? n0 : n1);
        for (int y = 0; y < 2; ++y)
            for (int m1 = 0; m1 < 2; ++m1)
                for (int m2 = 0; m2 < 2; ++m2)
                    rhs[static_cast<std::size_t>(cell_index(y, m1, m2, x))] =
                        Rational(counts[4 * y + 2 * m1 + m2], n);
    }
    return solve_exact(rhs, e, options);
}

}  // namespace medbounds
