#include "medbounds/bounds.hpp"

#include <algorithm>
#include <array>
#include <cstddef>

#include "medbounds/errors.hpp"

namespace medbounds {

std::string to_string(BoundMethod method) {
    switch (method) {
        case BoundMethod::ClosedForm: return "closed-form";
        case BoundMethod::Lp: return "lp";
        case BoundMethod::Subtraction: return "subtraction";
        case BoundMethod::Addition: return "addition";
    }
    return "unknown";
}

namespace {

template <std::size_t N>
std::pair<double, int> max_with_index(const std::array<double, N>& values) {
    double best = values[0];
    int idx = 0;
    for (std::size_t i = 1; i < N; ++i)
        if (values[i] > best) {
            best = values[i];
            idx = static_cast<int>(i);
        }
    return {best, idx};
}

template <std::size_t N>
std::pair<double, int> min_with_index(const std::array<double, N>& values) {
    double best = values[0];
    int idx = 0;
    for (std::size_t i = 1; i < N; ++i)
        if (values[i] < best) {
            best = values[i];
            idx = static_cast<int>(i);
        }
    return {best, idx};
}

template <std::size_t NL, std::size_t NU>
BoundInterval closed_interval(const std::array<double, NL>& lower_exprs,
                              const std::array<double, NU>& upper_exprs) {
    const auto [lo, ilo] = max_with_index(lower_exprs);
    const auto [up, iup] = min_with_index(upper_exprs);
    BoundInterval out;
    out.lower = lo;
    out.upper = up;
    out.method = BoundMethod::ClosedForm;
    out.active_lower = ilo;
    out.active_upper = iup;
    out.sharp = true;
    return out;
}

}  // namespace

BoundInterval cde_bounds(const ObservedDistribution& dist, int m1, int m2) {
    const auto P = [&](int y, int a, int b, int x) { return dist.p(y, a, b, x); };
    const std::array<double, 1> lower{-1.0 + P(0, m1, m2, 0) + P(1, m1, m2, 1)};
    const std::array<double, 1> upper{1.0 - P(0, m1, m2, 1) - P(1, m1, m2, 0)};
    return closed_interval(lower, upper);
}

CdeTeForm cde_te_form(const ObservedDistribution& dist, int m1, int m2) {
    double b = 0.0, g = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int c = 0; c < 2; ++c) {
            if (a == m1 && c == m2) continue;
            b += dist.p(1, a, c, 1) - dist.p(0, a, c, 0);
            g += (dist.p(0, a, c, 0) + dist.p(1, a, c, 0)) +
                 (dist.p(0, a, c, 1) + dist.p(1, a, c, 1));
        }
    return CdeTeForm{b, g};
}

BoundInterval nde000_bounds(const ObservedDistribution& dist) {
    const auto P = [&](int y, int m1, int m2, int x) { return dist.p(y, m1, m2, x); };
    const std::array<double, 5> lower{
        P(1, 1, 1, 1) - P(1, 0, 0, 0) - P(1, 1, 0, 0) - P(1, 0, 1, 0) + P(0, 1, 1, 0) - 1.0,
        -2.0 + P(0, 0, 0, 0) + P(0, 1, 0, 0) + 2.0 * P(0, 0, 1, 0) + P(1, 0, 1, 0) +
            P(1, 0, 1, 1) + P(0, 1, 1, 0),
        -2.0 + P(0, 0, 0, 0) + 2.0 * P(0, 1, 0, 0) + P(1, 1, 0, 0) + P(1, 1, 0, 1) +
            P(0, 0, 1, 0) + P(0, 1, 1, 0),
        -2.0 + 2.0 * P(0, 0, 0, 0) + P(1, 0, 0, 0) + P(1, 0, 0, 1) + P(0, 1, 0, 0) +
            P(0, 0, 1, 0) + P(0, 1, 1, 0),
        -1.0 + P(0, 0, 0, 0) + P(0, 1, 0, 0) + P(0, 0, 1, 0) + P(0, 1, 1, 0),
    };
    const std::array<double, 5> upper{
        1.0 + P(0, 0, 0, 0) - P(0, 1, 0, 1) - P(1, 1, 0, 0) + P(0, 0, 1, 0) + P(0, 1, 1, 0),
        1.0 + P(0, 0, 0, 0) + P(0, 1, 0, 0) - P(0, 0, 1, 1) - P(1, 0, 1, 0) + P(0, 1, 1, 0),
        1.0 + P(0, 0, 0, 0) - P(1, 1, 1, 0) + P(0, 1, 0, 0) + P(0, 0, 1, 0) - P(0, 1, 1, 1),
        P(0, 0, 0, 0) + P(0, 1, 0, 0) + P(0, 0, 1, 0) + P(0, 1, 1, 0),
        1.0 - P(0, 0, 0, 1) - P(1, 0, 0, 0) + P(0, 1, 0, 0) + P(0, 0, 1, 0) + P(0, 1, 1, 0),
    };
    return closed_interval(lower, upper);
}

BoundInterval jnie1_bounds(const ObservedDistribution& dist) {
    const auto P = [&](int y, int m1, int m2, int x) { return dist.p(y, m1, m2, x); };
    const std::array<double, 5> lower{
        -1.0 + P(1, 1, 1, 0) + P(0, 1, 1, 0) - P(0, 0, 0, 1) - P(0, 1, 0, 1) - P(0, 0, 1, 1),
        -P(0, 0, 0, 1) - P(0, 1, 0, 1) - P(0, 0, 1, 1) - P(0, 1, 1, 1),
        -1.0 - P(0, 0, 0, 1) - P(0, 1, 0, 1) + P(0, 0, 1, 0) + P(1, 0, 1, 0) - P(0, 1, 1, 1),
        -1.0 - P(0, 0, 0, 1) + P(0, 1, 0, 0) + P(1, 1, 0, 0) - P(0, 0, 1, 1) - P(0, 1, 1, 1),
        -1.0 + P(0, 0, 0, 0) + P(1, 0, 0, 0) - P(0, 1, 0, 1) - P(0, 0, 1, 1) - P(0, 1, 1, 1),
    };
    const std::array<double, 5> upper{
        2.0 - P(0, 0, 0, 0) - P(0, 0, 0, 1) - P(1, 0, 0, 0) - P(1, 0, 0, 1) - P(0, 1, 0, 1) -
            P(0, 0, 1, 1) - P(0, 1, 1, 1),
        1.0 - P(0, 0, 0, 1) - P(0, 1, 0, 1) - P(0, 0, 1, 1) - P(0, 1, 1, 1),
        2.0 - P(0, 0, 0, 1) - P(0, 1, 0, 0) - P(0, 1, 0, 1) - P(1, 1, 0, 0) - P(1, 1, 0, 1) -
            P(0, 0, 1, 1) - P(0, 1, 1, 1),
        2.0 - P(0, 0, 0, 1) - P(0, 1, 0, 1) - P(0, 0, 1, 0) - P(0, 0, 1, 1) - P(1, 0, 1, 0) -
            P(1, 0, 1, 1) - P(0, 1, 1, 1),
        1.0 - P(1, 1, 1, 0) - P(0, 1, 1, 0) + P(1, 0, 0, 1) + P(1, 1, 0, 1) + P(1, 0, 1, 1),
    };
    return closed_interval(lower, upper);
}

BoundInterval ms2nie1_11_bounds(const ObservedDistribution& dist) {
    const auto P = [&](int y, int m1, int m2, int x) { return dist.p(y, m1, m2, x); };
    const std::array<double, 3> lower{
        -P(0, 0, 0, 0) - P(0, 0, 0, 1) - P(1, 0, 0, 0) - P(0, 0, 1, 0) - P(0, 0, 1, 1) -
            P(1, 0, 1, 0),
        -P(0, 0, 0, 1) - P(0, 1, 0, 1) - P(0, 0, 1, 1) - P(0, 1, 1, 1),
        -1.0 + P(0, 0, 0, 0) + P(1, 0, 0, 0) - P(0, 1, 0, 1) + P(0, 0, 1, 0) + P(1, 0, 1, 0) -
            P(0, 1, 1, 1),
    };
    const std::array<double, 3> upper{
        1.0 - P(0, 0, 0, 0) - P(1, 0, 0, 0) - P(0, 0, 1, 0) - P(1, 0, 1, 0) + P(1, 1, 1, 1) +
            P(1, 1, 0, 1),
        1.0 - P(0, 0, 0, 1) - P(0, 1, 0, 1) - P(0, 0, 1, 1) - P(0, 1, 1, 1),
        P(0, 0, 0, 0) + P(1, 0, 0, 0) + P(1, 0, 0, 1) + P(0, 0, 1, 0) + P(1, 0, 1, 0) +
            P(1, 0, 1, 1),
    };
    return closed_interval(lower, upper);
}

BoundInterval nie2_100_bounds(const ObservedDistribution& dist) {
    const auto P = [&](int y, int m1, int m2, int x) { return dist.p(y, m1, m2, x); };
    const std::array<double, 7> lower{
        -1.0 + P(0, 1, 1, 0) + P(1, 1, 1, 0) - P(0, 0, 0, 1) - P(1, 0, 0, 1) - P(0, 1, 0, 1) -
            P(0, 0, 1, 1) - P(1, 0, 1, 1),
        -1.0 + P(1, 1, 0, 1) + P(1, 1, 1, 1) - P(0, 0, 0, 0) - P(1, 0, 0, 0) - P(0, 0, 1, 0) -
            P(1, 0, 1, 0),
        -2.0 + P(1, 0, 0, 1) + P(0, 0, 1, 0) + P(0, 0, 1, 1) + P(1, 0, 1, 0) + P(1, 0, 1, 1),
        -2.0 + P(0, 0, 0, 0) + P(1, 0, 0, 0) + P(1, 0, 0, 1) + P(0, 0, 1, 0) + P(1, 0, 1, 0) +
            P(1, 0, 1, 1),
        -1.0 - P(0, 0, 0, 1) - P(1, 0, 0, 1) + P(0, 1, 0, 0) + P(1, 1, 0, 0) - P(0, 0, 1, 1) -
            P(1, 0, 1, 1) - P(0, 1, 1, 1),
        -2.0 + P(0, 0, 0, 0) + P(0, 0, 0, 1) + P(1, 0, 0, 0) + P(1, 0, 0, 1) + P(1, 0, 1, 1),
        -1.0,
    };
    const std::array<double, 7> upper{
        2.0 - P(0, 0, 0, 0) - P(0, 0, 0, 1) - P(1, 0, 0, 0) - P(1, 0, 0, 1) - P(0, 0, 1, 1),
        2.0 - P(0, 0, 0, 0) - P(0, 0, 0, 1) - P(1, 0, 0, 0) - P(0, 0, 1, 0) - P(0, 0, 1, 1) -
            P(1, 0, 1, 0),
        2.0 - P(0, 0, 0, 1) - P(0, 0, 1, 0) - P(0, 0, 1, 1) - P(1, 0, 1, 0) - P(1, 0, 1, 1),
        2.0 - P(0, 1, 0, 0) - P(0, 1, 0, 1) - P(1, 1, 0, 0) - P(1, 1, 0, 1) - P(0, 1, 1, 1),
        1.0 + P(0, 0, 0, 0) + P(1, 0, 0, 0) - P(0, 1, 0, 1) + P(0, 0, 1, 0) + P(1, 0, 1, 0) -
            P(0, 1, 1, 1),
        1.0 - P(0, 1, 1, 0) - P(1, 1, 1, 0) + P(0, 0, 0, 1) + P(1, 0, 0, 1) + P(1, 1, 0, 1) +
            P(0, 0, 1, 1) + P(1, 0, 1, 1),
        1.0,
    };
    return closed_interval(lower, upper);
}

bool has_closed_form(EstimandId e) {
    switch (e.tag) {
        case EstimandTag::TE:
        case EstimandTag::CDE:
            return true;
        case EstimandTag::NDE:
            return e.bits == std::array<int, 3>{0, 0, 0};
        case EstimandTag::JNIE:
            return e.bits[0] == 1;
        case EstimandTag::MS2NIE1:
            return e.bits[0] == 1 && e.bits[1] == 1;
        case EstimandTag::NIE2:
            return e.bits == std::array<int, 3>{1, 0, 0};
        default:
            return false;
    }
}

BoundInterval closed_form_bounds(const ObservedDistribution& dist, EstimandId e) {
    if (!has_closed_form(e))
        throw NoClosedForm("no closed-form bounds for " + e.name() + "; use the LP oracle");
    switch (e.tag) {
        case EstimandTag::TE: {
            const double te = total_effect(dist);
            BoundInterval out;
            out.lower = out.upper = te;
            out.method = BoundMethod::ClosedForm;
            out.active_lower = out.active_upper = 0;
            out.sharp = true;
            return out;
        }
        case EstimandTag::CDE:
            return cde_bounds(dist, e.bits[0], e.bits[1]);
        case EstimandTag::NDE:
            return nde000_bounds(dist);
        case EstimandTag::JNIE:
            return jnie1_bounds(dist);
        case EstimandTag::MS2NIE1:
            return ms2nie1_11_bounds(dist);
        case EstimandTag::NIE2:
            return nie2_100_bounds(dist);
        default:
            throw NoClosedForm("no closed-form bounds for " + e.name());
    }
}

BoundInterval subtraction_procedure(const BoundInterval& theta,
                                    std::span<const BoundInterval> parts) {
    BoundInterval out;
    out.lower = theta.lower;
    out.upper = theta.upper;
    for (const BoundInterval& part : parts) {
        out.lower -= part.upper;
        out.upper -= part.lower;
    }
    out.method = BoundMethod::Subtraction;
    const bool theta_identified = theta.lower == theta.upper;
    out.sharp = theta_identified && parts.size() == 1;
    return out;
}

BoundInterval subtraction_procedure(double theta_identified,
                                    std::span<const BoundInterval> parts) {
    BoundInterval theta;
    theta.lower = theta.upper = theta_identified;
    return subtraction_procedure(theta, parts);
}

BoundInterval addition_procedure(std::span<const BoundInterval> parts) {
    if (parts.empty()) throw MalformedInput("addition procedure needs at least one part");
    BoundInterval out;
    out.lower = 0.0;
    out.upper = 0.0;
    for (const BoundInterval& part : parts) {
        out.lower += part.lower;
        out.upper += part.upper;
    }
    out.method = BoundMethod::Addition;
    out.sharp = false;
    return out;
}

}  // namespace medbounds
