#include "medbounds/observed.hpp"

#include <cmath>
#include <string>

#include "medbounds/errors.hpp"

namespace medbounds {

ObservedDistribution ObservedDistribution::uniform() {
    std::array<double, kCells> cells;
    cells.fill(0.125);
    return ObservedDistribution(cells);
}

double ObservedDistribution::arm_sum(int x) const {
    double sum = 0.0;
    for (int y = 0; y < 2; ++y)
        for (int m1 = 0; m1 < 2; ++m1)
            for (int m2 = 0; m2 < 2; ++m2) sum += p(y, m1, m2, x);
    return sum;
}

void RecordTable::add(int x, int m1, int m2, int y) {
    rows_.push_back(Record{static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(m1),
                           static_cast<std::uint8_t>(m2), static_cast<std::uint8_t>(y)});
}

std::size_t RecordTable::arm_size(int x) const {
    std::size_t n = 0;
    for (const Record& r : rows_)
        if (r.x == x) ++n;
    return n;
}

std::array<long, 8> RecordTable::arm_counts(int x) const {
    std::array<long, 8> counts{};
    for (const Record& r : rows_)
        if (r.x == x) ++counts[4 * r.y + 2 * r.m1 + r.m2];
    return counts;
}

const ObservedDistribution& validate(const ObservedDistribution& dist) {
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int m1 = 0; m1 < 2; ++m1)
                for (int m2 = 0; m2 < 2; ++m2) {
                    double v = dist.p(y, m1, m2, x);
                    if (!(v >= 0.0 && v <= 1.0))
                        throw NegativeProbability(
                            "p(y=" + std::to_string(y) + ",m1=" + std::to_string(m1) +
                            ",m2=" + std::to_string(m2) + "|x=" + std::to_string(x) +
                            ") = " + std::to_string(v) + " outside [0,1]");
                }
    for (int x = 0; x < 2; ++x) {
        double sum = dist.arm_sum(x);
        if (std::abs(sum - 1.0) > kNormalizationTol)
            throw ArmNotNormalized("arm " + std::to_string(x) + " sums to " +
                                   std::to_string(sum));
    }
    return dist;
}

ObservedDistribution estimate_distribution(const RecordTable& records) {
    const std::size_t n0 = records.arm_size(0);
    const std::size_t n1 = records.arm_size(1);
    if (n0 == 0 || n1 == 0)
        throw EmptyArm("arm sizes n0=" + std::to_string(n0) + ", n1=" + std::to_string(n1) +
                       "; both arms must be nonempty");

    ObservedDistribution dist;
    for (int x = 0; x < 2; ++x) {
        const auto counts = records.arm_counts(x);
        const double n = static_cast<double>(x == 0 ? n0 : n1);
        for (int y = 0; y < 2; ++y)
            for (int m1 = 0; m1 < 2; ++m1)
                for (int m2 = 0; m2 < 2; ++m2)
                    dist.set(y, m1, m2, x, static_cast<double>(counts[4 * y + 2 * m1 + m2]) / n);
    }
    return dist;
}

double total_effect(const ObservedDistribution& dist) {
    double p1 = 0.0, p0 = 0.0;
    for (int m1 = 0; m1 < 2; ++m1)
        for (int m2 = 0; m2 < 2; ++m2) {
            p1 += dist.p(1, m1, m2, 1);
            p0 += dist.p(1, m1, m2, 0);
        }
    return p1 - p0;
}

}  // namespace medbounds
